#ifndef KAPPA_HOPFCORE_HPP
#define KAPPA_HOPFCORE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kappa/report.hpp"
#include "kappa/scalars.hpp"

namespace kappa {

/// One generator of a presented algebra.  `cls` groups generators into
/// ordering classes (e.g. rotations / boosts / momenta); `weight` feeds the
/// termination measure: every rewrite must strictly decrease
/// (total weight, id-inversions, length) lexicographically on any word it
/// touches, which add_rule enforces at construction time.
struct GeneratorSpec {
  std::string name;
  int cls = 0;
  int idx = 0;
  int weight = 1;
};

using Word = std::vector<int>;                    // sequence of generator ids
using AlgebraElement = std::map<Word, Coefficient>;

/// Element of a tensor power of the algebra (rank 2 for coproducts, rank 3
/// for coassociativity checks).
struct TensorElement {
  int rank = 2;
  std::map<std::vector<Word>, Coefficient> terms;
};

inline void ae_add_term(AlgebraElement& x, const Word& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = x.find(w);
  if (it == x.end()) {
    x.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

inline AlgebraElement ae_zero() { return {}; }
inline AlgebraElement ae_one() { return {{Word{}, coeff_one()}}; }
inline AlgebraElement ae_gen(int g) { return {{Word{g}, coeff_one()}}; }
inline AlgebraElement ae_word(const Word& w, const Coefficient& c = coeff_one()) {
  AlgebraElement x;
  ae_add_term(x, w, c);
  return x;
}

inline AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r = a;
  for (const auto& [w, c] : b) ae_add_term(r, w, c);
  return r;
}
inline AlgebraElement ae_neg(const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, c] : a) r.emplace(w, -c);
  return r;
}
inline AlgebraElement ae_sub(const AlgebraElement& a, const AlgebraElement& b) {
  return ae_add(a, ae_neg(b));
}
inline AlgebraElement ae_scale(const AlgebraElement& a, const Coefficient& s) {
  AlgebraElement r;
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a) {
    Coefficient v = c * s;
    if (!v.is_zero()) r.emplace(w, v);
  }
  return r;
}

inline void te_add_term(TensorElement& t, const std::vector<Word>& ws, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = t.terms.find(ws);
  if (it == t.terms.end()) {
    t.terms.emplace(ws, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.terms.erase(it);
  }
}

inline TensorElement te_sub(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [ws, c] : b.terms) te_add_term(r, ws, -c);
  return r;
}

/// Thrown when the rewrite budget runs out; carries the offending word so the
/// caller can report where normalization failed to settle.
struct RewriteBudgetError : std::runtime_error {
  explicit RewriteBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

class HopfPresentation {
public:
  int add_generator(const std::string& name, int cls, int idx, int weight) {
    gens_.push_back({name, cls, idx, weight});
    coproduct_.emplace_back();
    counit_.push_back(coeff_zero());
    antipode_.emplace_back();
    return (int)gens_.size() - 1;
  }

  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  int find_generator(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return (int)i;
    throw std::out_of_range("no generator named " + name);
  }

  /// Install the rewrite  g_a g_b -> rhs.  Refuses rules that break the
  /// termination measure.
  void add_rule(int a, int b, const AlgebraElement& rhs) {
    Word lhs{a, b};
    long wl = word_weight(lhs);
    long il = word_inversions(lhs);
    for (const auto& [w, c] : rhs) {
      long ww = word_weight(w);
      if (ww < wl) continue;
      if (ww > wl)
        throw std::logic_error("rule " + word_str(lhs) + " -> " + word_str(w) +
                               " increases weight");
      if (same_multiset(w, lhs)) {
        if (word_inversions(w) < il) continue;
        throw std::logic_error("rule " + word_str(lhs) + " -> " + word_str(w) +
                               " does not reduce inversions");
      }
      if (proper_submultiset(w, lhs) && word_inversions(w) <= il) continue;
      throw std::logic_error("rule " + word_str(lhs) + " -> " + word_str(w) +
                             " fails the termination measure");
    }
    rules_[{a, b}] = rhs;
    if (rhs.size() == 1 && rhs.begin()->first == Word{b, a} &&
        rhs.begin()->second == coeff_one())
      swap_rules_.insert({a, b});
    else
      swap_rules_.erase({a, b});
    nf_cache_.clear();
    cop_cache_.clear();
    antipode_cache_.clear();
  }

  void set_coproduct(int g, const TensorElement& t) {
    coproduct_[g] = t;
    cop_cache_.clear();
  }
  void set_counit(int g, const Coefficient& c) { counit_[g] = c; }
  void set_antipode(int g, const AlgebraElement& s) {
    antipode_[g] = s;
    antipode_cache_.clear();
  }

  const std::map<std::pair<int, int>, AlgebraElement>& rules() const { return rules_; }

  /// Optional quotient test: declares a normal-formed element zero when it
  /// lies in an ideal the rewrite system does not see (kgroup orthogonality).
  std::function<bool(const AlgebraElement&)> scalar_zero_hook;
  std::function<bool(const TensorElement&)> tensor_zero_hook;

  // -- rewriting ------------------------------------------------------------

  AlgebraElement normal_form(const AlgebraElement& x, long budget = 2000000) const {
    AlgebraElement r;
    for (const auto& [w, c] : x) {
      if (c.is_zero()) continue;
      for (const auto& [nw, nc] : word_normal_form(w, budget)) ae_add_term(r, nw, nc * c);
    }
    return r;
  }
  /// Same result set reached through random redex choices; disagreement with
  /// the leftmost strategy signals non-confluence of the rule system.
  AlgebraElement normal_form_randomized(const AlgebraElement& x, std::mt19937& rng,
                                        long budget = 2000000) const {
    return normal_form_impl(x, budget, &rng);
  }

  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement raw;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        ae_add_term(raw, w, ca * cb);
      }
    return normal_form(raw);
  }

  bool is_zero(const AlgebraElement& x) const {
    AlgebraElement n = normal_form(x);
    if (n.empty()) return true;
    return scalar_zero_hook ? scalar_zero_hook(n) : false;
  }
  bool is_zero(const TensorElement& t) const {
    TensorElement n = te_normalize(t);
    if (n.terms.empty()) return true;
    return tensor_zero_hook ? tensor_zero_hook(n) : false;
  }

  // -- Hopf structure maps (extended to all of the algebra) -----------------

  Coefficient counit(const AlgebraElement& x) const {
    Coefficient r = coeff_zero();
    for (const auto& [w, c] : x) {
      Coefficient t = c;
      for (int g : w) t *= counit_[g];
      r += t;
    }
    return r;
  }

  AlgebraElement antipode(const AlgebraElement& x) const {
    AlgebraElement r;
    for (const auto& [w, c] : x)
      for (const auto& [aw, ac] : word_antipode(w)) ae_add_term(r, aw, ac * c);
    return normal_form(r);
  }

  TensorElement coproduct(const AlgebraElement& x) const {
    TensorElement r;
    r.rank = 2;
    for (const auto& [w, c] : x)
      for (const auto& [ws, tc] : word_coproduct(w).terms) te_add_term(r, ws, tc * c);
    return r;
  }

  /// Slotwise product of tensors of equal rank, normal-formed per slot.
  TensorElement te_multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement r;
    r.rank = a.rank;
    for (const auto& [wa, ca] : a.terms)
      for (const auto& [wb, cb] : b.terms) {
        std::vector<Word> ws(a.rank);
        for (int s = 0; s < a.rank; ++s) {
          ws[s] = wa[s];
          ws[s].insert(ws[s].end(), wb[s].begin(), wb[s].end());
        }
        te_add_term(r, ws, ca * cb);
      }
    return te_normalize(r);
  }

  TensorElement te_normalize(const TensorElement& t) const {
    TensorElement r;
    r.rank = t.rank;
    for (const auto& [ws, c] : t.terms) {
      std::vector<AlgebraElement> nf(t.rank);
      for (int s = 0; s < t.rank; ++s) nf[s] = normal_form(ae_word(ws[s]));
      std::vector<std::pair<std::vector<Word>, Coefficient>> acc = {{{}, c}};
      for (int s = 0; s < t.rank; ++s) {
        std::vector<std::pair<std::vector<Word>, Coefficient>> next;
        for (const auto& [pw, pc] : acc)
          for (const auto& [w2, c2] : nf[s]) {
            auto ws2 = pw;
            ws2.push_back(w2);
            next.emplace_back(std::move(ws2), pc * c2);
          }
        acc = std::move(next);
      }
      for (const auto& [ws2, c2] : acc) te_add_term(r, ws2, c2);
    }
    return r;
  }

  /// Apply the coproduct to one slot of a tensor, raising the rank by one.
  TensorElement apply_delta_slot(const TensorElement& t, int slot) const {
    TensorElement r;
    r.rank = t.rank + 1;
    for (const auto& [ws, c] : t.terms) {
      const TensorElement& d = word_coproduct(ws[slot]);
      for (const auto& [dw, dc] : d.terms) {
        std::vector<Word> out;
        for (int s = 0; s < t.rank; ++s) {
          if (s == slot) {
            out.push_back(dw[0]);
            out.push_back(dw[1]);
          } else {
            out.push_back(ws[s]);
          }
        }
        te_add_term(r, out, c * dc);
      }
    }
    return r;
  }

  /// m(S (x) id) Delta x  and  m(id (x) S) Delta x.
  AlgebraElement antipode_convolution(const AlgebraElement& x, bool s_on_left) const {
    TensorElement d = coproduct(x);
    AlgebraElement r;
    for (const auto& [ws, c] : d.terms) {
      AlgebraElement left = s_on_left ? antipode(ae_word(ws[0])) : ae_word(ws[0]);
      AlgebraElement right = s_on_left ? ae_word(ws[1]) : antipode(ae_word(ws[1]));
      AlgebraElement prod = multiply(left, right);
      for (const auto& [pw, pc] : prod) ae_add_term(r, pw, pc * c);
    }
    return normal_form(r);
  }

  // -- rendering ------------------------------------------------------------

  std::string word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      s += gens_[w[i]].name;
    }
    return s;
  }
  std::string elem_str(const AlgebraElement& x) const {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : x) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*" + word_str(w);
    }
    return s;
  }
  std::string tensor_str(const TensorElement& t) const {
    if (t.terms.empty()) return "0";
    std::string s;
    for (const auto& [ws, c] : t.terms) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*";
      for (size_t i = 0; i < ws.size(); ++i) {
        if (i) s += " (x) ";
        s += word_str(ws[i]);
      }
    }
    return s;
  }

  static TensorElement tensor_one(int rank) {
    TensorElement t;
    t.rank = rank;
    t.terms.emplace(std::vector<Word>(rank), coeff_one());
    return t;
  }

  long word_weight(const Word& w) const {
    long s = 0;
    for (int g : w) s += gens_[g].weight;
    return s;
  }
  static long word_inversions(const Word& w) {
    long n = 0;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++n;
    return n;
  }

private:
  static bool same_multiset(const Word& a, const Word& b) {
    Word x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
  static bool proper_submultiset(const Word& a, const Word& b) {
    Word x = a, y = b;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x.size() >= y.size()) return false;
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  }

  // Word-level memoization.  Tensor operations revisit the same slot words
  // many times, so normal forms, coproducts, and antipodes of bare words are
  // cached; the caches are flushed whenever a rule or structure map changes.
  const AlgebraElement& word_normal_form(const Word& w, long budget) const {
    auto it = nf_cache_.find(w);
    if (it != nf_cache_.end()) return it->second;
    AlgebraElement nf = normal_form_impl(ae_word(w), budget, nullptr);
    return nf_cache_.emplace(w, std::move(nf)).first->second;
  }

  const TensorElement& word_coproduct(const Word& w) const {
    auto it = cop_cache_.find(w);
    if (it != cop_cache_.end()) return it->second;
    TensorElement t;
    if (w.empty()) {
      t = tensor_one(2);
    } else if (w.size() == 1) {
      t = te_normalize(coproduct_[w[0]]);
    } else {
      Word head(w.begin(), std::prev(w.end()));
      t = te_multiply(word_coproduct(head), coproduct_[w.back()]);
    }
    return cop_cache_.emplace(w, std::move(t)).first->second;
  }

  const AlgebraElement& word_antipode(const Word& w) const {
    auto it = antipode_cache_.find(w);
    if (it != antipode_cache_.end()) return it->second;
    AlgebraElement s;
    if (w.empty()) {
      s = ae_one();
    } else {
      // S is an anti-homomorphism: S(g w') = S(w') S(g)
      Word tail(std::next(w.begin()), w.end());
      s = multiply(word_antipode(tail), antipode_[w.front()]);
    }
    return antipode_cache_.emplace(w, std::move(s)).first->second;
  }

  AlgebraElement normal_form_impl(const AlgebraElement& x, long budget,
                                  std::mt19937* rng) const {
    AlgebraElement result;
    std::vector<std::pair<Word, Coefficient>> stack(x.begin(), x.end());
    long steps = 0;
    while (!stack.empty()) {
      auto [w, c] = std::move(stack.back());
      stack.pop_back();
      if (c.is_zero()) continue;
      if (!rng) {
        // pure transpositions (rhs = swapped word, coefficient 1) are applied
        // in place; they dominate when many generators simply commute
        size_t i = 0;
        while (i + 1 < w.size()) {
          if (swap_rules_.count({w[i], w[i + 1]})) {
            if (++steps > budget)
              throw RewriteBudgetError("normal_form: rewrite budget exhausted on " +
                                       word_str(w));
            std::swap(w[i], w[i + 1]);
            if (i > 0) --i;
          } else {
            ++i;
          }
        }
      }
      std::vector<int> redexes;
      for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rules_.count({w[i], w[i + 1]})) {
          redexes.push_back((int)i);
          if (!rng) break;  // leftmost strategy needs only the first
        }
      if (redexes.empty()) {
        ae_add_term(result, w, c);
        continue;
      }
      if (++steps > budget)
        throw RewriteBudgetError("normal_form: rewrite budget exhausted on " + word_str(w));
      int pos = redexes[0];
      if (rng && redexes.size() > 1)
        pos = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(*rng)];
      const AlgebraElement& rhs = rules_.at({w[pos], w[pos + 1]});
      for (const auto& [rw, rc] : rhs) {
        Word nw(w.begin(), w.begin() + pos);
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), w.begin() + pos + 2, w.end());
        stack.emplace_back(std::move(nw), c * rc);
      }
    }
    return result;
  }

  std::vector<GeneratorSpec> gens_;
  std::map<std::pair<int, int>, AlgebraElement> rules_;
  std::set<std::pair<int, int>> swap_rules_;
  std::vector<TensorElement> coproduct_;
  std::vector<Coefficient> counit_;
  std::vector<AlgebraElement> antipode_;
  mutable std::map<Word, AlgebraElement> nf_cache_;
  mutable std::map<Word, TensorElement> cop_cache_;
  mutable std::map<Word, AlgebraElement> antipode_cache_;
};

// ---------------------------------------------------------------------------
// Hopf axiom verification
// ---------------------------------------------------------------------------

inline Word random_word(const HopfPresentation& P, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, (int)P.generators().size() - 1);
  Word w((size_t)len(rng));
  for (auto& g : w) g = pick(rng);
  return w;
}

/// Machine check of the full Hopf-algebra structure of a presentation:
/// confluence probes, coassociativity, counit and antipode laws on the
/// generators, compatibility of Delta / epsilon / S with every rewrite rule,
/// and the same laws on random monomials up to max_deg.
inline Report check_hopf_axioms(const HopfPresentation& P, int max_deg, int samples,
                                unsigned long seed) {
  Report rep;
  rep.suite = "hopf-axioms";
  rep.seed = seed;
  std::mt19937 rng((unsigned)seed);

  {
    bool ok = true;
    std::string detail;
    for (int t = 0; t < samples && ok; ++t) {
      Word w = random_word(P, rng, max_deg);
      AlgebraElement a = P.normal_form(ae_word(w));
      AlgebraElement b = P.normal_form_randomized(ae_word(w), rng);
      if (a != b) {
        ok = false;
        detail = "strategies disagree on " + P.word_str(w);
      }
    }
    rep.add("confluence-probe", ok, detail);
  }

  int n = (int)P.generators().size();
  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g < n && ok; ++g) {
      TensorElement l = P.apply_delta_slot(P.coproduct(ae_gen(g)), 0);
      TensorElement r = P.apply_delta_slot(P.coproduct(ae_gen(g)), 1);
      if (!P.is_zero(te_sub(l, r))) {
        ok = false;
        detail = "coassociativity fails on " + P.generators()[g].name;
      }
    }
    rep.add("coassociativity-generators", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g < n && ok; ++g) {
      TensorElement d = P.coproduct(ae_gen(g));
      AlgebraElement l, r;
      for (const auto& [ws, c] : d.terms) {
        ae_add_term(l, ws[1], c * P.counit(ae_word(ws[0])));
        ae_add_term(r, ws[0], c * P.counit(ae_word(ws[1])));
      }
      if (!P.is_zero(ae_sub(l, ae_gen(g))) || !P.is_zero(ae_sub(r, ae_gen(g)))) {
        ok = false;
        detail = "counit law fails on " + P.generators()[g].name;
      }
    }
    rep.add("counit-generators", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int g = 0; g < n && ok; ++g) {
      AlgebraElement target = ae_scale(ae_one(), P.counit(ae_gen(g)));
      for (bool left : {true, false}) {
        AlgebraElement conv = P.antipode_convolution(ae_gen(g), left);
        if (!P.is_zero(ae_sub(conv, target))) {
          ok = false;
          detail = std::string("antipode law (S on ") + (left ? "left" : "right") +
                   ") fails on " + P.generators()[g].name;
          break;
        }
      }
    }
    rep.add("antipode-generators", ok, detail);
  }

  {
    bool dok = true, eok = true, sok = true;
    std::string ddet, edet, sdet;
    for (const auto& [lhs, rhs] : P.rules()) {
      auto [a, b] = lhs;
      std::string rn = P.generators()[a].name + "*" + P.generators()[b].name;
      TensorElement dl = P.te_multiply(P.coproduct(ae_gen(a)), P.coproduct(ae_gen(b)));
      if (dok && !P.is_zero(te_sub(dl, P.coproduct(rhs)))) {
        dok = false;
        ddet = "Delta incompatible with rule " + rn;
      }
      Coefficient el = P.counit(ae_gen(a)) * P.counit(ae_gen(b));
      if (eok && !(el - P.counit(rhs)).is_zero()) {
        eok = false;
        edet = "epsilon incompatible with rule " + rn;
      }
      AlgebraElement sl = P.multiply(P.antipode(ae_gen(b)), P.antipode(ae_gen(a)));
      if (sok && !P.is_zero(ae_sub(sl, P.antipode(rhs)))) {
        sok = false;
        sdet = "S incompatible with rule " + rn;
      }
    }
    rep.add("coproduct-rule-compatibility", dok, ddet);
    rep.add("counit-rule-compatibility", eok, edet);
    rep.add("antipode-rule-compatibility", sok, sdet);
  }

  {
    bool cok = true, aok = true;
    std::string cdet, adet;
    for (int t = 0; t < samples && (cok || aok); ++t) {
      Word w = random_word(P, rng, max_deg);
      AlgebraElement x = ae_word(w);
      if (cok) {
        TensorElement l = P.apply_delta_slot(P.coproduct(x), 0);
        TensorElement r = P.apply_delta_slot(P.coproduct(x), 1);
        if (!P.is_zero(te_sub(l, r))) {
          cok = false;
          cdet = "coassociativity fails on " + P.word_str(w);
        }
      }
      if (aok) {
        AlgebraElement target = ae_scale(ae_one(), P.counit(x));
        if (!P.is_zero(ae_sub(P.antipode_convolution(x, true), target))) {
          aok = false;
          adet = "antipode law fails on " + P.word_str(w);
        }
      }
    }
    rep.add("coassociativity-random-monomials", cok, cdet);
    rep.add("antipode-random-monomials", aok, adet);
  }

  return rep;
}

}  // namespace kappa

#endif
