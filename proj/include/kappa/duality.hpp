#ifndef KAPPA_DUALITY_HPP
#define KAPPA_DUALITY_HPP

#include <map>
#include <unordered_map>
#include <tuple>
#include <vector>

#include "kappa/kalgebra.hpp"
#include "kappa/kgroup.hpp"

namespace kappa {

/// Hopf pairing between the kappa-Poincare algebra (left argument) and the
/// kappa-Poincare group (right argument):
///   <P_mu, v^nu> = i delta,  <M_{mu nu}, L^a_b> = i g_bb (d^a_mu d^b_nu -
///   d^a_nu d^b_mu)   (second-index raising L^{mu nu} = L^mu_rho g^{rho nu}),
///   <A, f> = sum_n (-1/k)^n/n! <P0^n, f>   (terminates at the v-degree of f),
/// extended to products through the coproducts:
///   <XY, f> = <X (x) Y, Delta f>,   <X, fg> = <Delta X, f (x) g>.
/// Both expansion orders are implemented ("x_first" splits the algebra factor
/// first, the other splits the group factor first); their agreement is a
/// verified consistency property, not an assumption.  Coproducts of words are
/// expanded structurally (concatenation only, no rewriting), so pairing a
/// rewrite-rule kernel with anything is a genuine check that the pairing
/// respects the relations.
class DualityPairing {
public:
  /// `opposite_raising` flips the M-Lambda table to first-index raising
  /// (the documented negative control).
  explicit DualityPairing(bool opposite_raising = false)
      : alg_(build_kalgebra()), grp_(build_kgroup()), opposite_(opposite_raising) {}

  const KAlgebra& algebra() const { return alg_; }
  const KGroup& group() const { return grp_; }

  Coefficient pair(const AlgebraElement& x, const AlgebraElement& f,
                   bool x_first = true) const {
    Coefficient r = coeff_zero();
    for (const auto& [xw, xc] : x)
      for (const auto& [fw, fc] : f) r += xc * fc * pair_words(xw, fw, x_first);
    return r;
  }

  Coefficient pair_words(const Word& xw, const Word& fw, bool x_first) const {
    auto key = std::make_tuple(x_first, xw, fw);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Coefficient r = pair_words_impl(xw, fw, x_first);
    memo_.emplace(std::move(key), r);
    return r;
  }

  /// Group counit: L^m_n -> delta, v -> 0.
  static Coefficient eps_group(const Word& fw) {
    for (int id : fw)
      if (id >= 16 || id / 4 != id % 4) return coeff_zero();
    return coeff_one();
  }
  /// Algebra counit: A, A^-1 -> 1, everything else -> 0.
  static Coefficient eps_alg(const Word& xw) {
    for (int id : xw)
      if (id < 10) return coeff_zero();
    return coeff_one();
  }

  int v_degree(const Word& fw) const {
    int d = 0;
    for (int id : fw) d += id >= 16;
    return d;
  }

private:
  using Split = std::vector<std::tuple<Word, Word, Coefficient>>;

  /// Delta(w) expanded structurally: the tensor product of the generator
  /// coproducts with slot words concatenated, never rewritten.  Cached per
  /// word and side (words recur constantly during the recursive expansion).
  const Split& raw_delta(const HopfPresentation& P, const Word& w) const {
    auto& cache = &P == &alg_.P ? alg_delta_ : grp_delta_;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    return cache.emplace(w, raw_delta_impl(P, w)).first->second;
  }

  static Split raw_delta_impl(const HopfPresentation& P, const Word& w) {
    Split acc{{Word{}, Word{}, coeff_one()}};
    for (int g : w) {
      TensorElement d = P.coproduct(ae_gen(g));
      Split next;
      for (const auto& [w1, w2, c] : acc)
        for (const auto& [ws, dc] : d.terms) {
          Word n1 = w1, n2 = w2;
          n1.insert(n1.end(), ws[0].begin(), ws[0].end());
          n2.insert(n2.end(), ws[1].begin(), ws[1].end());
          next.emplace_back(std::move(n1), std::move(n2), c * dc);
        }
      acc = std::move(next);
    }
    return acc;
  }

  Coefficient gen_pair(int x, int fg) const {
    const std::array<int, 4> g{1, -1, -1, -1};
    if (x >= 6 && x < 10 && fg >= 16)  // <P_mu, v^nu> = i delta
      return x - 6 == fg - 16 ? coeff_i() : coeff_zero();
    if (x < 6 && fg < 16) {  // <M_{mu nu}, L^a_b>
      static const int idx[6][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 0}, {2, 0}, {3, 0}};
      int mu = idx[x][0], nu = idx[x][1];
      int a = fg / 4, b = fg % 4;
      int raise = opposite_ ? g[a] : g[b];
      int val = (a == mu && b == nu) - (a == nu && b == mu);
      return coeff_i() * coeff_rat(raise * val);
    }
    return coeff_zero();
  }

  Coefficient pair_words_impl(const Word& xw, const Word& fw, bool x_first) const {
    if (xw.empty()) return eps_group(fw);
    if (fw.empty()) return eps_alg(xw);

    // group-like exponential: expand A^{+-1} as its terminating P0 series
    if (xw.size() == 1 && (xw[0] == alg_.a() || xw[0] == alg_.a_inv())) {
      int vdeg = v_degree(fw);
      Coefficient sgn = coeff_rat(xw[0] == alg_.a() ? -1 : 1);
      Coefficient r = coeff_zero(), c = coeff_one();
      for (int n = 0; n <= vdeg; ++n) {
        if (n > 0) c = c * sgn / (coeff_kappa() * coeff_rat(n));
        r += c * pair_words(Word((size_t)n, alg_.p(0)), fw, x_first);
      }
      return r;
    }

    if (x_first ? xw.size() >= 2 : (fw.size() <= 1 && xw.size() >= 2)) {
      // <x1 X', f> = sum <x1, f_(1)> <X', f_(2)>
      Word x1{xw[0]}, xrest(xw.begin() + 1, xw.end());
      Coefficient r = coeff_zero();
      for (const auto& [f1, f2, c] : raw_delta(grp_.P, fw))
        r += c * pair_words(x1, f1, x_first) * pair_words(xrest, f2, x_first);
      return r;
    }
    if (fw.size() >= 2) {
      // <X, f1 F'> = sum <X_(1), f1> <X_(2), F'>
      Word f1{fw[0]}, frest(fw.begin() + 1, fw.end());
      Coefficient r = coeff_zero();
      for (const auto& [w1, w2, c] : raw_delta(alg_.P, xw))
        r += c * pair_words(w1, f1, x_first) * pair_words(w2, frest, x_first);
      return r;
    }
    return gen_pair(xw[0], fw[0]);
  }

  struct KeyHash {
    size_t operator()(const std::tuple<bool, Word, Word>& k) const {
      size_t h = std::get<0>(k) ? 0x9e3779b97f4a7c15ULL : 0;
      for (int v : std::get<1>(k)) h = h * 1099511628211ULL + (size_t)(v + 1);
      h = h * 1099511628211ULL + 0xff;
      for (int v : std::get<2>(k)) h = h * 1099511628211ULL + (size_t)(v + 1);
      return h;
    }
  };

  struct WordHash {
    size_t operator()(const Word& w) const {
      size_t h = 1469598103934665603ULL;
      for (int v : w) h = h * 1099511628211ULL + (size_t)(v + 1);
      return h;
    }
  };

  KAlgebra alg_;
  KGroup grp_;
  bool opposite_;
  mutable std::unordered_map<std::tuple<bool, Word, Word>, Coefficient, KeyHash> memo_;
  mutable std::unordered_map<Word, Split, WordHash> alg_delta_, grp_delta_;
};

/// Two-route agreement, relation kernels, unit/counit and antipode
/// compatibility, the pinned <P1, v1 v0> value, and termination of the
/// A-series.  `opposite_raising` runs the negative control.
inline Report duality_consistency_suite(int max_deg, int samples, unsigned long seed,
                                        bool opposite_raising = false) {
  DualityPairing D(opposite_raising);
  const HopfPresentation& AP = D.algebra().P;
  const HopfPresentation& GP = D.group().P;
  Report rep;
  rep.suite = "duality";
  rep.seed = seed;
  std::mt19937 rng((unsigned)seed);

  auto rand_words = [&](int n, int len) {
    std::vector<std::pair<Word, Word>> ws;
    for (int t = 0; t < n; ++t)
      ws.emplace_back(random_word(AP, rng, len), random_word(GP, rng, len));
    return ws;
  };

  {  // two-route agreement on random pairs
    bool ok = true;
    std::string det;
    for (const auto& [xw, fw] : rand_words(samples, max_deg))
      if (D.pair_words(xw, fw, true) != D.pair_words(xw, fw, false)) {
        ok = false;
        det = "routes disagree on <" + AP.word_str(xw) + ", " + GP.word_str(fw) + ">";
        break;
      }
    rep.add("two-route-agreement", ok,
            ok ? std::to_string(samples) + " random pairs agree" : det);
  }

  // every word of degree <= 2 over the dual side, plus random degree <= max_deg
  // samples; exhaustive low degree is what catches a wrong pairing table
  auto probe_words = [&](const HopfPresentation& P) {
    std::vector<Word> ws;
    int n = (int)P.generators().size();
    for (int a = 0; a < n; ++a) ws.push_back({a});
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) ws.push_back({a, b});
    return ws;
  };

  {  // <X, lhs - rhs> = 0 for every group rewrite rule
    bool ok = true;
    std::string det;
    std::vector<Word> xs = probe_words(AP);
    for (const auto& [lhs, rhs] : GP.rules()) {
      AlgebraElement ker = ae_word({lhs.first, lhs.second});
      ker = ae_sub(ker, rhs);
      for (const auto& xw : xs)
        if (!D.pair(ae_word(xw), ker).is_zero()) {
          ok = false;
          det = "group rule " + GP.word_str({lhs.first, lhs.second}) +
                " not annihilated against " + AP.word_str(xw);
          break;
        }
      if (!ok) break;
    }
    rep.add("group-relation-kernel", ok, det);
  }

  {  // <lhs - rhs, f> = 0 for every algebra rewrite rule
    bool ok = true;
    std::string det;
    std::vector<Word> fs = probe_words(GP);
    for (const auto& [lhs, rhs] : AP.rules()) {
      AlgebraElement ker = ae_word({lhs.first, lhs.second});
      ker = ae_sub(ker, rhs);
      for (const auto& fw : fs)
        if (!D.pair(ker, ae_word(fw)).is_zero()) {
          ok = false;
          det = "algebra rule " + AP.word_str({lhs.first, lhs.second}) +
                " not annihilated against " + GP.word_str(fw);
          break;
        }
      if (!ok) break;
    }
    // deeper random probes on a sample of rules from each side
    std::vector<std::pair<int, int>> gkeys, akeys;
    for (const auto& [l, r] : GP.rules()) gkeys.push_back(l);
    for (const auto& [l, r] : AP.rules()) akeys.push_back(l);
    for (int t = 0; t < 20 && ok; ++t) {
      auto gk = gkeys[rng() % gkeys.size()];
      AlgebraElement gker = ae_sub(ae_word({gk.first, gk.second}), GP.rules().at(gk));
      if (!D.pair(ae_word(random_word(AP, rng, max_deg)), gker).is_zero()) ok = false;
      auto akk = akeys[rng() % akeys.size()];
      AlgebraElement aker = ae_sub(ae_word({akk.first, akk.second}), AP.rules().at(akk));
      if (!D.pair(aker, ae_word(random_word(GP, rng, max_deg))).is_zero()) ok = false;
      if (!ok) det = "random deep kernel probe failed";
    }
    rep.add("algebra-relation-kernel", ok, det);
  }

  {  // unit/counit compatibility
    bool ok = true;
    for (const auto& [xw, fw] : rand_words(samples / 2 + 1, max_deg)) {
      if (D.pair_words(xw, {}, true) != AP.counit(ae_word(xw))) ok = false;
      if (D.pair_words({}, fw, true) != GP.counit(ae_word(fw))) ok = false;
    }
    rep.add("unit-counit-compatibility", ok, "");
  }

  {  // <P1, v1 v0> = 1/k on both routes
    Word xw{D.algebra().p(1)};
    Word fw{D.group().v(1), D.group().v(0)};
    Coefficient want = coeff_one() / coeff_kappa();
    bool ok = D.pair_words(xw, fw, true) == want && D.pair_words(xw, fw, false) == want;
    rep.add("p1-pairs-v1v0", ok, ok ? "both routes give 1/k" : "value mismatch");
  }

  {  // <S(X), f> = <X, S(f)> on random degree-2 pairs
    bool ok = true;
    std::string det;
    for (const auto& [xw, fw] : rand_words(samples / 2 + 1, 2))
      if (D.pair(AP.antipode(ae_word(xw)), ae_word(fw)) !=
          D.pair(ae_word(xw), GP.antipode(ae_word(fw)))) {
        ok = false;
        det = "antipodes disagree on <" + AP.word_str(xw) + ", " + GP.word_str(fw) + ">";
        break;
      }
    rep.add("antipode-compatibility", ok, det);
  }

  {  // <P0^n, f> vanishes beyond the v-degree of f (A-series termination)
    bool ok = true;
    for (int t = 0; t < samples / 2 + 1; ++t) {
      Word fw = random_word(GP, rng, max_deg);
      Word xw((size_t)D.v_degree(fw) + 1, D.algebra().p(0));
      if (!D.pair_words(xw, fw, true).is_zero()) ok = false;
    }
    rep.add("a-series-termination", ok, "");
  }

  {  // <A, .> is a character
    bool ok = true;
    Word aw{D.algebra().a()};
    for (int t = 0; t < samples / 2 + 1; ++t) {
      Word f1 = random_word(GP, rng, 2), f2 = random_word(GP, rng, 2);
      Word prod = f1;
      prod.insert(prod.end(), f2.begin(), f2.end());
      if (D.pair_words(aw, prod, true) !=
          D.pair_words(aw, f1, true) * D.pair_words(aw, f2, true))
        ok = false;
    }
    rep.add("group-like-character", ok, "");
  }

  return rep;
}

}  // namespace kappa

#endif
