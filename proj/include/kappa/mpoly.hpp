#ifndef KAPPA_MPOLY_HPP
#define KAPPA_MPOLY_HPP

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kappa {

/// Graded-lexicographic order on exponent vectors (total degree first).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    // pad comparison: shorter vector behaves as zero-extended
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      int ea = i < a.size() ? a[i] : 0;
      int eb = i < b.size() ? b[i] : 0;
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

/// Sparse multivariate polynomial over a field F.  Variables are positional;
/// the interpretation of each slot belongs to the surrounding field context.
/// F must provide: default ctor (zero), is_zero(), inv(), operator+,-,*,==, str().
template <class F>
class MPoly {
public:
  using Terms = std::map<std::vector<int>, F, GradedLex>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const F& c) {
    MPoly p(nvars);
    if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = c;
    return p;
  }
  static MPoly variable(int nvars, int var, int power = 1) {
    assert(var >= 0 && var < nvars);
    MPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[var] = power;
    p.terms_[e] = F(1);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
  }
  /// The constant term (zero if absent).
  F constant_term() const {
    auto it = terms_.find(std::vector<int>(nvars_, 0));
    return it == terms_.end() ? F() : it->second;
  }

  long total_degree() const {
    long d = 0;
    for (auto& [e, c] : terms_) {
      long t = 0;
      for (int x : e) t += x;
      d = std::max(d, t);
    }
    return d;
  }
  int degree_in(int var) const {
    int d = 0;
    for (auto& [e, c] : terms_)
      if (var < (int)e.size()) d = std::max(d, e[var]);
    return d;
  }

  void add_term(const std::vector<int>& e, const F& c) {
    if (c.is_zero()) return;
    auto ee = e;
    ee.resize(nvars_, 0);
    auto it = terms_.find(ee);
    if (it == terms_.end()) {
      terms_.emplace(std::move(ee), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  MPoly operator+(const MPoly& o) const {
    MPoly r = promoted(std::max(nvars_, o.nvars_));
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MPoly operator-(const MPoly& o) const { return *this + (-o); }
  MPoly operator*(const MPoly& o) const {
    int n = std::max(nvars_, o.nvars_);
    MPoly r(n);
    for (auto& [ea, ca] : terms_)
      for (auto& [eb, cb] : o.terms_) {
        std::vector<int> e(n, 0);
        for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
        for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  MPoly operator*(const F& c) const {
    MPoly r(nvars_);
    if (c.is_zero()) return r;
    for (auto& [e, co] : terms_) {
      F v = co * c;
      if (!v.is_zero()) r.terms_[e] = v;
    }
    return r;
  }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  bool operator==(const MPoly& o) const {
    return (*this - o).is_zero();
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  bool operator<(const MPoly& o) const {  // arbitrary total order for map keys
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    auto a = terms_.begin(), b = o.terms_.begin();
    GradedLex lt;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
      if (lt(a->first, b->first)) return true;
      if (lt(b->first, a->first)) return false;
      if (a->second < b->second) return true;
      if (b->second < a->second) return false;
    }
    return a == terms_.end() && b != o.terms_.end();
  }

  MPoly pow(int k) const {
    MPoly r = constant(nvars_, F(1));
    MPoly b = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) r = r * b;
      if (k > 1) b = b * b;
    }
    return r;
  }

  /// Leading term under graded-lex.
  std::pair<std::vector<int>, F> leading() const {
    assert(!terms_.empty());
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }

  /// Multiply by the inverse of the leading coefficient.
  MPoly monic() const {
    if (is_zero()) return *this;
    return *this * leading().second.inv();
  }

  /// Coefficient of x_var^d, as a polynomial not involving x_var.
  MPoly coeff_in(int var, int d) const {
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) {
      int ev = var < (int)e.size() ? e[var] : 0;
      if (ev == d) {
        auto ee = e;
        ee.resize(nvars_, 0);
        ee[var] = 0;
        r.add_term(ee, c);
      }
    }
    return r;
  }

  MPoly derivative(int var) const {
    MPoly r(nvars_);
    for (auto& [e, c] : terms_) {
      int ev = var < (int)e.size() ? e[var] : 0;
      if (ev == 0) continue;
      auto ee = e;
      ee.resize(nvars_, 0);
      ee[var] -= 1;
      r.add_term(ee, c * F(ev));
    }
    return r;
  }

  /// Substitute x_var -> value (an arbitrary polynomial, possibly over more vars).
  MPoly substitute(int var, const MPoly& value) const {
    int n = std::max(nvars_, value.nvars());
    MPoly r(n);
    int dmax = degree_in(var);
    std::vector<MPoly> powers(dmax + 1, constant(n, F(1)));
    for (int d = 1; d <= dmax; ++d) powers[d] = powers[d - 1] * value;
    for (auto& [e, c] : terms_) {
      int ev = var < (int)e.size() ? e[var] : 0;
      auto ee = e;
      ee.resize(n, 0);
      ee[var] = 0;
      MPoly t(n);
      t.add_term(ee, c);
      r += t * powers[ev];
    }
    return r;
  }

  /// Map every coefficient through fn (into a possibly different field).
  template <class G, class Fn>
  MPoly<G> map_coeffs(Fn&& fn) const {
    MPoly<G> r(nvars_);
    for (auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  /// Exact division; nullopt when the division does not come out even.
  std::optional<MPoly> divide_exact(const MPoly& b) const {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
    int n = std::max(nvars_, b.nvars());
    MPoly rem = promoted(n);
    MPoly divisor = b.promoted(n);
    MPoly quot(n);
    auto [eb, cb] = divisor.leading();
    F cbi = cb.inv();
    while (!rem.is_zero()) {
      auto [ea, ca] = rem.leading();
      std::vector<int> q(n, 0);
      for (int i = 0; i < n; ++i) {
        int d = ea[i] - (i < (int)eb.size() ? eb[i] : 0);
        if (d < 0) return std::nullopt;
        q[i] = d;
      }
      MPoly t(n);
      t.add_term(q, ca * cbi);
      quot += t;
      rem -= t * divisor;
    }
    return quot;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // render highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (size_t i = 0; i < it->first.size(); ++i) {
        int e = it->first[i];
        if (e == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : ("x" + std::to_string(i));
        if (e > 1) mono += "^" + std::to_string(e);
      }
      std::string cs = it->second.str();
      std::string term;
      if (mono.empty()) term = cs;
      else if (cs == "1") term = mono;
      else if (cs == "-1") term = "-" + mono;
      else term = cs + "*" + mono;
      if (!first && term[0] != '-') out += "+";
      out += term;
      first = false;
    }
    return out;
  }

  /// Return a copy with at least n variable slots.
  MPoly promoted(int n) const {
    if (n <= nvars_) return *this;
    MPoly r(n);
    for (auto& [e, c] : terms_) {
      auto ee = e;
      ee.resize(n, 0);
      r.terms_[ee] = c;
    }
    return r;
  }

private:
  int nvars_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Multivariate gcd via primitive pseudo-remainder sequences.
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
int highest_used_var(const MPoly<F>& a, const MPoly<F>& b) {
  int n = std::max(a.nvars(), b.nvars());
  for (int v = n - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

}  // namespace detail

template <class F>
MPoly<F> mpoly_gcd(MPoly<F> a, MPoly<F> b);

/// gcd of the x_var-coefficients of p.
template <class F>
MPoly<F> mpoly_content(const MPoly<F>& p, int var) {
  MPoly<F> g(p.nvars());
  for (int d = 0; d <= p.degree_in(var); ++d) {
    MPoly<F> c = p.coeff_in(var, d);
    if (!c.is_zero()) g = mpoly_gcd(g, c);
  }
  return g;
}

/// Pseudo-remainder of a by b with respect to x_var.
template <class F>
MPoly<F> mpoly_prem(MPoly<F> a, const MPoly<F>& b, int var) {
  int db = b.degree_in(var);
  MPoly<F> lcb = b.coeff_in(var, db);
  int da = a.degree_in(var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int d = a.degree_in(var);
    MPoly<F> lca = a.coeff_in(var, d);
    MPoly<F> xs = MPoly<F>::variable(std::max(a.nvars(), b.nvars()), var, d - db);
    a = a * lcb - lca * xs * b;
    if (a.degree_in(var) == d && !a.is_zero() && d >= db) {
      // degree must strictly drop each round
      assert(a.coeff_in(var, d).is_zero());
    }
    (void)da;
  }
  return a;
}

template <class F>
MPoly<F> mpoly_gcd(MPoly<F> a, MPoly<F> b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  int var = detail::highest_used_var(a, b);
  if (var < 0) return MPoly<F>::constant(std::max(a.nvars(), b.nvars()), F(1));
  if (a.terms().size() == 1 || b.terms().size() == 1) {
    // gcd with a monomial: componentwise minimum exponent over every term
    int n = std::max(a.nvars(), b.nvars());
    std::vector<int> e(n, std::numeric_limits<int>::max());
    for (const MPoly<F>* p : {&a, &b})
      for (const auto& [te, tc] : p->terms())
        for (int i = 0; i < n; ++i)
          e[i] = std::min(e[i], i < (int)te.size() ? te[i] : 0);
    MPoly<F> g(n);
    g.add_term(e, F(1));
    return g;
  }
  MPoly<F> ca = mpoly_content(a, var), cb = mpoly_content(b, var);
  MPoly<F> c = mpoly_gcd(ca, cb);
  a = *a.divide_exact(ca);
  b = *b.divide_exact(cb);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (!b.is_zero()) {
    MPoly<F> r = mpoly_prem(a, b, var);
    a = b;
    if (!r.is_zero()) {
      MPoly<F> cr = mpoly_content(r, var);
      r = *r.divide_exact(cr);
    }
    b = r;
  }
  return (c * a).monic();
}

template <class F>
MPoly<F> mpoly_lcm(const MPoly<F>& a, const MPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return MPoly<F>(std::max(a.nvars(), b.nvars()));
  return (*(a * b).divide_exact(mpoly_gcd(a, b))).monic();
}

}  // namespace kappa

#endif
