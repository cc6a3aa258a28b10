#ifndef KAPPA_SCALARS_HPP
#define KAPPA_SCALARS_HPP

#include <climits>
#include <map>
#include <memory>
#include <stdexcept>

#include "kappa/gauss_rational.hpp"
#include "kappa/mpoly.hpp"
#include "kappa/quadfrac.hpp"

namespace kappa {

/// The scalar field of the whole engine: Gaussian-rational fractions in the
/// deformation parameter k (kappa), the mass m, and s = sinh(m/k), extended by
/// c = cosh(m/k) subject to c^2 = 1 + s^2.  Everything downstream (rewrite
/// rules, pairings, differential operators) has coefficients here, so no
/// transcendental function is ever evaluated.
using Coefficient = QuadFrac<GaussRat>;

/// Univariate rational functions of m alone; the coefficient type of the
/// kappa -> infinity Laurent expansion.
using MRat = QuadFrac<GaussRat>;

namespace scalar_vars {
constexpr int kKappa = 0;
constexpr int kMass = 1;
constexpr int kSinh = 2;
}  // namespace scalar_vars

inline const Coefficient::Ctx& coeff_ctx() {
  static const Coefficient::Ctx ctx = [] {
    auto c = std::make_shared<QuadCtx<GaussRat>>();
    c->nvars = 3;
    c->names = {"k", "m", "s"};
    c->ext_r = MPoly<GaussRat>::constant(3, GaussRat(1)) +
               MPoly<GaussRat>::variable(3, scalar_vars::kSinh, 2);
    c->ext_name = "c";
    return Coefficient::Ctx(c);
  }();
  return ctx;
}

inline const MRat::Ctx& mrat_ctx() {
  static const MRat::Ctx ctx = [] {
    auto c = std::make_shared<QuadCtx<GaussRat>>();
    c->nvars = 1;
    c->names = {"m"};
    return MRat::Ctx(c);
  }();
  return ctx;
}

inline Coefficient coeff_zero() { return Coefficient::constant(coeff_ctx(), GaussRat(0)); }
inline Coefficient coeff_one() { return Coefficient::constant(coeff_ctx(), GaussRat(1)); }
inline Coefficient coeff_i() { return Coefficient::constant(coeff_ctx(), GaussRat::i()); }
inline Coefficient coeff_rat(long num, long den = 1) {
  return Coefficient::constant(coeff_ctx(), GaussRat(num, den));
}
inline Coefficient coeff_kappa() {
  return Coefficient::variable(coeff_ctx(), scalar_vars::kKappa);
}
inline Coefficient coeff_m() { return Coefficient::variable(coeff_ctx(), scalar_vars::kMass); }
inline Coefficient coeff_s() { return Coefficient::variable(coeff_ctx(), scalar_vars::kSinh); }
inline Coefficient coeff_c() { return Coefficient::ext_gen(coeff_ctx()); }

inline MRat mrat_const(const GaussRat& c) { return MRat::constant(mrat_ctx(), c); }
inline MRat mrat_m_pow(int k, const GaussRat& c = GaussRat(1)) {
  return MRat::from_poly(mrat_ctx(), MPoly<GaussRat>::variable(1, 0, k) *
                                         MPoly<GaussRat>::constant(1, c));
}

namespace detail {

/// Truncated Laurent series in e = 1/k with MRat coefficients.  `trunc` marks
/// the last exponent whose coefficient is trusted; everything above is
/// unknown (not zero).
struct Laurent {
  std::map<int, MRat> c;
  int trunc = INT_MAX / 2;

  void set(int n, const MRat& v) {
    if (n > trunc) return;
    if (v.is_zero()) c.erase(n);
    else c[n] = v;
  }
  MRat at(int n) const {
    auto it = c.find(n);
    return it == c.end() ? mrat_const(GaussRat(0)) : it->second;
  }
  /// Lowest trusted nonzero exponent, or trunc+1 when none is visible.
  int valuation() const { return c.empty() ? trunc + 1 : c.begin()->first; }
};

inline Laurent laurent_add(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.trunc = std::min(a.trunc, b.trunc);
  for (const auto& [n, v] : a.c) r.set(n, v);
  for (const auto& [n, v] : b.c) r.set(n, r.at(n) + v);
  return r;
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.trunc = std::min(a.trunc + b.valuation(), b.trunc + a.valuation());
  if (r.trunc > INT_MAX / 2) r.trunc = INT_MAX / 2;
  for (const auto& [n, u] : a.c)
    for (const auto& [m2, v] : b.c) r.set(n + m2, r.at(n + m2) + u * v);
  return r;
}

inline Laurent laurent_shift(const Laurent& a, int d) {
  Laurent r;
  r.trunc = a.trunc >= INT_MAX / 2 ? a.trunc : a.trunc + d;
  for (const auto& [n, v] : a.c) r.c[n + d] = v;
  return r;
}

inline Laurent laurent_scale(const Laurent& a, const MRat& f) {
  Laurent r;
  r.trunc = a.trunc;
  for (const auto& [n, v] : a.c) r.set(n, v * f);
  return r;
}

inline Laurent laurent_pow(const Laurent& a, int k) {
  Laurent r;
  r.set(0, mrat_const(GaussRat(1)));
  for (int j = 0; j < k; ++j) r = laurent_mul(r, a);
  return r;
}

inline GaussRat inv_factorial(int n) {
  mpz_class f = 1;
  for (int j = 2; j <= n; ++j) f *= j;
  return GaussRat(mpq_class(1, f));
}

/// Series of s = sinh(m/k):  sum_j m^(2j+1)/(2j+1)! e^(2j+1),  e = 1/k.
inline Laurent sinh_series(int T) {
  Laurent r;
  r.trunc = T;
  for (int n = 1; n <= T; n += 2) r.set(n, mrat_m_pow(n, inv_factorial(n)));
  return r;
}

/// Series of c = cosh(m/k):  sum_j m^(2j)/(2j)! e^(2j).
inline Laurent cosh_series(int T) {
  Laurent r;
  r.trunc = T;
  for (int n = 0; n <= T; n += 2) r.set(n, mrat_m_pow(n, inv_factorial(n)));
  return r;
}

inline Laurent poly_series(const MPoly<GaussRat>& p, int T) {
  using namespace scalar_vars;
  Laurent s = sinh_series(T + 8);
  Laurent r;
  r.trunc = T;
  for (const auto& [e, coef] : p.terms()) {
    int ka = e.size() > (size_t)kKappa ? e[kKappa] : 0;
    int mb = e.size() > (size_t)kMass ? e[kMass] : 0;
    int se = e.size() > (size_t)kSinh ? e[kSinh] : 0;
    Laurent t = laurent_shift(laurent_pow(s, se), -ka);
    t = laurent_scale(t, mrat_m_pow(mb, coef));
    r = laurent_add(r, t);
  }
  r.trunc = std::min(r.trunc, T);
  return r;
}

}  // namespace detail

/// Exact Laurent expansion of a Coefficient at kappa -> infinity: returns the
/// map  { n -> coefficient of kappa^(-n) }  for every nonzero coefficient with
/// n <= order.  Negative keys are positive powers of kappa.  Exact because
/// s and c enter polynomially and the denominator's leading behaviour is
/// located adaptively before dividing.
inline std::map<int, MRat> coeff_series(const Coefficient& x, int order) {
  using namespace detail;
  if (x.is_zero()) return {};
  int degk = std::max({x.num0().degree_in(scalar_vars::kKappa),
                       x.num1().degree_in(scalar_vars::kKappa),
                       x.den().degree_in(scalar_vars::kKappa)});
  for (int slack = 4;; slack *= 2) {
    if (slack > 1 << 12)
      throw std::runtime_error("coeff_series: expansion failed to stabilize");
    int T = order + degk + slack;
    Laurent den = poly_series(x.den(), T);
    int v = den.valuation();
    if (v > den.trunc) continue;  // denominator vanishes past the window; widen
    // numerator = num0 + num1 * c
    Laurent num = laurent_add(poly_series(x.num0(), T),
                              laurent_mul(poly_series(x.num1(), T), cosh_series(T + 8)));
    int need = order + v;
    if (num.trunc < need || den.trunc < need) continue;
    MRat lead_inv = den.at(v).inv();
    std::map<int, MRat> q;
    int qlo = num.valuation() - v;
    for (int n = qlo; n <= order; ++n) {
      MRat acc = num.at(n + v);
      for (const auto& [j, qj] : q) acc = acc - qj * den.at(n + v - j);
      MRat qn = acc * lead_inv;
      if (!qn.is_zero()) q[n] = qn;
    }
    return q;
  }
}

/// The kappa^0 term of the expansion, with every positive power of kappa
/// required to vanish up to `order`; used by the classical-limit suites.
inline MRat coeff_classical_limit(const Coefficient& x, int order, bool* regular = nullptr) {
  auto s = coeff_series(x, order);
  bool ok = true;
  for (const auto& [n, v] : s)
    if (n < 0) ok = false;
  if (regular) *regular = ok;
  auto it = s.find(0);
  return it == s.end() ? mrat_const(GaussRat(0)) : it->second;
}

}  // namespace kappa

#endif
