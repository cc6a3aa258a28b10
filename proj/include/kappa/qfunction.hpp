#ifndef KAPPA_QFUNCTION_HPP
#define KAPPA_QFUNCTION_HPP

#include "kappa/scalars.hpp"

namespace kappa {

/// Functions on the mass hyperboloid: rational functions of the spatial
/// momenta q1,q2,q3 extended by the energy q0 with q0^2 = q1^2+q2^2+q3^2+m^2,
/// with Coefficient (exact functions of k, m, s, c) as the scalar field.
/// This is the function algebra the induced representation acts on.
using QFunction = QuadFrac<Coefficient>;

inline const QFunction::Ctx& qfun_ctx() {
  static const QFunction::Ctx ctx = [] {
    auto c = std::make_shared<QuadCtx<Coefficient>>();
    c->nvars = 3;
    c->names = {"q1", "q2", "q3"};
    MPoly<Coefficient> r(3);
    for (int i = 0; i < 3; ++i) r = r + MPoly<Coefficient>::variable(3, i, 2);
    c->ext_r = r + MPoly<Coefficient>::constant(3, coeff_m() * coeff_m());
    c->ext_name = "q0";
    return QFunction::Ctx(c);
  }();
  return ctx;
}

inline QFunction qf_zero() { return QFunction::constant(qfun_ctx(), coeff_zero()); }
inline QFunction qf_one() { return QFunction::constant(qfun_ctx(), coeff_one()); }
inline QFunction qf_const(const Coefficient& c) {
  return QFunction::constant(qfun_ctx(), c);
}
/// q_i for i = 1..3.
inline QFunction qf_q(int i) { return QFunction::variable(qfun_ctx(), i - 1); }
inline QFunction qf_q0() { return QFunction::ext_gen(qfun_ctx()); }

/// d/dq_i for i = 1..3, with the chain rule dq0/dq_i = q_i/q0 applied to the
/// quadratic generator (equivalently q_i q0 / r with r = q0^2).
inline QFunction qderive(const QFunction& f, int i) {
  const auto& ctx = f.ctx();
  if (!ctx) return QFunction(0);  // plain constant
  int v = i - 1;
  QFunction dN = QFunction::from_poly(ctx, f.num0().derivative(v), f.num1().derivative(v));
  if (!f.num1().is_zero()) {
    MPoly<Coefficient> qi = MPoly<Coefficient>::variable(ctx->nvars, v);
    // d(N1 q0) picks up N1 * q_i q0 / r beyond the coefficientwise part
    dN = dN + QFunction::from_fraction(ctx, MPoly<Coefficient>(ctx->nvars), f.num1() * qi,
                                       *ctx->ext_r, MPoly<Coefficient>(ctx->nvars));
  }
  QFunction D = QFunction::from_poly(ctx, f.den());
  QFunction dD = QFunction::from_poly(ctx, f.den().derivative(v));
  if (!dD.is_zero()) dN = dN - f * dD;
  return dN / D;
}

/// Smallest power of 1/kappa appearing in any coefficient of p (negative
/// values are positive powers of kappa); order+1 when nothing shows up inside
/// the trusted window.  Distinct q-monomials cannot cancel, so the minimum
/// over coefficients is the exact valuation of the polynomial.
inline int qpoly_kappa_valuation(const MPoly<Coefficient>& p, int order) {
  int val = order + 1;
  for (const auto& [e, c] : p.terms()) {
    auto s = coeff_series(c, order);
    if (!s.empty()) val = std::min(val, s.begin()->first);
  }
  return val;
}

/// True when f -> 0 as kappa -> infinity.  q0 carries no kappa dependence and
/// is not rational in the q_i, so (num0 + num1*q0)/den vanishes in the limit
/// exactly when both numerator valuations strictly exceed the denominator's.
/// The canonical (monic) form may put kappa-singular coefficients in the
/// denominator; comparing valuations instead of limits handles that.
inline bool qfun_classical_vanishes(const QFunction& f, int order) {
  if (f.is_zero()) return true;
  int vd = qpoly_kappa_valuation(f.den(), order);
  if (vd > order) throw std::runtime_error("qfun_classical_vanishes: widen the series order");
  return qpoly_kappa_valuation(f.num0(), order) > vd &&
         qpoly_kappa_valuation(f.num1(), order) > vd;
}

}  // namespace kappa

#endif
