#ifndef KAPPA_INDREP_HPP
#define KAPPA_INDREP_HPP

#include <array>
#include <string>
#include <vector>

#include "kappa/kalgebra.hpp"
#include "kappa/qfunction.hpp"
#include "kappa/report.hpp"

namespace kappa {

// ---------------------------------------------------------------------------
// Spin matrices
// ---------------------------------------------------------------------------

using QMatrix = std::vector<std::vector<QFunction>>;

inline QMatrix qmat_zero(int dim) {
  return QMatrix(dim, std::vector<QFunction>(dim, qf_zero()));
}

/// Exact su(2) generators s_1,s_2,s_3 for twice_j in {0,1,2}: the trivial,
/// spinor (sigma/2) and vector ((s_k)_ab = -i eps_kab) representations.
struct SpinMatrices {
  int twice_j = 0;
  int dim = 1;
  std::array<QMatrix, 3> s;
};

inline int eps3(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;  // Levi-Civita on {1,2,3}
}

inline SpinMatrices spin_matrices(int twice_j) {
  SpinMatrices S;
  S.twice_j = twice_j;
  S.dim = twice_j + 1;
  const QFunction I = qf_const(coeff_i());
  const QFunction half = qf_const(coeff_rat(1, 2));
  for (auto& m : S.s) m = qmat_zero(S.dim);
  if (twice_j == 1) {
    S.s[0][0][1] = half;
    S.s[0][1][0] = half;
    S.s[1][0][1] = -I * half;
    S.s[1][1][0] = I * half;
    S.s[2][0][0] = half;
    S.s[2][1][1] = -half;
  } else if (twice_j == 2) {
    for (int k = 1; k <= 3; ++k)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
          if (int e = eps3(k, a, b)) S.s[k - 1][a - 1][b - 1] = -I * qf_const(coeff_rat(e));
  } else if (twice_j != 0) {
    throw std::invalid_argument("spin_matrices: twice_j must be 0, 1 or 2");
  }
  return S;
}

inline bool spin_su2_ok(const SpinMatrices& S) {
  const QFunction I = qf_const(coeff_i());
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int r = 0; r < S.dim; ++r)
        for (int c = 0; c < S.dim; ++c) {
          QFunction lhs = qf_zero();
          for (int t = 0; t < S.dim; ++t)
            lhs += S.s[i - 1][r][t] * S.s[j - 1][t][c] - S.s[j - 1][r][t] * S.s[i - 1][t][c];
          QFunction rhs = qf_zero();
          for (int k = 1; k <= 3; ++k)
            if (int e = eps3(i, j, k)) rhs += I * qf_const(coeff_rat(e)) * S.s[k - 1][r][c];
          if (lhs != rhs) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------
// The formal symbol ell = p0 = k*log(u/m), u = m c - q0 s
// ---------------------------------------------------------------------------

inline QFunction qf_u() {
  return qf_const(coeff_m() * coeff_c()) - qf_q0() * qf_const(coeff_s());
}

/// d ell / d q_i = -k s q_i / (q0 u); the only fact about the logarithm the
/// engine ever uses, so ell stays a formal symbol and exactness survives.
inline const QFunction& ell_derivative(int i) {
  static const std::array<QFunction, 3> d = [] {
    QFunction u = qf_u();
    Coefficient ks = coeff_kappa() * coeff_s();
    std::array<QFunction, 3> r{qf_zero(), qf_zero(), qf_zero()};
    for (int j = 1; j <= 3; ++j) r[j - 1] = qf_const(-ks) * qf_q(j) / (qf_q0() * u);
    return r;
  }();
  return d[i - 1];
}

/// a + b*ell with QFunction coefficients.  ell*ell never arises in the
/// representation; attempting it throws, which keeps the ansatz honest.
struct LinLog {
  QFunction a = qf_zero();
  QFunction b = qf_zero();
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool operator==(const LinLog& o) const { return a == o.a && b == o.b; }
};

inline LinLog ll_add(const LinLog& x, const LinLog& y) { return {x.a + y.a, x.b + y.b}; }
inline LinLog ll_sub(const LinLog& x, const LinLog& y) { return {x.a - y.a, x.b - y.b}; }
inline LinLog ll_mul(const LinLog& x, const LinLog& y) {
  if (!x.b.is_zero() && !y.b.is_zero())
    throw std::logic_error("LinLog: ell*ell is outside the linear-log ansatz");
  return {x.a * y.a, x.a * y.b + x.b * y.a};
}
inline LinLog ll_scale(const QFunction& f, const LinLog& x) { return {f * x.a, f * x.b}; }
inline LinLog ll_derive(const LinLog& x, int i) {
  return {qderive(x.a, i) + x.b * ell_derivative(i), qderive(x.b, i)};
}

// ---------------------------------------------------------------------------
// First-order matrix differential operators  sum_i F_i d/dq_i + G
// ---------------------------------------------------------------------------

using LMatrix = std::vector<std::vector<LinLog>>;

struct DiffOperator {
  int dim = 1;
  std::array<QFunction, 3> F{qf_zero(), qf_zero(), qf_zero()};
  LMatrix G;

  static DiffOperator zero(int dim) {
    DiffOperator d;
    d.dim = dim;
    d.G = LMatrix(dim, std::vector<LinLog>(dim));
    return d;
  }
  static DiffOperator mult_identity(int dim) {
    DiffOperator d = zero(dim);
    for (int r = 0; r < dim; ++r) d.G[r][r] = {qf_one(), qf_zero()};
    return d;
  }
  bool is_multiplication() const {
    return F[0].is_zero() && F[1].is_zero() && F[2].is_zero();
  }
  bool is_zero() const {
    if (!is_multiplication()) return false;
    for (const auto& row : G)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    return true;
  }
};

inline DiffOperator dop_add(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r = x;
  for (int i = 0; i < 3; ++i) r.F[i] += y.F[i];
  for (int a = 0; a < r.dim; ++a)
    for (int b = 0; b < r.dim; ++b) r.G[a][b] = ll_add(r.G[a][b], y.G[a][b]);
  return r;
}

inline DiffOperator dop_sub(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r = x;
  for (int i = 0; i < 3; ++i) r.F[i] -= y.F[i];
  for (int a = 0; a < r.dim; ++a)
    for (int b = 0; b < r.dim; ++b) r.G[a][b] = ll_sub(r.G[a][b], y.G[a][b]);
  return r;
}

inline DiffOperator dop_scale(const QFunction& f, const DiffOperator& x) {
  DiffOperator r = x;
  for (int i = 0; i < 3; ++i) r.F[i] = f * r.F[i];
  for (auto& row : r.G)
    for (auto& e : row) e = ll_scale(f, e);
  return r;
}

/// Product of two multiplication operators (needed for bracket right-hand
/// sides like P_i P_k or A^2); composing genuine vector fields is not a
/// first-order operator and is rejected.
inline DiffOperator dop_mul_mult(const DiffOperator& x, const DiffOperator& y) {
  if (!x.is_multiplication() || !y.is_multiplication())
    throw std::logic_error("dop_mul_mult: operands must be multiplication operators");
  DiffOperator r = DiffOperator::zero(x.dim);
  for (int a = 0; a < r.dim; ++a)
    for (int b = 0; b < r.dim; ++b)
      for (int t = 0; t < r.dim; ++t) r.G[a][b] = ll_add(r.G[a][b], ll_mul(x.G[a][t], y.G[t][b]));
  return r;
}

inline DiffOperator dop_commutator(const DiffOperator& x, const DiffOperator& y) {
  DiffOperator r = DiffOperator::zero(x.dim);
  // vector-field part [X, Y]
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      if (!x.F[i].is_zero()) r.F[j] += x.F[i] * qderive(y.F[j], i + 1);
      if (!y.F[i].is_zero()) r.F[j] -= y.F[i] * qderive(x.F[j], i + 1);
    }
  // X(G2) - Y(G1) + [G1, G2]
  for (int a = 0; a < r.dim; ++a)
    for (int b = 0; b < r.dim; ++b) {
      LinLog acc;
      for (int i = 0; i < 3; ++i) {
        if (!x.F[i].is_zero()) acc = ll_add(acc, ll_scale(x.F[i], ll_derive(y.G[a][b], i + 1)));
        if (!y.F[i].is_zero()) acc = ll_sub(acc, ll_scale(y.F[i], ll_derive(x.G[a][b], i + 1)));
      }
      for (int t = 0; t < r.dim; ++t)
        acc = ll_add(acc, ll_sub(ll_mul(x.G[a][t], y.G[t][b]), ll_mul(y.G[a][t], x.G[t][b])));
      r.G[a][b] = acc;
    }
  return r;
}

// ---------------------------------------------------------------------------
// The infinitesimal induced representation on the mass hyperboloid
// ---------------------------------------------------------------------------

/// Deformed momentum in terms of the hyperboloid coordinates:
///   E   = e^{p0/k} = u/m,          u = m c - q0 s,
///   p_j = -k s q_j / u.
inline QFunction deform_E() { return qf_u() / qf_const(coeff_m()); }
inline QFunction deform_p(int j) {
  return qf_const(-coeff_kappa() * coeff_s()) * qf_q(j) / qf_u();
}

/// The deformed boost target point:  qt_0 = (m q0 c - m^2 s)/u,
/// qt_k = m q_k / u; stays on the hyperboloid and fixes the rest point.
inline QFunction tilde_q(int mu) {
  QFunction u = qf_u();
  Coefficient m = coeff_m();
  if (mu == 0)
    return (qf_const(m * coeff_c()) * qf_q0() - qf_const(m * m * coeff_s())) / u;
  return qf_const(m) * qf_q(mu) / u;
}

/// The generators of the algebra realized as first-order matrix differential
/// operators in q_1,q_2,q_3 at a fixed spin.  `flip` inverts the sign of the
/// orbital parts (the opposite reading of d/dq^i), the closure negative
/// control.
struct InducedRep {
  SpinMatrices spin;
  std::vector<DiffOperator> ops;  // indexed by KAlgebra generator id, 0..11
  const DiffOperator& op(int id) const { return ops.at(id); }
};

inline InducedRep build_induced_rep(int twice_j, bool flip = false) {
  InducedRep R;
  R.spin = spin_matrices(twice_j);
  const int dim = R.spin.dim;
  const QFunction I = qf_const(coeff_i());
  const QFunction sgn = flip ? -I : I;
  const QFunction u = qf_u();
  KAlgebra K;

  R.ops.assign(12, DiffOperator::zero(dim));
  // rotations  M_ij = -i(q_i d_j - q_j d_i) + eps_ijk s_k
  static const int rot[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (int r = 0; r < 3; ++r) {
    int i = rot[r][0], j = rot[r][1];
    DiffOperator& d = R.ops[r];
    d.F[j - 1] = -sgn * qf_q(i);
    d.F[i - 1] = sgn * qf_q(j);
    for (int k = 1; k <= 3; ++k)
      if (int e = eps3(i, j, k))
        for (int a = 0; a < dim; ++a)
          for (int b = 0; b < dim; ++b)
            d.G[a][b].a += qf_const(coeff_rat(e)) * R.spin.s[k - 1][a][b];
  }
  // boosts  M_i0 = i q0 d_i + eps_ijk q_j s_k / (q0 + m)
  QFunction q0m = qf_q0() + qf_const(coeff_m());
  for (int i = 1; i <= 3; ++i) {
    DiffOperator& d = R.ops[K.boost(i)];
    d.F[i - 1] = sgn * qf_q0();
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        if (int e = eps3(i, j, k))
          for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
              d.G[a][b].a += qf_const(coeff_rat(e)) * qf_q(j) * R.spin.s[k - 1][a][b] / q0m;
  }
  // momenta and the group-like A = e^{-P0/k}, all multiplications
  auto set_mult = [&](int id, const QFunction& f, bool log_part = false) {
    DiffOperator& d = R.ops[id];
    for (int a = 0; a < dim; ++a)
      if (log_part) d.G[a][a].b = f;
      else d.G[a][a].a = f;
  };
  set_mult(K.p(0), qf_one(), /*log_part=*/true);  // P0 = ell
  for (int j = 1; j <= 3; ++j) set_mult(K.p(j), deform_p(j));
  set_mult(K.a(), qf_const(coeff_m()) / u);
  set_mult(K.a_inv(), u / qf_const(coeff_m()));
  return R;
}

/// Right-hand side of a bracket as an operator: a lone M generator, or a
/// product of multiplication operators.
inline DiffOperator bracket_word_op(const InducedRep& R, const Word& w) {
  int dim = R.spin.dim;
  if (w.empty()) return DiffOperator::mult_identity(dim);
  if (w.size() == 1) return R.op(w[0]);
  DiffOperator r = DiffOperator::mult_identity(dim);
  for (int id : w) r = dop_mul_mult(r, R.op(id));
  return r;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Every defining bracket of the algebra holds verbatim between the realized
/// operators: [op(x), op(y)] = op([x, y]) for all generator pairs, including
/// the brackets with A.
inline Report closure_suite(int twice_j, bool flip = false) {
  Report rep;
  rep.suite = "rep-closure";
  InducedRep R = build_induced_rep(twice_j, flip);
  KAlgebra K;
  std::string spin_tag = twice_j == 0 ? "0" : twice_j == 1 ? "1/2" : "1";

  rep.add("su2-commutators-spin-" + spin_tag, spin_su2_ok(R.spin));

  bool all = true;
  std::string detail;
  const char* names[12] = {"M12", "M13", "M23", "M10", "M20", "M30",
                           "P0",  "P1",  "P2",  "P3",  "A",   "A^-1"};
  for (int x = 0; x < 12 && all; ++x)
    for (int y = x + 1; y < 12; ++y) {
      if (x == K.a() && y == K.a_inv()) continue;
      DiffOperator lhs = dop_commutator(R.op(x), R.op(y));
      DiffOperator rhs = DiffOperator::zero(R.spin.dim);
      for (const auto& [w, c] : kalgebra_detail::gen_bracket(K, x, y, -1))
        rhs = dop_add(rhs, dop_scale(qf_const(c), bracket_word_op(R, w)));
      if (!dop_sub(lhs, rhs).is_zero()) {
        all = false;
        detail = std::string("[") + names[x] + ", " + names[y] + "] fails at spin " + spin_tag;
        break;
      }
    }
  rep.add("komut-closure-spin-" + spin_tag, all, detail);
  return rep;
}

/// Shell identities of the deformed momentum map and the boost target point.
inline Report momentum_shell_suite() {
  Report rep;
  rep.suite = "momentum-shell";
  const Coefficient k = coeff_kappa(), m = coeff_m(), c = coeff_c();
  const QFunction two = qf_const(coeff_rat(2));

  // 4k^2 sinh^2(p0/2k) - e^{p0/k} |p|^2 = 4k^2 sinh^2(m/2k), i.e. with
  // E = e^{p0/k}:  k^2 (E - 2 + 1/E) - E sum p_j^2 = 2k^2 (c - 1)
  QFunction E = deform_E();
  QFunction psq = qf_zero();
  for (int j = 1; j <= 3; ++j) psq += deform_p(j) * deform_p(j);
  QFunction lhs = qf_const(k * k) * (E - two + E.inv()) - E * psq;
  QFunction want = qf_const(coeff_rat(2) * k * k * (c - coeff_one()));
  rep.add("deformed-dispersion", lhs == want);

  // qt stays on the mass shell: qt_0^2 - sum qt_k^2 = m^2
  QFunction shell = tilde_q(0) * tilde_q(0);
  for (int j = 1; j <= 3; ++j) shell -= tilde_q(j) * tilde_q(j);
  rep.add("qtilde-on-shell", shell == qf_const(m * m));

  // the rest point q = (m, 0, 0, 0) is fixed
  auto rest = [&](const QFunction& f) {
    auto const_part = [](const MPoly<Coefficient>& p) {
      Coefficient r = coeff_zero();
      for (const auto& [e, cc] : p.terms()) {
        bool constant = true;
        for (int ex : e)
          if (ex) constant = false;
        if (constant) r += cc;
      }
      return r;
    };
    Coefficient num = const_part(f.num0()) + const_part(f.num1()) * coeff_m();
    return num / const_part(f.den());
  };
  bool fixed = rest(tilde_q(0)) == m;
  for (int j = 1; j <= 3; ++j) fixed = fixed && rest(tilde_q(j)).is_zero();
  rep.add("qtilde-rest-point", fixed);
  return rep;
}

/// Classical (kappa -> infinity) limits of the momentum map and the boost
/// target point: p_j -> -q_j and qt -> q.
inline void indrep_classical_checks(Report& rep, int order) {
  bool ok = true;
  for (int j = 1; j <= 3; ++j)
    ok = ok && qfun_classical_vanishes(deform_p(j) + qf_q(j), order);
  rep.add("momentum-classical-limit", ok);

  ok = qfun_classical_vanishes(tilde_q(0) - qf_q0(), order);
  for (int j = 1; j <= 3; ++j) ok = ok && qfun_classical_vanishes(tilde_q(j) - qf_q(j), order);
  rep.add("qtilde-classical-limit", ok);
}

}  // namespace kappa

#endif
