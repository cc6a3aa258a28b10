#ifndef KAPPA_KALGEBRA_HPP
#define KAPPA_KALGEBRA_HPP

#include <array>
#include <string>
#include <vector>

#include "kappa/hopfcore.hpp"

namespace kappa {

/// The kappa-Poincare algebra in the Majid-Ruegg basis: rotations M12,M13,M23,
/// boosts M10,M20,M30, commuting momenta P0..P3, and an exact group-like
/// generator A = e^{-P0/k} with inverse.  All brackets close on this set, so
/// the rewrite system is exact (no series truncation):
///   [M_ij, P_0] = 0                 [M_ij, P_k] = i(g_jk P_i - g_ik P_j)
///   [M_i0, P_0] = i P_i
///   [M_i0, P_k] = -i(k/2) g_ik (1 - A^2) + (i/2k) g_ik P^rP_r - (i/k) P_i P_k
///   [M_mn, M_rs] = i(g_ms M_nr - g_ns M_mr + g_nr M_ms - g_mr M_ns)
///   [M_i0, A] = -(i/k) P_i A        [M_ij, A] = [P_mu, A] = 0
/// with g = diag(1,-1,-1,-1) and P^rP_r = -sum P_r^2 (spatial indices raised
/// with the spatial metric; the Euclidean reading +sum P_r^2 is the Jacobi
/// negative control).
struct KAlgebra {
  HopfPresentation P;

  /// id and sign of M_{ij} for arbitrary index order; (0,0) for i == j.
  std::pair<int, int> m_rot(int i, int j) const {
    if (i == j) return {-1, 0};
    if (i > j) {
      auto [id, s] = m_rot(j, i);
      return {id, -s};
    }
    static const int table[4][4] = {{-1, -1, -1, -1},
                                    {-1, -1, 0, 1},
                                    {-1, -1, -1, 2},
                                    {-1, -1, -1, -1}};
    return {table[i][j], 1};
  }
  int boost(int i) const { return 2 + i; }  // M_{i0}, i = 1..3
  int p(int mu) const { return 6 + mu; }
  int a() const { return 10; }
  int a_inv() const { return 11; }

  bool is_rotation(int id) const { return id < 3; }
  bool is_boost(int id) const { return id >= 3 && id < 6; }
  bool is_momentum(int id) const { return id >= 6 && id < 10; }
};

namespace kalgebra_detail {

/// M_{mu nu} as (generator id, sign); handles the antisymmetry and the fact
/// that only i<j rotations and M_{i0} boosts are basis elements.
inline std::pair<int, int> m_gen(const KAlgebra& K, int mu, int nu) {
  if (mu == nu) return {-1, 0};
  if (mu == 0) {
    auto [id, s] = m_gen(K, nu, 0);
    return {id, -s};
  }
  if (nu == 0) return {K.boost(mu), 1};
  return K.m_rot(mu, nu);
}

inline void add_m(AlgebraElement& x, const KAlgebra& K, int mu, int nu,
                  const Coefficient& c) {
  auto [id, s] = m_gen(K, mu, nu);
  if (s == 0) return;
  ae_add_term(x, {id}, s == 1 ? c : -c);
}

/// [x, y] for generator ids x < y (normal order), from the defining table.
/// `prpr_sign` is the sign of P^rP_r relative to sum P_r^2: -1 for the
/// spatial-metric reading, +1 for the Euclidean negative control.
inline AlgebraElement gen_bracket(const KAlgebra& K, int x, int y, int prpr_sign) {
  const std::array<int, 4> g{1, -1, -1, -1};
  const Coefficient I = coeff_i();
  const Coefficient k = coeff_kappa();
  AlgebraElement r;

  auto lorentz_indices = [&](int id) -> std::pair<int, int> {  // (mu, nu) of M
    static const int rot[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    if (K.is_rotation(id)) return {rot[id][0], rot[id][1]};
    return {id - 2, 0};
  };

  if (y == K.a() || y == K.a_inv()) {
    if (K.is_boost(x)) {
      // [M_i0, A] = -(i/k) P_i A,  [M_i0, A^-1] = +(i/k) P_i A^-1
      int i = x - 2;
      Coefficient c = (y == K.a() ? -I : I) / k;
      ae_add_term(r, {K.p(i), y}, c);
    }
    return r;  // A is central for rotations and momenta
  }
  if (K.is_momentum(x) && K.is_momentum(y)) return r;

  if (!K.is_momentum(y)) {
    // M-M bracket via the general antisymmetric-tensor formula
    auto [mu, nu] = lorentz_indices(x);
    auto [rho, sg] = lorentz_indices(y);
    if (mu == rho && nu == sg) return r;
    if (mu == sg) add_m(r, K, nu, rho, I * coeff_rat(g[mu]));
    if (nu == sg) add_m(r, K, mu, rho, -I * coeff_rat(g[nu]));
    if (nu == rho) add_m(r, K, mu, sg, I * coeff_rat(g[nu]));
    if (mu == rho) add_m(r, K, nu, sg, -I * coeff_rat(g[mu]));
    return r;
  }

  // M-P brackets
  auto [mu, nu] = lorentz_indices(x);
  int lam = y - 6;
  if (nu != 0) {  // rotation M_ij
    int i = mu, j = nu;
    if (lam == 0) return r;
    int kk = lam;
    // i(g_jk P_i - g_ik P_j)
    if (j == kk) ae_add_term(r, {K.p(i)}, I * coeff_rat(g[j]));
    if (i == kk) ae_add_term(r, {K.p(j)}, -I * coeff_rat(g[i]));
    return r;
  }
  int i = mu;  // boost M_i0
  if (lam == 0) {
    ae_add_term(r, {K.p(i)}, I);
    return r;
  }
  int kk = lam;
  if (i == kk) {
    Coefficient gik = coeff_rat(g[i]);
    // -i(k/2) g_ik (1 - A^2)
    ae_add_term(r, {}, -I * k * gik / coeff_rat(2));
    ae_add_term(r, {K.a(), K.a()}, I * k * gik / coeff_rat(2));
    // (i/2k) g_ik P^rP_r
    for (int rr = 1; rr <= 3; ++rr)
      ae_add_term(r, {K.p(rr), K.p(rr)},
                  I * gik * coeff_rat(prpr_sign) / (coeff_rat(2) * k));
  }
  // -(i/k) P_i P_k
  {
    Word w{K.p(i), K.p(kk)};
    std::sort(w.begin(), w.end());
    ae_add_term(r, w, -I / k);
  }
  return r;
}

}  // namespace kalgebra_detail

inline KAlgebra build_kalgebra(int prpr_sign = -1) {
  using namespace kalgebra_detail;
  KAlgebra K;
  HopfPresentation& P = K.P;

  const char* names[12] = {"M12", "M13", "M23", "M10", "M20", "M30",
                           "P0",  "P1",  "P2",  "P3",  "A",   "A^-1"};
  for (int id = 0; id < 12; ++id) {
    int cls = id < 3 ? 0 : id < 6 ? 1 : id < 10 ? 2 : 3;
    int weight = id < 6 ? 2 : id < 10 ? 1 : 0;
    P.add_generator(names[id], cls, id, weight);
  }

  // rewrite  y x -> x y + [y, x]  for every out-of-order pair, plus the
  // inverse-pair cancellations for A
  for (int x = 0; x < 12; ++x)
    for (int y = x + 1; y < 12; ++y) {
      if (x == K.a() && y == K.a_inv()) continue;
      AlgebraElement rhs = ae_word({x, y});
      rhs = ae_sub(rhs, gen_bracket(K, x, y, prpr_sign));  // [y,x] = -[x,y]
      P.add_rule(y, x, rhs);
    }
  P.add_rule(K.a(), K.a_inv(), ae_one());
  P.add_rule(K.a_inv(), K.a(), ae_one());

  // Hopf structure
  const Coefficient k = coeff_kappa();
  for (int id = 0; id < 12; ++id) P.set_counit(id, id >= 10 ? coeff_one() : coeff_zero());

  for (int id = 0; id < 3; ++id) {  // rotations: primitive
    TensorElement d;
    te_add_term(d, {{id}, {}}, coeff_one());
    te_add_term(d, {{}, {id}}, coeff_one());
    P.set_coproduct(id, d);
    P.set_antipode(id, ae_word({id}, -coeff_one()));
  }
  for (int i = 1; i <= 3; ++i) {  // boosts
    int b = K.boost(i);
    TensorElement d;
    te_add_term(d, {{}, {b}}, coeff_one());
    te_add_term(d, {{b}, {K.a()}}, coeff_one());
    for (int j = 1; j <= 3; ++j) {
      auto [id, s] = K.m_rot(i, j);
      if (s == 0) continue;
      te_add_term(d, {{id}, {K.p(j)}}, coeff_rat(s) / k);
    }
    P.set_coproduct(b, d);
    // S(M_i0) = -(M_i0 - (1/k) M_ij P_j) A^-1; the noncommuting A^-1 factor
    // must sit on the right for both antipode convolutions to vanish
    AlgebraElement s_el = ae_word({b, K.a_inv()}, -coeff_one());
    for (int j = 1; j <= 3; ++j) {
      auto [id, s] = K.m_rot(i, j);
      if (s == 0) continue;
      ae_add_term(s_el, {id, K.p(j), K.a_inv()}, coeff_rat(s) / k);
    }
    P.set_antipode(b, s_el);
  }
  {  // P0: primitive, S(P0) = -P0
    TensorElement d;
    te_add_term(d, {{K.p(0)}, {}}, coeff_one());
    te_add_term(d, {{}, {K.p(0)}}, coeff_one());
    P.set_coproduct(K.p(0), d);
    P.set_antipode(K.p(0), ae_word({K.p(0)}, -coeff_one()));
  }
  for (int j = 1; j <= 3; ++j) {  // P_k: Delta = P_k x A + 1 x P_k
    TensorElement d;
    te_add_term(d, {{K.p(j)}, {K.a()}}, coeff_one());
    te_add_term(d, {{}, {K.p(j)}}, coeff_one());
    P.set_coproduct(K.p(j), d);
    P.set_antipode(K.p(j), ae_word({K.a_inv(), K.p(j)}, -coeff_one()));
  }
  for (int id : {K.a(), K.a_inv()}) {  // group-likes
    TensorElement d;
    te_add_term(d, {{id}, {id}}, coeff_one());
    P.set_coproduct(id, d);
    P.set_antipode(id, ae_gen(id == K.a() ? K.a_inv() : K.a()));
  }
  return K;
}

/// Commutator of already-built elements.
inline AlgebraElement ae_commutator(const HopfPresentation& P, const AlgebraElement& a,
                                    const AlgebraElement& b) {
  return ae_sub(P.multiply(a, b), P.multiply(b, a));
}

/// All 165 Jacobi identities over {M12,M13,M23,M10,M20,M30,P0..P3,A}.
inline Report jacobi_suite(int prpr_sign = -1) {
  KAlgebra K = build_kalgebra(prpr_sign);
  Report rep;
  rep.suite = "algebra-jacobi";
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int x = 0; x < 11; ++x)
    for (int y = x + 1; y < 11; ++y)
      for (int z = y + 1; z < 11; ++z) {
        AlgebraElement s = ae_commutator(K.P, ae_commutator(K.P, ae_gen(x), ae_gen(y)),
                                         ae_gen(z));
        s = ae_add(s, ae_commutator(K.P, ae_commutator(K.P, ae_gen(y), ae_gen(z)),
                                    ae_gen(x)));
        s = ae_add(s, ae_commutator(K.P, ae_commutator(K.P, ae_gen(z), ae_gen(x)),
                                    ae_gen(y)));
        ++checked;
        if (!s.empty() && ok) {
          ok = false;
          detail = "nonzero Jacobi residual for (" + K.P.generators()[x].name + ", " +
                   K.P.generators()[y].name + ", " + K.P.generators()[z].name +
                   "): " + K.P.elem_str(s);
        }
      }
  rep.add("jacobi-all-triples", ok,
          ok ? std::to_string(checked) + " triples reduce to zero" : detail);
  return rep;
}

/// Hopf axiom suite plus the explicit coproduct homomorphism property
/// Delta[a,b] = [Delta a, Delta b] on every unordered generator pair.
inline Report kalgebra_hopf_verify(int max_deg, int samples, unsigned long seed) {
  KAlgebra K = build_kalgebra();
  Report rep = check_hopf_axioms(K.P, max_deg, samples, seed);
  rep.suite = "algebra-hopf";

  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int x = 0; x < 11 && ok; ++x)
    for (int y = x + 1; y < 11 && ok; ++y) {
      TensorElement da = K.P.coproduct(ae_gen(x));
      TensorElement db = K.P.coproduct(ae_gen(y));
      TensorElement lhs = K.P.coproduct(ae_commutator(K.P, ae_gen(x), ae_gen(y)));
      TensorElement rhs = te_sub(K.P.te_multiply(da, db), K.P.te_multiply(db, da));
      ++checked;
      if (!K.P.is_zero(te_sub(lhs, rhs))) {
        ok = false;
        detail = "Delta is not a homomorphism on [" + K.P.generators()[x].name + ", " +
                 K.P.generators()[y].name + "]";
      }
    }
  rep.add("coproduct-bracket-homomorphism", ok,
          ok ? std::to_string(checked) + " brackets verified" : detail);
  return rep;
}

namespace kalgebra_detail {

/// Replace every A / A^-1 factor by the truncated exponential series
/// sum_{n<=N} (-+P0/k)^n / n!; the result has words in M and P only.
inline AlgebraElement substitute_a_series(const KAlgebra& K, const AlgebraElement& x,
                                          int order) {
  // truncated series for A^{sign} as (P0-power, coefficient) pairs
  auto series = [&](int sign) {
    std::vector<Coefficient> c(order + 1);
    Coefficient term = coeff_one();
    c[0] = term;
    for (int n = 1; n <= order; ++n) {
      term = term * coeff_rat(-sign) / (coeff_kappa() * coeff_rat(n));
      c[n] = term;
    }
    return c;
  };
  const std::vector<Coefficient> sa = series(1), sai = series(-1);

  AlgebraElement out;
  for (const auto& [w, c] : x) {
    std::vector<std::pair<Word, Coefficient>> acc{{Word{}, c}};
    for (int id : w) {
      if (id != K.a() && id != K.a_inv()) {
        for (auto& [aw, ac] : acc) aw.push_back(id);
        continue;
      }
      const std::vector<Coefficient>& s = id == K.a() ? sa : sai;
      std::vector<std::pair<Word, Coefficient>> next;
      for (const auto& [aw, ac] : acc)
        for (int n = 0; n <= order; ++n) {
          Word nw = aw;
          nw.insert(nw.end(), (size_t)n, K.p(0));
          next.emplace_back(std::move(nw), ac * s[n]);
        }
      acc = std::move(next);
    }
    for (auto& [aw, ac] : acc) {
      std::sort(aw.begin(), aw.end());  // only commuting momenta get reordered
      ae_add_term(out, aw, ac);
    }
  }
  return out;
}

/// Classical Poincare bracket [x, y] (x < y): the komut table at k = infinity,
/// where A = 1 and the deformed boost-momentum bracket becomes -i g_ik P0.
inline AlgebraElement classical_bracket(const KAlgebra& K, int x, int y) {
  if (y >= 10 || x >= 10) return {};                        // [., A] -> 0
  if (!(K.is_boost(x) && K.is_momentum(y) && y != K.p(0)))  // undeformed cases
    return gen_bracket(K, x, y, -1);
  int i = x - 2, kk = y - 6;
  AlgebraElement r;
  if (i == kk) ae_add_term(r, {K.p(0)}, -coeff_i() * coeff_rat(-1));  // -i g_ik P0
  return r;
}

}  // namespace kalgebra_detail

/// Truncate A at the given series order in every bracket and collect powers of
/// kappa: the kappa^0 part must be the classical Poincare structure constants
/// and no positive power of kappa may survive.
inline Report classical_limit_suite(int order) {
  using namespace kalgebra_detail;
  KAlgebra K = build_kalgebra();
  Report rep;
  rep.suite = "classical-limit";

  bool ok0 = true, okpos = true;
  std::string det0, detpos;
  for (int x = 0; x < 11; ++x)
    for (int y = x + 1; y < 11; ++y) {
      AlgebraElement br =
          substitute_a_series(K, ae_commutator(K.P, ae_gen(x), ae_gen(y)), order);
      AlgebraElement diff = ae_sub(br, classical_bracket(K, x, y));
      std::string pair = "[" + K.P.generators()[x].name + ", " +
                         K.P.generators()[y].name + "]";
      for (const auto& [w, c] : br) {
        for (const auto& [n, coef] : coeff_series(c, order))
          if (n < 0 && !coef.is_zero() && okpos) {
            okpos = false;
            detpos = pair + " has a kappa^" + std::to_string(-n) + " term";
          }
      }
      for (const auto& [w, c] : diff) {
        auto ser = coeff_series(c, order);
        auto it = ser.find(0);
        if (it != ser.end() && !it->second.is_zero() && ok0) {
          ok0 = false;
          det0 = pair + " kappa^0 part differs from the classical bracket";
        }
      }
    }
  rep.add("kappa0-structure-constants", ok0,
          ok0 ? "all 55 brackets match classical Poincare at kappa^0" : det0);
  rep.add("no-positive-kappa-powers", okpos,
          okpos ? "expansions are regular at kappa = infinity" : detpos);
  return rep;
}

}  // namespace kappa

#endif
