#ifndef KAPPA_KGROUP_HPP
#define KAPPA_KGROUP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>

#include "kappa/hopfcore.hpp"

namespace kappa {

/// The kappa-Poincare function Hopf algebra: 16 commuting matrix entries
/// L[mu][nu] of a Lorentz matrix and 4 noncommuting translations v[mu] with
///   [L^a_b, v^r] = -(i/k)((L^a_0 - d^a_0) L^r_b + (L_{0b} - g_{0b}) g^{ar})
///   [v^r, v^s]   =  (i/k)(d^r_0 v^s - d^s_0 v^r)
/// Delta L = L (x) L (matrix),  Delta v = L (x) v + v (x) 1,
/// S(L^m_n) = g_nn g^mm L^n_m,  group structure dual to the deformed algebra.
///
/// The rewrite system does not impose the Lorentz condition L^T g L = g; that
/// quotient is handled by an exact zero-test hook instead: residuals are
/// pulled back through the Cayley parametrization of the complex orthogonal
/// group and must vanish identically as polynomials in the chart parameters.
/// Both determinant components are covered, the orthogonality ideal is
/// radical, so vanishing on the chart is equivalent to membership.
struct KGroup {
  HopfPresentation P;
  std::array<int, 4> metric{1, -1, -1, -1};

  int L(int mu, int nu) const { return 4 * mu + nu; }
  int v(int mu) const { return 16 + mu; }

  bool is_lambda(int id) const { return id < 16; }
};

namespace kgroup_detail {

using GP = MPoly<GaussRat>;

inline GP gp_det(const std::vector<std::vector<GP>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  GP d(m[0][0].nvars());
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<GP>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<GP> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    GP t = m[0][j] * gp_det(minor);
    d = (j % 2 == 0) ? d + t : d - t;
  }
  return d;
}

inline std::vector<std::vector<GP>> gp_adjugate(const std::vector<std::vector<GP>>& m) {
  size_t n = m.size();
  std::vector<std::vector<GP>> adj(n, std::vector<GP>(n, GP((int)m[0][0].nvars())));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<GP>> minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<GP> row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      GP cof = gp_det(minor);
      if ((i + j) % 2) cof = -cof;
      adj[j][i] = cof;  // transpose of cofactors
    }
  return adj;
}

/// Re-embed a 6-variable polynomial into `total` variables at `offset`.
inline GP shift_vars(const GP& p, int offset, int total) {
  GP r(total);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> ee(total, 0);
    for (size_t i = 0; i < e.size(); ++i) ee[offset + i] = e[i];
    r.add_term(ee, c);
  }
  return r;
}

/// Numerators N_comp[mu][nu] and denominator det of the Cayley chart
///   Lambda = D_comp (I - X)(I + X)^{-1},   X = g K,  K skew in 6 parameters,
/// D_0 = I and D_1 = diag(1,-1,1,1) reaching the det = -1 component.
struct CayleyChart {
  std::array<std::array<std::array<GP, 4>, 4>, 2> N;
  GP det;

  explicit CayleyChart(const std::array<int, 4>& metric) {
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<GP>> K(4, std::vector<GP>(4, GP(6)));
    for (int t = 0; t < 6; ++t) {
      GP x = GP::variable(6, t);
      K[pairs[t][0]][pairs[t][1]] = x;
      K[pairs[t][1]][pairs[t][0]] = -x;
    }
    std::vector<std::vector<GP>> X(4, std::vector<GP>(4, GP(6)));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) X[i][j] = K[i][j] * GP::constant(6, GaussRat(metric[i]));
    std::vector<std::vector<GP>> Mp(4, std::vector<GP>(4, GP(6)));
    std::vector<std::vector<GP>> Mm(4, std::vector<GP>(4, GP(6)));
    GP one = GP::constant(6, GaussRat(1));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Mp[i][j] = X[i][j];
        Mm[i][j] = -X[i][j];
        if (i == j) {
          Mp[i][j] += one;
          Mm[i][j] += one;
        }
      }
    det = gp_det(Mp);
    auto adj = gp_adjugate(Mp);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        GP s(6);
        for (int r = 0; r < 4; ++r) s += Mm[i][r] * adj[r][j];
        N[0][i][j] = s;
        N[1][i][j] = (i == 1) ? -s : s;  // D_1 = diag(1,-1,1,1)
      }
  }
};
/// Decision procedure for the orthogonality quotient.  At construction it
/// runs Buchberger (grevlex, packed exponents) on the 20 quadrics of
/// L^T g L = g and L g L^T = g and keeps a minimal monic Groebner basis.
/// The ideal is radical (the group is a smooth complete intersection), so a
/// residual vanishes on the group iff its normal form modulo the basis is
/// zero; per-slot reduction likewise decides tensor-power residuals.  The
/// Cayley chart above is retained as an independent cross-check.
struct OrthoTester {
  CayleyChart chart;
  mutable std::map<std::pair<int, Word>, GP> memo;

  /// Monomial over up to 3 tensor slots x 16 Lambda entries, one nibble per
  /// exponent, total degree cached.
  struct Mono {
    std::array<uint64_t, 3> e{0, 0, 0};
    int deg = 0;
  };
  struct MonoGrevlex {
    bool operator()(const Mono& a, const Mono& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      for (int s = 2; s >= 0; --s)
        for (int v = 15; v >= 0; --v) {
          int ea = (int)((a.e[s] >> (4 * v)) & 15), eb = (int)((b.e[s] >> (4 * v)) & 15);
          if (ea != eb) return ea > eb;  // grevlex: larger last exponent is smaller
        }
      return false;
    }
  };
  using GBPoly = std::vector<std::pair<Mono, mpq_class>>;  // ascending, monic lead last
  std::vector<GBPoly> gb;

  static Mono mono_var(int slot, int v, int pow = 1) {
    Mono m;
    m.e[slot] = (uint64_t)pow << (4 * v);
    m.deg = pow;
    return m;
  }
  static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m;
    for (int s = 0; s < 3; ++s) m.e[s] = a.e[s] + b.e[s];
    m.deg = a.deg + b.deg;
    return m;
  }
  static bool mono_divides(const Mono& d, const Mono& m) {
    for (int s = 0; s < 3; ++s)
      for (int v = 0; v < 16; ++v)
        if (((d.e[s] >> (4 * v)) & 15) > ((m.e[s] >> (4 * v)) & 15)) return false;
    return true;
  }
  static Mono mono_quot(const Mono& m, const Mono& d) {
    Mono q;
    for (int s = 0; s < 3; ++s) q.e[s] = m.e[s] - d.e[s];
    q.deg = m.deg - d.deg;
    return q;
  }
  static Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono m;
    for (int s = 0; s < 3; ++s)
      for (int v = 0; v < 16; ++v) {
        uint64_t e = std::max((a.e[s] >> (4 * v)) & 15, (b.e[s] >> (4 * v)) & 15);
        m.e[s] |= e << (4 * v);
        m.deg += (int)e;
      }
    return m;
  }
  static Mono embed(const Mono& m, int slot) {
    Mono r;
    r.e[slot] = m.e[0];
    r.deg = m.deg;
    return r;
  }

  explicit OrthoTester(const std::array<int, 4>& metric) : chart(metric) {
    build_groebner(metric);
  }

  /// Normal form of a residual, written over rank-many slot copies of the
  /// Lambda entries, modulo the per-slot orthogonality basis.
  std::map<Mono, Coefficient, MonoGrevlex> gb_reduce(
      std::map<Mono, Coefficient, MonoGrevlex> f, int rank) const {
    std::map<Mono, Coefficient, MonoGrevlex> rem;
    while (!f.empty()) {
      auto lt = std::prev(f.end());
      Mono m = lt->first;
      Coefficient c = lt->second;
      bool hit = false;
      for (int s = 0; s < rank && !hit; ++s)
        for (const auto& g : gb) {
          Mono lead = embed(g.back().first, s);
          if (!mono_divides(lead, m)) continue;
          Mono q = mono_quot(m, lead);
          for (const auto& [gm, gc] : g) {
            Mono nm = mono_mul(q, embed(gm, s));
            Coefficient delta = c * Coefficient(GaussRat(gc));
            auto it = f.find(nm);
            if (it == f.end()) {
              if (!delta.is_zero()) f.emplace(nm, -delta);
            } else {
              it->second -= delta;
              if (it->second.is_zero()) f.erase(it);
            }
          }
          hit = true;
          break;
        }
      if (!hit) {
        rem.emplace(m, c);
        f.erase(m);
      }
    }
    return rem;
  }

  bool tuple_vanishes(const std::vector<std::pair<std::vector<Word>, Coefficient>>& grp,
                      int rank) const {
    std::map<Mono, Coefficient, MonoGrevlex> f;
    for (const auto& [lws, c] : grp) {
      Mono m;
      for (int s = 0; s < rank; ++s)
        for (int id : lws[s]) m = mono_mul(m, mono_var(s, id));
      auto it = f.find(m);
      if (it == f.end()) {
        if (!c.is_zero()) f.emplace(m, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
      }
    }
    return gb_reduce(std::move(f), rank).empty();
  }

  // -- independent cross-check via the Cayley chart -------------------------

  const GP& pullback(int comp, const Word& lw) const {
    auto key = std::make_pair(comp, lw);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    GP p = GP::constant(6, GaussRat(1));
    for (int id : lw) p = p * chart.N[comp][id / 4][id % 4];
    return memo.emplace(std::move(key), std::move(p)).first->second;
  }

  /// Same question answered by pulling the residual back through the chart
  /// (slots draw independent parameters, both determinant components, scalar
  /// coefficients cleared to a common denominator).  Exponential in degree;
  /// used by tests to validate the Groebner route on small inputs.
  bool chart_vanishes(const std::vector<std::pair<std::vector<Word>, Coefficient>>& grp,
                      int rank) const {
    std::vector<size_t> dmax((size_t)rank, 0);
    for (const auto& [lws, c] : grp)
      for (int s = 0; s < rank; ++s) dmax[s] = std::max(dmax[s], lws[s].size());
    int xvars = 6 * rank, total = xvars + 3;
    GP den = GP::constant(3, GaussRat(1));
    for (const auto& [lws, c] : grp) den = mpoly_lcm(den, c.den().promoted(3));
    for (int mask = 0; mask < (1 << rank); ++mask) {
      GP acc0(total), acc1(total);
      for (const auto& [lws, c] : grp) {
        GP q = GP::constant(total, GaussRat(1));
        for (int s = 0; s < rank; ++s) {
          int comp = (mask >> s) & 1;
          GP f = pullback(comp, lws[s]) * chart.det.pow((int)(dmax[s] - lws[s].size()));
          q = q * shift_vars(f, 6 * s, total);
        }
        GP mult = *den.divide_exact(c.den().promoted(3));
        if (!c.num0().is_zero())
          acc0 += q * shift_vars(c.num0().promoted(3) * mult, xvars, total);
        if (!c.num1().is_zero())
          acc1 += q * shift_vars(c.num1().promoted(3) * mult, xvars, total);
      }
      if (!acc0.is_zero() || !acc1.is_zero()) return false;
    }
    return true;
  }

private:
  void build_groebner(const std::array<int, 4>& metric) {
    auto add_term = [](GBPoly& p, const Mono& m, const mpq_class& c) {
      for (auto& [pm, pc] : p)
        if (pm.e == m.e) {
          pc += c;
          return;
        }
      p.emplace_back(m, c);
    };
    auto tidy = [](GBPoly& p) {  // sort ascending, drop zeros, make monic
      p.erase(std::remove_if(p.begin(), p.end(),
                             [](const auto& t) { return t.second == 0; }),
              p.end());
      std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) {
        return MonoGrevlex{}(a.first, b.first);
      });
      if (!p.empty()) {
        mpq_class lc = p.back().second;
        for (auto& [m, c] : p) c /= lc;
      }
    };
    std::vector<GBPoly> G;
    for (int family = 0; family < 2; ++family)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
          GBPoly p;
          for (int rho = 0; rho < 4; ++rho) {
            int a = family == 0 ? 4 * rho + mu : 4 * mu + rho;
            int b = family == 0 ? 4 * rho + nu : 4 * nu + rho;
            add_term(p, mono_mul(mono_var(0, a), mono_var(0, b)), metric[rho]);
          }
          if (mu == nu) add_term(p, Mono{}, -metric[mu]);
          tidy(p);
          G.push_back(std::move(p));
        }

    auto reduce_full = [&](GBPoly f, const std::vector<GBPoly>& basis) {
      std::map<Mono, mpq_class, MonoGrevlex> work(f.begin(), f.end());
      // rebuild map summing duplicates
      work.clear();
      for (auto& [m, c] : f) work[m] += c;
      for (auto it = work.begin(); it != work.end();)
        it = it->second == 0 ? work.erase(it) : std::next(it);
      GBPoly rem;
      while (!work.empty()) {
        auto lt = std::prev(work.end());
        Mono m = lt->first;
        mpq_class c = lt->second;
        const GBPoly* hit = nullptr;
        for (const auto& g : basis)
          if (mono_divides(g.back().first, m)) {
            hit = &g;
            break;
          }
        if (!hit) {
          rem.emplace_back(m, c);
          work.erase(std::prev(work.end()));
          continue;
        }
        Mono q = mono_quot(m, hit->back().first);
        for (const auto& [gm, gc] : *hit) {
          Mono nm = mono_mul(q, gm);
          auto it = work.find(nm);
          mpq_class delta = c * gc;
          if (it == work.end()) {
            if (delta != 0) work.emplace(nm, -delta);
          } else {
            it->second -= delta;
            if (it->second == 0) work.erase(it);
          }
        }
      }
      std::reverse(rem.begin(), rem.end());  // ascending
      return rem;
    };

    struct PairEntry {
      int i, j;
      Mono l;
    };
    std::vector<PairEntry> pairs;
    auto lead = [&](int i) { return G[i].back().first; };
    for (size_t i = 0; i < G.size(); ++i)
      for (size_t j = i + 1; j < G.size(); ++j)
        pairs.push_back({(int)i, (int)j, mono_lcm(lead((int)i), lead((int)j))});
    while (!pairs.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs.size(); ++k)
        if (pairs[k].l.deg < pairs[best].l.deg) best = k;
      PairEntry pr = pairs[best];
      pairs.erase(pairs.begin() + best);
      Mono li = lead(pr.i), lj = lead(pr.j);
      if (pr.l.deg == li.deg + lj.deg) continue;  // coprime-leads criterion
      bool chain = false;  // chain criterion: a settled third element divides the lcm
      for (size_t k = 0; k < G.size() && !chain; ++k) {
        if ((int)k == pr.i || (int)k == pr.j) continue;
        if (!mono_divides(lead((int)k), pr.l)) continue;
        bool pending = false;
        for (const auto& q : pairs)
          if ((q.i == pr.i && q.j == (int)k) || (q.i == (int)k && q.j == pr.i) ||
              (q.i == pr.j && q.j == (int)k) || (q.i == (int)k && q.j == pr.j))
            pending = true;
        if (!pending) chain = true;
      }
      if (chain) continue;
      GBPoly s;
      Mono qi = mono_quot(pr.l, li), qj = mono_quot(pr.l, lj);
      for (const auto& [m, c] : G[pr.i]) s.emplace_back(mono_mul(m, qi), c);
      for (const auto& [m, c] : G[pr.j]) s.emplace_back(mono_mul(m, qj), -c);
      GBPoly r = reduce_full(std::move(s), G);
      if (r.empty()) continue;
      mpq_class lc = r.back().second;
      for (auto& [m, c] : r) c /= lc;
      for (size_t k = 0; k < G.size(); ++k)
        pairs.push_back({(int)k, (int)G.size(), mono_lcm(lead((int)k), r.back().first)});
      G.push_back(std::move(r));
    }

    // minimalize and fully reduce tails
    std::vector<GBPoly> M;
    for (size_t i = 0; i < G.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < G.size() && !redundant; ++j) {
        if (i == j) continue;
        if (!mono_divides(lead((int)j), lead((int)i))) continue;
        if (lead((int)j).e == lead((int)i).e && j > i) continue;  // keep first of ties
        redundant = true;
      }
      if (!redundant) M.push_back(G[i]);
    }
    for (size_t i = 0; i < M.size(); ++i) {
      GBPoly tail(M[i].begin(), std::prev(M[i].end()));
      std::vector<GBPoly> others;
      for (size_t j = 0; j < M.size(); ++j)
        if (j != i) others.push_back(M[j]);
      GBPoly nf = reduce_full(std::move(tail), others);
      nf.push_back(M[i].back());
      M[i] = std::move(nf);
    }
    gb = std::move(M);
  }
};

inline std::pair<Word, Word> split_lambda_v(const Word& w) {
  Word lw, vw;
  for (int id : w) (id < 16 ? lw : vw).push_back(id);
  return {lw, vw};
}

}  // namespace kgroup_detail

/// Build the presentation.  `antipode_metric` lets the verification suite
/// install a deliberately inconsistent antipode (the negative control); it
/// defaults to the structural metric.
inline KGroup build_kgroup(const std::array<int, 4>& metric = {1, -1, -1, -1},
                           const std::array<int, 4>* antipode_metric = nullptr) {
  using namespace kgroup_detail;
  const std::array<int, 4>& smetric = antipode_metric ? *antipode_metric : metric;
  KGroup G;
  G.metric = metric;
  HopfPresentation& P = G.P;

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      P.add_generator("L[" + std::to_string(mu) + "][" + std::to_string(nu) + "]", 0,
                      4 * mu + nu, 1);
  for (int mu = 0; mu < 4; ++mu)
    P.add_generator("v[" + std::to_string(mu) + "]", mu == 0 ? 1 : 2, mu, 2);

  const Coefficient iok = coeff_i() / coeff_kappa();

  // Lambda entries commute
  for (int a = 1; a < 16; ++a)
    for (int b = 0; b < a; ++b) P.add_rule(a, b, ae_word({b, a}));

  // [v^r, v^s] = (i/k)(d^r_0 v^s - d^s_0 v^r); normal order puts lower index left
  for (int r = 1; r < 4; ++r)
    for (int s = 0; s < r; ++s) {
      AlgebraElement rhs = ae_word({G.v(s), G.v(r)});
      if (s == 0) ae_add_term(rhs, {G.v(r)}, -iok);
      P.add_rule(G.v(r), G.v(s), rhs);
    }

  // v^r L^a_b -> L^a_b v^r + (i/k)((L^a_0 - d^a_0) L^r_b + (L_{0b} - g_{0b}) g^{ar})
  for (int r = 0; r < 4; ++r)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        AlgebraElement rhs = ae_word({G.L(a, b), G.v(r)});
        Word w{G.L(a, 0), G.L(r, b)};
        std::sort(w.begin(), w.end());
        ae_add_term(rhs, w, iok);
        if (a == 0) ae_add_term(rhs, {G.L(r, b)}, -iok);
        if (a == r) {
          Coefficient ga = coeff_rat(metric[0] * metric[a]);
          ae_add_term(rhs, {G.L(0, b)}, iok * ga);
          if (b == 0) ae_add_term(rhs, {}, -iok * ga);
        }
        P.add_rule(G.v(r), G.L(a, b), rhs);
      }

  // Hopf maps on generators
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      TensorElement d;
      for (int rho = 0; rho < 4; ++rho)
        te_add_term(d, {{G.L(mu, rho)}, {G.L(rho, nu)}}, coeff_one());
      P.set_coproduct(G.L(mu, nu), d);
      P.set_counit(G.L(mu, nu), mu == nu ? coeff_one() : coeff_zero());
      P.set_antipode(G.L(mu, nu),
                     ae_word({G.L(nu, mu)}, coeff_rat(smetric[mu] * smetric[nu])));
    }
  for (int mu = 0; mu < 4; ++mu) {
    TensorElement d;
    for (int nu = 0; nu < 4; ++nu) te_add_term(d, {{G.L(mu, nu)}, {G.v(nu)}}, coeff_one());
    te_add_term(d, {{G.v(mu)}, {}}, coeff_one());
    P.set_coproduct(G.v(mu), d);
    P.set_counit(G.v(mu), coeff_zero());
    AlgebraElement s;
    for (int nu = 0; nu < 4; ++nu)
      ae_add_term(s, {G.L(nu, mu), G.v(nu)}, -coeff_rat(smetric[mu] * smetric[nu]));
    P.set_antipode(G.v(mu), s);
  }

  // Orthogonality quotient as exact zero-test hooks
  auto tester = std::make_shared<OrthoTester>(metric);
  P.scalar_zero_hook = [tester](const AlgebraElement& x) {
    std::map<Word, std::vector<std::pair<std::vector<Word>, Coefficient>>> groups;
    for (const auto& [w, c] : x) {
      auto [lw, vw] = split_lambda_v(w);
      groups[vw].emplace_back(std::vector<Word>{lw}, c);
    }
    for (const auto& [vw, grp] : groups)
      if (!tester->tuple_vanishes(grp, 1)) return false;
    return true;
  };
  P.tensor_zero_hook = [tester](const TensorElement& t) {
    // group by the tuple of v-words across slots; slots get independent
    // chart parameters, so the residual vanishes in the quotient tensor
    // power iff each group's multi-slot pullback polynomial vanishes
    std::map<std::vector<Word>, std::vector<std::pair<std::vector<Word>, Coefficient>>> groups;
    for (const auto& [ws, c] : t.terms) {
      std::vector<Word> lws, vws;
      for (const auto& w : ws) {
        auto [lw, vw] = split_lambda_v(w);
        lws.push_back(lw);
        vws.push_back(vw);
      }
      groups[vws].emplace_back(lws, c);
    }
    for (const auto& [vws, grp] : groups)
      if (!tester->tuple_vanishes(grp, t.rank)) return false;
    return true;
  };

  return G;
}

/// Full verification suite for the group side: Hopf axioms, rule
/// compatibility, and the matrix form of the antipode law
/// m(S (x) id) Delta L = eta eps L, i.e. S(L)L = I, which encodes L^T g L = g.
inline Report kgroup_verify(int max_deg, int samples, unsigned long seed,
                            bool corrupt_antipode_metric = false) {
  std::array<int, 4> all_plus{1, 1, 1, 1};
  KGroup G = build_kgroup({1, -1, -1, -1},
                          corrupt_antipode_metric ? &all_plus : nullptr);
  Report rep = check_hopf_axioms(G.P, max_deg, samples, seed);
  rep.suite = "group-hopf";

  bool ok = true;
  std::string detail;
  for (int mu = 0; mu < 4 && ok; ++mu)
    for (int nu = 0; nu < 4 && ok; ++nu) {
      AlgebraElement s;
      for (int rho = 0; rho < 4; ++rho) {
        AlgebraElement t = G.P.multiply(G.P.antipode(ae_gen(G.L(mu, rho))),
                                        ae_gen(G.L(rho, nu)));
        s = ae_add(s, t);
      }
      if (mu == nu) s = ae_sub(s, ae_one());
      if (!G.P.is_zero(s)) {
        ok = false;
        detail = "S(L)L != I at entry (" + std::to_string(mu) + "," + std::to_string(nu) + ")";
      }
    }
  rep.add("antipode-orthogonality-matrix", ok, detail);
  return rep;
}

}  // namespace kappa

#endif
