#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/kgroup.hpp"

using namespace kappa;

TEST_CASE("group relations normalize as expected") {
  KGroup G = build_kgroup();
  const Coefficient iok = coeff_i() / coeff_kappa();

  // [v^1, v^0] = -(i/k) v^1
  AlgebraElement lhs = ae_sub(G.P.multiply(ae_gen(G.v(1)), ae_gen(G.v(0))),
                              G.P.multiply(ae_gen(G.v(0)), ae_gen(G.v(1))));
  AlgebraElement expect = ae_word({G.v(1)}, -iok);
  CHECK(lhs == G.P.normal_form(expect));

  // spatial translations commute
  AlgebraElement c23 = ae_sub(G.P.multiply(ae_gen(G.v(2)), ae_gen(G.v(3))),
                              G.P.multiply(ae_gen(G.v(3)), ae_gen(G.v(2))));
  CHECK(c23.empty());

  // [L^a_b, v^r] reproduces the defining bracket for a sample entry
  int a = 1, b = 2, r = 3;
  AlgebraElement br = ae_sub(G.P.multiply(ae_gen(G.L(a, b)), ae_gen(G.v(r))),
                             G.P.multiply(ae_gen(G.v(r)), ae_gen(G.L(a, b))));
  AlgebraElement want;  // -(i/k) (L^1_0 L^3_2)  (delta terms vanish here)
  ae_add_term(want, {G.L(a, 0), G.L(r, b)}, -iok);
  CHECK(ae_sub(br, G.P.normal_form(want)).empty());
}

TEST_CASE("orthogonality hook recognizes the Lorentz ideal") {
  KGroup G = build_kgroup();
  // L^T g L - g: entry (mu,nu) is sum_r g_rr L^r_mu L^r_nu - g_mu delta
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      AlgebraElement rel;
      for (int rr = 0; rr < 4; ++rr) {
        Word w{G.L(rr, mu), G.L(rr, nu)};
        std::sort(w.begin(), w.end());
        ae_add_term(rel, w, coeff_rat(G.metric[rr]));
      }
      if (mu == nu) ae_add_term(rel, {}, -coeff_rat(G.metric[mu]));
      CHECK(G.P.is_zero(rel));
    }
  // ...but a generic quadratic is not declared zero
  AlgebraElement fake = ae_word({G.L(0, 0), G.L(1, 1)});
  CHECK(!G.P.is_zero(fake));
  AlgebraElement offdiag = ae_word({G.L(0, 1)});
  CHECK(!G.P.is_zero(offdiag));
}

TEST_CASE("groebner zero-test agrees with the Cayley chart") {
  using kgroup_detail::OrthoTester;
  OrthoTester T({1, -1, -1, -1});
  KGroup G = build_kgroup();

  auto probe = [&](const std::vector<std::pair<std::vector<Word>, Coefficient>>& grp,
                   int rank, bool expect) {
    CHECK(T.tuple_vanishes(grp, rank) == expect);
    CHECK(T.chart_vanishes(grp, rank) == expect);
  };

  // orthogonality relation L^T g L - g, entry (1,2): in the ideal
  std::vector<std::pair<std::vector<Word>, Coefficient>> rel;
  for (int rr = 0; rr < 4; ++rr)
    rel.push_back({{Word{G.L(rr, 1), G.L(rr, 2)}}, coeff_rat(G.metric[rr])});
  probe(rel, 1, true);

  // the same relation tensored with a group-like factor, in slot 2 of rank 2
  std::vector<std::pair<std::vector<Word>, Coefficient>> rel2;
  for (int rr = 0; rr < 4; ++rr)
    rel2.push_back({{Word{G.L(0, 0)}, Word{G.L(rr, 1), G.L(rr, 2)}},
                    coeff_rat(G.metric[rr])});
  probe(rel2, 2, true);

  // generic elements outside the ideal
  probe({{{Word{G.L(0, 0), G.L(1, 1)}}, coeff_one()}}, 1, false);
  probe({{{Word{G.L(2, 3)}}, coeff_one()}}, 1, false);
  probe({{{Word{G.L(0, 0)}, Word{G.L(1, 1)}}, coeff_one()}}, 2, false);

  // a cubic multiple of an ideal element is still recognized
  std::vector<std::pair<std::vector<Word>, Coefficient>> cubic;
  for (int rr = 0; rr < 4; ++rr) {
    Word w{G.L(3, 3), G.L(rr, 0), G.L(rr, 0)};
    std::sort(w.begin(), w.end());
    cubic.push_back({{w}, coeff_rat(G.metric[rr])});
  }
  cubic.push_back({{Word{G.L(3, 3)}}, -coeff_rat(G.metric[0])});
  probe(cubic, 1, true);
}

TEST_CASE("group hopf suite passes") {
  Report rep = kgroup_verify(3, 50, 20240501);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("antipode with all-plus metric is rejected") {
  Report rep = kgroup_verify(2, 4, 20240501, true);
  INFO(rep.text());
  CHECK(!rep.passed());
  bool antipode_failed = false;
  for (const auto& c : rep.checks)
    if (!c.pass && c.name.rfind("antipode", 0) == 0) antipode_failed = true;
  CHECK(antipode_failed);
}
