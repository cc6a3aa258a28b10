#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/duality.hpp"

using namespace kappa;

TEST_CASE("generator-level pairings") {
  DualityPairing D;
  const KAlgebra& K = D.algebra();
  const KGroup& G = D.group();

  // <P_mu, v^nu> = i delta
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Coefficient want = mu == nu ? coeff_i() : coeff_zero();
      CHECK(D.pair_words({K.p(mu)}, {G.v(nu)}, true) == want);
    }

  // <M12, L^1_2> = -i (second-index raising picks g_22 = -1)
  CHECK(D.pair_words({K.m_rot(1, 2).first}, {G.L(1, 2)}, true) == -coeff_i());
  CHECK(D.pair_words({K.m_rot(1, 2).first}, {G.L(2, 1)}, true) == coeff_i());
  // <M10, L^1_0> = i g_00 = i
  CHECK(D.pair_words({K.boost(1)}, {G.L(1, 0)}, true) == coeff_i());

  // mixed sectors pair to zero
  CHECK(D.pair_words({K.m_rot(1, 2).first}, {G.v(1)}, true).is_zero());
  CHECK(D.pair_words({K.p(1)}, {G.L(1, 2)}, true).is_zero());

  // <A, v^0> = -i/k
  CHECK(D.pair_words({K.a()}, {G.v(0)}, true) == -coeff_i() / coeff_kappa());
  // <A, L-word> reduces to the counit
  CHECK(D.pair_words({K.a()}, {G.L(1, 1)}, true) == coeff_one());
  CHECK(D.pair_words({K.a()}, {G.L(1, 2)}, true).is_zero());
}

TEST_CASE("pinned product pairing") {
  DualityPairing D;
  Word xw{D.algebra().p(1)};
  Word fw{D.group().v(1), D.group().v(0)};
  Coefficient want = coeff_one() / coeff_kappa();
  CHECK(D.pair_words(xw, fw, true) == want);
  CHECK(D.pair_words(xw, fw, false) == want);
}

TEST_CASE("duality suite passes") {
  Report rep = duality_consistency_suite(3, 50, 20240503);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("opposite index raising is rejected") {
  Report rep = duality_consistency_suite(3, 20, 20240503, true);
  INFO(rep.text());
  CHECK(!rep.passed());
}
