#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/kminkowski.hpp"

using namespace kappa;

TEST_CASE("star product reorders through the closed shift rule") {
  const Coefficient I = coeff_i(), k = coeff_kappa();
  // :x1: * :x0: = :x0 x1: - (i/k) :x1:
  XPoly lhs = star_multiply(xp_var(1), xp_var(0));
  XPoly want = xp_var(0) * xp_var(1) - xp_var(1) * xp_const(I / k);
  CHECK(lhs == want);
  // :x1 x2: * :x0^2: = :(x0 - 2i/k)^2 x1 x2:
  lhs = star_multiply(xp_var(1) * xp_var(2), xp_var(0, 2));
  XPoly sh = xp_var(0) - xp_const(coeff_rat(2) * I / k);
  CHECK(lhs == sh * sh * xp_var(1) * xp_var(2));
  // x0 commutes from the left without correction
  CHECK(star_multiply(xp_var(0), xp_var(3)) == xp_var(0) * xp_var(3));
}

TEST_CASE("hat generator examples") {
  HatOps H;
  KAlgebra K;
  const Coefficient I = coeff_i(), k = coeff_kappa();
  // P1 :x0 x1: = :i x0:
  CHECK(H.apply(K.p(1), xp_var(0) * xp_var(1)) == xp_var(0) * xp_const(I));
  // M10 :x1: = :i x0:
  CHECK(H.apply(K.boost(1), xp_var(1)) == xp_var(0) * xp_const(I));
  // E :x0: = :x0: - i/k and E^-1 undoes it
  CHECK(H.apply(K.a(), xp_var(0)) == xp_var(0) - xp_const(I / k));
  CHECK(H.apply(K.a_inv(), H.apply(K.a(), xp_var(0, 3))) == xp_var(0, 3));
}

TEST_CASE("deformed derivative examples") {
  const Coefficient I = coeff_i(), k = coeff_kappa();
  // d0 :(x0)^2: = :2 x0:
  CHECK(deformed_d0(xp_var(0, 2)) == xp_var(0) * xp_const(coeff_rat(2)));
  // d1 :x0 x1: = :x0: + i/k
  CHECK(deformed_di(xp_var(0) * xp_var(1), 1) == xp_var(0) + xp_const(I / k));
  // on a symbolic plane wave, d_i eigenvalue = -i p_i E
  WaveData<PField> w = sym_wave(0);
  CHECK(deformed_di_eigen(w, 2) == pf_const(-I) * w.p[1] * w.E);
}

TEST_CASE("mink-star suite passes") {
  Report rep = mink_star_suite(4, 50, 20240504);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("antirep suite passes and the raised-index control fails") {
  Report rep = antirep_suite(3);
  INFO(rep.text());
  CHECK(rep.passed());
  CHECK(!antirep_suite(2, +1).passed());
}

TEST_CASE("leibniz suite") {
  Report rep = leibniz_suite(20, 20240505);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("kg suite passes") {
  Report rep = kg_suite(4, 20, 20240506);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("momentum extraction reproduces the comparison table") {
  Report rep = extract_compare_suite();
  INFO(rep.text());
  CHECK(rep.passed());
}
