#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/indrep.hpp"

using namespace kappa;

TEST_CASE("qfunction field and derivation") {
  QFunction q0 = qf_q0();
  QFunction q1 = qf_q(1), q2 = qf_q(2), q3 = qf_q(3);
  // the quadratic relation
  CHECK(q0 * q0 == q1 * q1 + q2 * q2 + q3 * q3 + qf_const(coeff_m() * coeff_m()));
  // chain rule through q0
  CHECK(qderive(q0, 1) == q1 / q0);
  CHECK(qderive(q0 * q0, 2) == qf_const(coeff_rat(2)) * q2);
  // quotient rule
  QFunction f = q1 / q0;
  CHECK(qderive(f, 1) == (q0 - q1 * q1 / q0) / (q0 * q0));
  CHECK(qderive(f, 3) == -(q1 * q3) / (q0 * q0 * q0));
  // derivative of a constant
  CHECK(qderive(qf_const(coeff_kappa()), 1).is_zero());
}

TEST_CASE("ell symbol obeys the linear-log discipline") {
  LinLog ell{qf_zero(), qf_one()};
  LinLog f{qf_q(1), qf_zero()};
  CHECK(ll_sub(ll_mul(ell, f), ll_mul(f, ell)).is_zero());
  CHECK_THROWS_AS(ll_mul(ell, ell), std::logic_error);
  // d(ell)/dq_i is the pinned logarithmic derivative
  QFunction u = qf_u();
  CHECK(ll_derive(ell, 2).a == qf_const(-coeff_kappa() * coeff_s()) * qf_q(2) / (qf_q0() * u));
  CHECK(ll_derive(ell, 2).b.is_zero());
}

TEST_CASE("spin matrices are exact su(2) triples") {
  for (int tj : {0, 1, 2}) CHECK(spin_su2_ok(spin_matrices(tj)));
}

TEST_CASE("closure suite passes at every spin") {
  for (int tj : {0, 1, 2}) {
    Report rep = closure_suite(tj);
    INFO(rep.text());
    CHECK(rep.passed());
  }
}

TEST_CASE("flipped orbital signs break closure") {
  Report rep = closure_suite(0, /*flip=*/true);
  CHECK(!rep.passed());
}

TEST_CASE("momentum shell identities") {
  Report rep = momentum_shell_suite();
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("classical limits of the momentum and boost maps") {
  Report rep;
  rep.suite = "classical-limit";
  indrep_classical_checks(rep, 4);
  INFO(rep.text());
  CHECK(rep.passed());
}
