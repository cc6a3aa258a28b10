#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/kalgebra.hpp"

using namespace kappa;

TEST_CASE("defining brackets normalize as expected") {
  KAlgebra K = build_kalgebra();
  const Coefficient I = coeff_i();
  const Coefficient k = coeff_kappa();

  // [M12, P1] = i P2
  AlgebraElement b = ae_commutator(K.P, ae_gen(K.m_rot(1, 2).first), ae_gen(K.p(1)));
  CHECK(b == ae_word({K.p(2)}, I));

  // [M10, P0] = i P1
  b = ae_commutator(K.P, ae_gen(K.boost(1)), ae_gen(K.p(0)));
  CHECK(b == ae_word({K.p(1)}, I));

  // [M10, P1] = i(k/2)(1 - A^2) + (i/2k) sum P_r^2 - (i/k) P1^2
  b = ae_commutator(K.P, ae_gen(K.boost(1)), ae_gen(K.p(1)));
  AlgebraElement want;
  ae_add_term(want, {}, I * k / coeff_rat(2));
  ae_add_term(want, {K.a(), K.a()}, -I * k / coeff_rat(2));
  for (int r = 1; r <= 3; ++r)
    ae_add_term(want, {K.p(r), K.p(r)}, I / (coeff_rat(2) * k));
  ae_add_term(want, {K.p(1), K.p(1)}, -I / k);
  CHECK(ae_sub(b, K.P.normal_form(want)).empty());

  // [M10, M20] = -i M12
  b = ae_commutator(K.P, ae_gen(K.boost(1)), ae_gen(K.boost(2)));
  CHECK(b == ae_word({K.m_rot(1, 2).first}, -I));

  // [M10, A] = -(i/k) P1 A;  A A^-1 = 1
  b = ae_commutator(K.P, ae_gen(K.boost(1)), ae_gen(K.a()));
  CHECK(b == ae_word({K.p(1), K.a()}, -I / k));
  CHECK(K.P.multiply(ae_gen(K.a()), ae_gen(K.a_inv())) == ae_one());

  // momentum + A sector is commutative
  for (int x : {K.p(0), K.p(2), K.a()})
    for (int y : {K.p(1), K.p(3), K.a_inv()})
      CHECK(ae_commutator(K.P, ae_gen(x), ae_gen(y)).empty());
}

TEST_CASE("PBW normal forms stay ordered") {
  KAlgebra K = build_kalgebra();
  std::mt19937 rng(321);
  for (int t = 0; t < 40; ++t) {
    Word w = random_word(K.P, rng, 6);
    AlgebraElement nf = K.P.normal_form(ae_word(w));
    for (const auto& [nw, c] : nf) {
      bool sorted = std::is_sorted(nw.begin(), nw.end());
      // A^-1 A and A A^-1 have been cancelled, so both never appear together
      bool mixed = std::count(nw.begin(), nw.end(), K.a()) &&
                   std::count(nw.begin(), nw.end(), K.a_inv());
      CHECK(sorted);
      CHECK(!mixed);
    }
  }
}

TEST_CASE("jacobi suite: all 165 triples vanish") {
  Report rep = jacobi_suite();
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("euclidean P^rP_r reading breaks Jacobi") {
  Report rep = jacobi_suite(+1);
  CHECK(!rep.passed());
}

TEST_CASE("algebra hopf suite passes") {
  Report rep = kalgebra_hopf_verify(3, 50, 20240502);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("classical limit reproduces Poincare structure constants") {
  Report rep = classical_limit_suite(4);
  INFO(rep.text());
  CHECK(rep.passed());
}
