#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappa/hopfcore.hpp"

using namespace kappa;

namespace {

// A small reference Hopf algebra: invertible group-like g and a skew-primitive
// x with  Delta x = x (x) 1 + g (x) x,  S(x) = -g^-1 x,  x g = g x.
HopfPresentation make_toy() {
  HopfPresentation P;
  int g = P.add_generator("g", 0, 0, 0);
  int gi = P.add_generator("g^-1", 0, 1, 0);
  int x = P.add_generator("x", 1, 0, 1);

  P.add_rule(g, gi, ae_one());
  P.add_rule(gi, g, ae_one());
  P.add_rule(x, g, ae_word({g, x}));
  P.add_rule(x, gi, ae_word({gi, x}));

  TensorElement dg;
  te_add_term(dg, {{g}, {g}}, coeff_one());
  P.set_coproduct(g, dg);
  TensorElement dgi;
  te_add_term(dgi, {{gi}, {gi}}, coeff_one());
  P.set_coproduct(gi, dgi);
  TensorElement dx;
  te_add_term(dx, {{x}, {}}, coeff_one());
  te_add_term(dx, {{g}, {x}}, coeff_one());
  P.set_coproduct(x, dx);

  P.set_counit(g, coeff_one());
  P.set_counit(gi, coeff_one());
  P.set_counit(x, coeff_zero());

  P.set_antipode(g, ae_gen(gi));
  P.set_antipode(gi, ae_gen(g));
  P.set_antipode(x, ae_word({gi, x}, -coeff_one()));
  return P;
}

}  // namespace

TEST_CASE("rewriting reaches normal form") {
  HopfPresentation P = make_toy();
  int g = 0, gi = 1, x = 2;

  // x g g^-1 x g -> g x x
  AlgebraElement e = P.normal_form(ae_word({x, g, gi, x, g}));
  REQUIRE(e.size() == 1);
  CHECK(e.begin()->first == Word{g, x, x});
  CHECK(e.begin()->second == coeff_one());

  // products normalize and distribute
  AlgebraElement a = ae_add(ae_gen(x), ae_gen(g));
  AlgebraElement prod = P.multiply(a, ae_gen(gi));
  AlgebraElement expect = ae_add(ae_word({gi, x}), ae_one());
  CHECK(prod == expect);

  CHECK(P.counit(ae_word({g, x})) == coeff_zero());
  CHECK(P.counit(ae_word({g, gi, g})) == coeff_one());

  // antipode is an anti-homomorphism: S(gx) = S(x)S(g) = -g^-1 x g^-1 = -g^-2 x
  AlgebraElement s = P.antipode(ae_word({g, x}));
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->first == Word{gi, gi, x});
  CHECK(s.begin()->second == -coeff_one());
}

TEST_CASE("termination measure rejects bad rules") {
  HopfPresentation P;
  int a = P.add_generator("a", 0, 0, 1);
  int b = P.add_generator("b", 0, 1, 1);
  // b a -> a b  is fine; a b -> b a  would loop and must be rejected
  P.add_rule(b, a, ae_word({a, b}));
  CHECK_THROWS_AS(P.add_rule(a, b, ae_word({b, a})), std::logic_error);
  // weight-increasing right-hand sides are rejected too
  CHECK_THROWS_AS(P.add_rule(a, a, ae_word({a, a, b})), std::logic_error);
}

TEST_CASE("rewrite budget diagnostic") {
  HopfPresentation P = make_toy();
  AlgebraElement big = ae_word({2, 0, 1, 2, 0, 1, 2, 0});
  CHECK_THROWS_AS(P.normal_form(big, 2), RewriteBudgetError);
}

TEST_CASE("hopf axioms hold for the toy algebra") {
  HopfPresentation P = make_toy();
  Report rep = check_hopf_axioms(P, 5, 60, 12345);
  INFO(rep.text());
  CHECK(rep.passed());
}

TEST_CASE("axiom checker catches a corrupted antipode") {
  HopfPresentation P = make_toy();
  P.set_antipode(2, ae_word({1, 2}, coeff_one()));  // sign flipped: S(x) = +g^-1 x
  Report rep = check_hopf_axioms(P, 4, 40, 999);
  CHECK(!rep.passed());
  bool antipode_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "antipode-generators" && !c.pass) antipode_failed = true;
  CHECK(antipode_failed);
}

TEST_CASE("tensor machinery") {
  HopfPresentation P = make_toy();
  int g = 0, x = 2;
  // Delta(x g) = Delta(x) Delta(g) = xg (x) g + g g (x) x g
  TensorElement d = P.coproduct(ae_word({x, g}));
  TensorElement expect;
  te_add_term(expect, {{g, x}, {g}}, coeff_one());
  te_add_term(expect, {{g, g}, {g, x}}, coeff_one());
  CHECK(te_sub(d, expect).terms.empty());
}
