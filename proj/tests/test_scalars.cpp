#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kappa/scalars.hpp"

using namespace kappa;

TEST_CASE("gaussian rationals") {
  GaussRat a(3, 2), b(-1, 4);
  CHECK(a + b == GaussRat(5, 4));
  CHECK(a * b == GaussRat(-3, 8));
  CHECK((a / b) == GaussRat(-6));
  CHECK(GaussRat::i() * GaussRat::i() == GaussRat(-1));
  GaussRat z(mpq_class(1), mpq_class(2));  // 1 + 2i
  CHECK(z * z.inv() == GaussRat(1));
  CHECK(z.str() == "(1+2*i)");
  CHECK(GaussRat(-3, 2).str() == "-3/2");
  CHECK((-GaussRat::i()).str() == "-i");
}

TEST_CASE("mpoly arithmetic and gcd") {
  using P = MPoly<GaussRat>;
  P x = P::variable(2, 0), y = P::variable(2, 1);
  P p = (x + y) * (x + y);
  CHECK(p == x * x + x * y * P::constant(2, GaussRat(2)) + y * y);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.derivative(0) == (x + y) * P::constant(2, GaussRat(2)));

  // exact division
  auto q = p.divide_exact(x + y);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK(!p.divide_exact(x - y).has_value());

  // gcd of (x^2-y^2) and (x^2+2xy+y^2) is x+y
  P a = x * x - y * y;
  P b = p;
  CHECK(mpoly_gcd(a, b) == x + y);

  // substitution: (x+y)^2 with y -> x gives 4x^2
  CHECK(p.substitute(1, x) == x * x * P::constant(2, GaussRat(4)));
}

TEST_CASE("mpoly gcd randomized against known common factor") {
  using P = MPoly<GaussRat>;
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2);
  auto rand_poly = [&](int nterms) {
    P p(3);
    for (int t = 0; t < nterms; ++t)
      p.add_term({expo(rng), expo(rng), expo(rng)}, GaussRat(coef(rng)));
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    P g = rand_poly(3), u = rand_poly(3), v = rand_poly(3);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    P d = mpoly_gcd(g * u, g * v);
    // d must divide both products and be divisible by g
    CHECK((g * u).divide_exact(d).has_value());
    CHECK((g * v).divide_exact(d).has_value());
    CHECK(d.divide_exact(mpoly_gcd(d, g.monic())).has_value());
    CHECK(mpoly_gcd(d, g).monic() == g.monic());
  }
}

TEST_CASE("coefficient field canonical forms") {
  Coefficient c = coeff_c(), s = coeff_s(), m = coeff_m(), k = coeff_kappa();

  // c^2 - s^2 = 1 via the defining relation
  CHECK(c * c - s * s == coeff_one());

  // (m*c - m*s)/(c - s) = m
  CHECK((m * c - m * s) / (c - s) == m);

  // 1/(c - s) = c + s
  CHECK((c - s).inv() == c + s);
  CHECK((c + s) * (c - s) == coeff_one());

  // canonical zero: same value reached along two routes compares equal
  Coefficient lhs = (k * c + m) * (k * c - m);
  Coefficient rhs = k * k * (coeff_one() + s * s) - m * m;
  CHECK(lhs == rhs);
  CHECK((lhs - rhs).is_zero());

  // denominators stay free of c
  Coefficient f = coeff_one() / (c + k);
  CHECK(f.num1().is_zero() == false);  // numerator picked up the conjugate
  CHECK(f.den().degree_in(scalar_vars::kSinh) >= 0);
  CHECK(f * (c + k) == coeff_one());

  CHECK_THROWS_AS(coeff_zero().inv(), std::domain_error);
}

TEST_CASE("coefficient field axioms on random elements") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> pick(-2, 2);
  auto rand_coeff = [&]() {
    Coefficient r = coeff_rat(pick(rng));
    r += coeff_m() * coeff_rat(pick(rng));
    r += coeff_s() * coeff_rat(pick(rng));
    r += coeff_c() * coeff_rat(pick(rng));
    r += coeff_kappa() * coeff_rat(pick(rng));
    return r;
  };
  for (int t = 0; t < 15; ++t) {
    Coefficient a = rand_coeff(), b = rand_coeff(), cc = rand_coeff();
    CHECK(a * (b + cc) == a * b + a * cc);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) CHECK(a * a.inv() == coeff_one());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("laurent series at large kappa") {
  // s = m/k + m^3/(6 k^3) + ...
  auto ss = coeff_series(coeff_s(), 4);
  CHECK(ss.size() == 2);
  CHECK(ss.at(1) == mrat_m_pow(1));
  CHECK(ss.at(3) == mrat_m_pow(3, GaussRat(1, 6)));

  // c = 1 + m^2/(2 k^2) + m^4/(24 k^4)
  auto cs = coeff_series(coeff_c(), 4);
  CHECK(cs.at(0) == mrat_const(GaussRat(1)));
  CHECK(cs.at(2) == mrat_m_pow(2, GaussRat(1, 2)));
  CHECK(cs.at(4) == mrat_m_pow(4, GaussRat(1, 24)));
  CHECK(cs.count(1) == 0);

  // 1/(c+s) = c - s = exp(-m/k): coefficient of k^-n is (-m)^n/n!
  auto es = coeff_series(coeff_one() / (coeff_c() + coeff_s()), 5);
  mpz_class fact = 1;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) fact *= n;
    GaussRat coef = GaussRat(mpq_class(1, fact)) * GaussRat(n % 2 ? -1 : 1);
    CHECK(es.at(n) == mrat_m_pow(n, coef));
  }

  // kappa itself: a positive power, key -1
  auto ks = coeff_series(coeff_kappa(), 2);
  CHECK(ks.size() == 1);
  CHECK(ks.at(-1) == mrat_const(GaussRat(1)));

  // kappa^2 * (c - 1) -> m^2/2 at kappa^0: cancellation shifts the valuation
  auto hs = coeff_series(coeff_kappa() * coeff_kappa() * (coeff_c() - coeff_one()), 3);
  CHECK(hs.at(0) == mrat_m_pow(2, GaussRat(1, 2)));
  CHECK(hs.count(-1) == 0);
  CHECK(hs.count(-2) == 0);

  // classical limit helper flags positive powers
  bool regular = true;
  coeff_classical_limit(coeff_kappa(), 2, &regular);
  CHECK(!regular);
  MRat lim = coeff_classical_limit(coeff_kappa() * coeff_s(), 2, &regular);
  CHECK(regular);
  CHECK(lim == mrat_m_pow(1));

  CHECK(coeff_series(coeff_zero(), 3).empty());
}

TEST_CASE("series of quotients with sinh denominators") {
  // k*(c^2-1)/s = k*s  -> m at order 0, m^3/6 at order 2
  Coefficient x = coeff_kappa() * (coeff_c() * coeff_c() - coeff_one()) / coeff_s();
  auto xs = coeff_series(x, 2);
  CHECK(xs.at(0) == mrat_m_pow(1));
  CHECK(xs.at(2) == mrat_m_pow(3, GaussRat(1, 6)));

  // 1/s has a genuine positive power: k/m - ...
  auto inv_s = coeff_series(coeff_s().inv(), 1);
  CHECK(inv_s.at(-1) == mrat_m_pow(1).inv());
  CHECK(inv_s.at(1) == mrat_m_pow(1, GaussRat(-1, 6)));
}
