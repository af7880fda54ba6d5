#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsl/poly.hpp"

using bsl::Poly;
using bsl::Rational;

namespace {

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const Poly x2_plus_1{Rational(1), Rational(0), Rational(1)};
  CHECK(x2_plus_1 + Poly{Rational(-1)} == Poly::monomial(2));  // cancellation trims
  CHECK(Poly::x() * Poly::x() == Poly::monomial(2));
  CHECK(Rational(2) * Poly{Rational(-1, 2), Rational(0), Rational(1)} ==
        Poly{Rational(-1), Rational(0), Rational(2)});
  CHECK((Poly{Rational(1)} - Poly{Rational(1)}).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(x2_plus_1.degree() == 2);
  CHECK(x2_plus_1.coeff(5) == Rational(0));
}

TEST_CASE("derivatives") {
  CHECK(Poly::monomial(3).derivative() == Poly::monomial(2, Rational(3)));
  CHECK(Poly{Rational(-1, 2), Rational(0), Rational(1)}.derivative(2) == Poly{Rational(2)});
  CHECK(Poly::monomial(3).derivative(4).is_zero());
  CHECK(Poly::monomial(3).derivative(0) == Poly::monomial(3));
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = random_poly(rng, 8), q = random_poly(rng, 8), r = random_poly(rng, 8);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  }
}

TEST_CASE("evaluation") {
  const Poly h3{Rational(0), Rational(-3, 2), Rational(0), Rational(1)};
  CHECK(h3(Rational(2)) == Rational(5));
  CHECK(h3(Rational(0)) == Rational(0));
  CHECK(Poly()(Rational(9)) == Rational(0));
}

TEST_CASE("pretty printing") {
  CHECK(Poly{Rational(0), Rational(-3, 2), Rational(0), Rational(1)}.str() == "x^3 - 3/2 x");
  CHECK(Poly{Rational(-1, 2), Rational(0), Rational(1)}.str() == "x^2 - 1/2");
  CHECK(Poly{Rational(3, 4)}.str() == "3/4");
  CHECK(Poly().str() == "0");
  CHECK(Poly{Rational(0), Rational(-1)}.str() == "-x");
}
