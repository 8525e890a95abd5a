#include <gtest/gtest.h>

#include "support.hpp"
#include "wittmod/polynomial.hpp"

using namespace wittmod;
using testing_support::Gen;
using testing_support::q;

namespace {

Polynomial random_poly(Gen& gen, long max_degree) {
  std::vector<GaussianRational> c;
  const long d = gen.integer(0, max_degree);
  for (long k = 0; k <= d; ++k) {
    c.push_back(gen.gaussian(5));
  }
  return Polynomial(c);
}

// Binomial expansion of (x + c)^n, written out independently of Horner shifting.
Polynomial binomial_power(const GaussianRational& c, std::size_t n) {
  std::vector<GaussianRational> coeffs;
  GaussianRational binom(1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs.push_back(binom * int_pow(c, static_cast<long>(n - k)));
    binom = binom * GaussianRational(static_cast<long>(n - k)) / GaussianRational(static_cast<long>(k + 1));
  }
  return Polynomial(coeffs);
}

}  // namespace

TEST(Polynomial, Basics) {
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(Polynomial::x().degree(), 1);
  EXPECT_EQ(Polynomial::monomial(3, q("2")).leading_coefficient(), q("2"));
  EXPECT_EQ(Polynomial({1, 2}).coefficient(7), q("0"));
  EXPECT_EQ(Polynomial::linear(q("3")), Polynomial({3, 1}));
}

TEST(Polynomial, Arithmetic) {
  const Polynomial p({1, 1});
  EXPECT_EQ(p * p, Polynomial({1, 2, 1}));
  EXPECT_EQ(p - p, Polynomial());
  EXPECT_EQ(-p + p, Polynomial());
  EXPECT_EQ(q("2") * p, Polynomial({2, 2}));
  EXPECT_EQ(p * Polynomial(), Polynomial());
}

TEST(Polynomial, ShiftMatchesBinomial) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const char* c : {"1", "-2", "1/2", "i", "3-i"}) {
      EXPECT_EQ(Polynomial::monomial(n).shifted(q(c)), binomial_power(q(c), n)) << n << " " << c;
    }
  }
}

TEST(Polynomial, Evaluate) {
  const Polynomial p({1, 0, 3});
  EXPECT_EQ(p.evaluate(q("2")), q("13"));
  EXPECT_EQ(p.evaluate(q("i")), q("-2"));
  EXPECT_EQ(Polynomial().evaluate(q("5")), q("0"));
  EXPECT_EQ(p.scaled(q("2")), Polynomial({1, 0, 12}));
}

TEST(Polynomial, Printing) {
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial({1, 0, 3}).to_string(), "1 + 3*x^2");
  EXPECT_EQ(Polynomial({1, 3, 3, 1}).to_string(), "1 + 3*x + 3*x^2 + x^3");
  EXPECT_EQ(Polynomial({0, -1}).to_string(), "-x");
}

TEST(PolynomialProperty, RingLaws) {
  Gen gen(40);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(gen, 4);
    const auto b = random_poly(gen, 4);
    const auto c = random_poly(gen, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
  }
}

TEST(PolynomialProperty, ShiftAndScaleAreRingMaps) {
  Gen gen(41);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(gen, 4);
    const auto b = random_poly(gen, 4);
    const auto s = gen.gaussian(4);
    const auto u = gen.gaussian(4);
    const auto z = gen.gaussian(4);
    EXPECT_EQ((a * b).shifted(s), a.shifted(s) * b.shifted(s));
    EXPECT_EQ(a.shifted(s).shifted(u), a.shifted(s + u));
    EXPECT_EQ(a.shifted(s).evaluate(z), a.evaluate(z + s));
    EXPECT_EQ(a.scaled(s).evaluate(z), a.evaluate(s * z));
    EXPECT_EQ((a * b).scaled(s), a.scaled(s) * b.scaled(s));
  }
}

TEST(PolynomialProperty, PrintParseRoundTrip) {
  Gen gen(42);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(gen, 5);
    EXPECT_EQ(parse_polynomial(a.to_string()), a) << a.to_string();
  }
}
