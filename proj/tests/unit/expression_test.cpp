#include <gtest/gtest.h>

#include "support.hpp"
#include "wittmod/error.hpp"
#include "wittmod/expression.hpp"

using namespace wittmod;
using testing_support::I;
using testing_support::q;

namespace {

bool parse_fails(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == ErrorCode::parse_error;
  }
  return false;
}

}  // namespace

TEST(ParseScalar, Forms) {
  EXPECT_EQ(parse_scalar("3"), GaussianRational(3));
  EXPECT_EQ(parse_scalar("-1/2"), q(-1, 2));
  EXPECT_EQ(parse_scalar("i"), I());
  EXPECT_EQ(parse_scalar("-i"), -I());
  EXPECT_EQ(parse_scalar("1/2-3/4*i"), GaussianRational(Rational(1, 2), Rational(-3, 4)));
  EXPECT_EQ(parse_scalar(" 2 + i "), GaussianRational(2, 1));
  EXPECT_EQ(parse_scalar("6/4"), q(3, 2));
  EXPECT_EQ(parse_scalar_list("0, 1/2, -i"), (std::vector<GaussianRational>{0, q(1, 2), -I()}));
}

TEST(ParseScalar, Errors) {
  EXPECT_TRUE(parse_fails([] { parse_scalar(""); }));
  EXPECT_TRUE(parse_fails([] { parse_scalar("1/"); }));
  EXPECT_TRUE(parse_fails([] { parse_scalar("1/0"); }));
  EXPECT_TRUE(parse_fails([] { parse_scalar("x"); }));
  EXPECT_TRUE(parse_fails([] { parse_scalar("1 +"); }));
  EXPECT_TRUE(parse_fails([] { parse_scalar("2)"); }));
}

TEST(ParseGroupElement, Forms) {
  EXPECT_EQ(parse_group_element("1/2 odd"), (GroupElement{q(1, 2), Parity::odd}));
  EXPECT_EQ(parse_group_element("3"), (GroupElement{3, Parity::even}));
  EXPECT_EQ(parse_group_element("i even"), (GroupElement{I(), Parity::even}));
  EXPECT_TRUE(parse_fails([] { parse_group_element("1 odd odd"); }));
  EXPECT_TRUE(parse_fails([] { parse_group_element("1 strange"); }));
}

TEST(ParseLieElement, Forms) {
  const LieElement x = parse_lie_element("3*L[1] + (1/2+i)*G[1/2] - C");
  EXPECT_EQ(x.coefficient(BasisSymbol::L(1)), GaussianRational(3));
  EXPECT_EQ(x.coefficient(BasisSymbol::G(q(1, 2))), q("1/2+i"));
  EXPECT_EQ(x.coefficient(BasisSymbol::C()), GaussianRational(-1));
  EXPECT_EQ(parse_lie_element("L[-2]"), LieElement::L(-2));
  EXPECT_EQ(parse_lie_element("L[i]*2"), GaussianRational(2) * LieElement::L(I()));
  EXPECT_EQ(parse_lie_element("L[1] - L[1]"), LieElement());
  EXPECT_TRUE(parse_fails([] { parse_lie_element("L[1] * L[2]"); }));
  EXPECT_TRUE(parse_fails([] { parse_lie_element("L[1"); }));
  EXPECT_TRUE(parse_fails([] { parse_lie_element("X[1]"); }));
  EXPECT_TRUE(parse_fails([] { parse_lie_element("3"); }));
}

TEST(ParsePolynomial, Forms) {
  EXPECT_EQ(parse_polynomial("1 + 3*x^2"), Polynomial({1, 0, 3}));
  EXPECT_EQ(parse_polynomial("x"), Polynomial::x());
  EXPECT_EQ(parse_polynomial("0"), Polynomial());
  EXPECT_EQ(parse_polynomial("-x^3 + i"), Polynomial({I(), 0, 0, -1}));
  EXPECT_EQ(parse_polynomial("x + x"), Polynomial({0, 2}));
  EXPECT_TRUE(parse_fails([] { parse_polynomial("x^"); }));
  EXPECT_TRUE(parse_fails([] { parse_polynomial("x*x"); }));
}

TEST(ParseOmegaElement, Forms) {
  EXPECT_EQ(parse_omega_element("x^2 + xi*(1 + x)"), (OmegaElement{Polynomial::monomial(2), Polynomial({1, 1})}));
  EXPECT_EQ(parse_omega_element("xi"), OmegaElement::of_xi(1));
  EXPECT_EQ(parse_omega_element("1"), OmegaElement::of_one(1));
  EXPECT_EQ(parse_omega_element("2*xi*(x)"), OmegaElement::of_xi(Polynomial({0, 2})));
}

TEST(ParseWeightVector, Forms) {
  WeightVector expected = GaussianRational(2) * WeightVector::v(5);
  expected += WeightVector::w(q(1, 2));
  EXPECT_EQ(parse_weight_vector("2*v[5] + w[1/2]"), expected);
  EXPECT_TRUE(parse_fails([] { parse_weight_vector("3"); }));
  EXPECT_TRUE(parse_fails([] { parse_weight_vector("u[1]"); }));
}

TEST(ParseGroup, SuperDetection) {
  EXPECT_FALSE(parse_group({"1"})->is_super());
  EXPECT_TRUE(parse_group({"1", "1/2 odd"})->is_super());
  EXPECT_TRUE(parse_group({"1"}, true)->is_super());
}

TEST(ParseModule, Omega) {
  const auto spec = std::get<OmegaModuleSpec>(parse_module("kind=omega; group=1, 1/2 odd; f=2; alpha=1; flip=1"));
  EXPECT_TRUE(spec.is_super());
  EXPECT_TRUE(spec.parity_flipped);
  EXPECT_EQ(spec.alpha, GaussianRational(1));
  EXPECT_EQ(spec.f(q(1, 2), Parity::odd), GaussianRational(2));
  const auto plain = std::get<OmegaModuleSpec>(parse_module("kind=omega"));
  EXPECT_FALSE(plain.is_super());
  EXPECT_TRUE(plain.f.is_trivial());
  EXPECT_TRUE(plain.alpha.is_zero());
  const auto forced = std::get<OmegaModuleSpec>(parse_module("kind=omega; group=1; super=1"));
  EXPECT_TRUE(forced.is_super());
  EXPECT_FALSE(forced.group().has_odd_torsion());
  const auto ramond = std::get<OmegaModuleSpec>(parse_module("kind=omega; group=1, 0 odd"));
  EXPECT_TRUE(ramond.group().has_odd_torsion());
}

TEST(ParseModule, Intermediate) {
  const auto spec = std::get<IntermediateSpec>(parse_module("kind=intermediate; group=1; a=1/3"));
  EXPECT_EQ(spec.a, q(1, 3));
  EXPECT_FALSE(spec.is_super());
}

TEST(ParseModule, Errors) {
  EXPECT_TRUE(parse_fails([] { parse_module("kind=other"); }));
  EXPECT_TRUE(parse_fails([] { parse_module("kind=omega; colour=red"); }));
  EXPECT_TRUE(parse_fails([] { parse_module("kind=omega; alpha"); }));
  try {
    parse_module("kind=omega; group=2");
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::group_missing_one);
  }
}
