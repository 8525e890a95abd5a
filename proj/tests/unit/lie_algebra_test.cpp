#include <gtest/gtest.h>

#include "support.hpp"
#include "wittmod/error.hpp"
#include "wittmod/lie_algebra.hpp"

using namespace wittmod;
using testing_support::Gen;
using testing_support::I;
using testing_support::q;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::invalid_argument;
}

LieElement L(const char* m) { return LieElement::L(q(m)); }
LieElement G(const char* r) { return LieElement::G(q(r)); }
LieElement L(int m) { return LieElement::L(GaussianRational(m)); }

const Algebra& witt() {
  static const Algebra g(AlgebraKind::witt, testing_support::Z());
  return g;
}
const Algebra& vir() {
  static const Algebra g(AlgebraKind::virasoro, testing_support::Z());
  return g;
}
const Algebra& ns_witt() {
  static const Algebra g(AlgebraKind::super_witt, testing_support::NS());
  return g;
}
const Algebra& ns_vir() {
  static const Algebra g(AlgebraKind::super_virasoro, testing_support::NS());
  return g;
}

}  // namespace

TEST(Bracket, WittExamples) {
  EXPECT_EQ(witt().bracket(L(1), L(-1)), GaussianRational(2) * L(0));
  EXPECT_EQ(witt().bracket(L(3), L(3)), LieElement());
  EXPECT_EQ(witt().bracket(L(2), L(-5)), GaussianRational(7) * L(-3));
}

TEST(Bracket, VirasoroCentralTerm) {
  EXPECT_EQ(vir().bracket(L(2), L(-2)), GaussianRational(4) * L(0) + q(1, 2) * LieElement::C());
  // (m^3 - m)/12 vanishes at m = +-1.
  EXPECT_EQ(vir().bracket(L(1), L(-1)), GaussianRational(2) * L(0));
  EXPECT_EQ(vir().bracket(L(3), L(-3)), GaussianRational(6) * L(0) + GaussianRational(2) * LieElement::C());
}

TEST(Bracket, SuperExamples) {
  EXPECT_EQ(ns_vir().bracket(G("3/2"), G("-3/2")), GaussianRational(2) * L(0) + q(2, 3) * LieElement::C());
  EXPECT_EQ(ns_witt().bracket(L(2), G("1/2")), q(1, 2) * G("5/2"));
  EXPECT_EQ(ns_witt().bracket(G("1/2"), G("1/2")), GaussianRational(2) * L(1));
  EXPECT_EQ(ns_witt().bracket(G("1/2"), L(2)), -q(1, 2) * G("5/2"));
  // (r^2 - 1/4)/3 at r = 1/2 is zero.
  EXPECT_EQ(ns_vir().bracket(G("1/2"), G("-1/2")), GaussianRational(2) * L(0));
}

TEST(Bracket, CenterIsCentral) {
  for (const auto& s : ns_vir().basis_symbols(ns_vir().group().window(Rational(3)))) {
    EXPECT_TRUE(ns_vir().bracket(LieElement::C(), LieElement(s)).is_zero());
    EXPECT_TRUE(ns_vir().bracket(LieElement(s), LieElement::C()).is_zero());
  }
}

TEST(Bracket, Errors) {
  EXPECT_EQ(code_of([] { witt().bracket(L("1/2"), L(1)); }), ErrorCode::not_in_group);
  EXPECT_EQ(code_of([] { ns_witt().bracket(G("1"), L(1)); }), ErrorCode::not_in_group);
  EXPECT_EQ(code_of([] { witt().bracket(G("1/2"), L(1)); }), ErrorCode::kind_mismatch);
  EXPECT_EQ(code_of([] { witt().bracket(LieElement::C(), L(1)); }), ErrorCode::kind_mismatch);
  EXPECT_EQ(code_of([] { Algebra(AlgebraKind::super_witt, testing_support::Z()); }), ErrorCode::kind_mismatch);
  EXPECT_EQ(code_of([] { Algebra(AlgebraKind::witt, testing_support::NS()); }), ErrorCode::kind_mismatch);
}

TEST(Bracket, Bilinear) {
  const LieElement x = GaussianRational(3) * L(1) + L(-2);
  const LieElement y = I() * L(2);
  // 3i[L1,L2] + i[L-2,L2] = -3i L3 - 4i L0
  EXPECT_EQ(witt().bracket(x, y), -q("3*i") * L(3) - q("4*i") * L(0));
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(jacobi_check(vir(), L(1), L(2), L(3)));
  EXPECT_TRUE(jacobi_check(ns_witt(), G("1/2"), G("1/2"), L(1)));
  EXPECT_EQ(code_of([] { jacobi_check(ns_witt(), L(1) + G("1/2"), L(1), L(2)); }), ErrorCode::not_homogeneous);
}

// Hand expansion of the cyclic sum for (G_{1/2}, G_{1/2}, L_1) with
// [G,G] = 2L, [L_m,G_r] = (m/2 - r)G and the Koszul signs -, -, +:
//   -[G_{1/2}, [G_{1/2}, L_1]] - [G_{1/2}, [L_1, G_{1/2}]] + [L_1, [G_{1/2}, G_{1/2}]]
TEST(Jacobi, HandExpandedSuperTriple) {
  const auto& g = ns_witt();
  const LieElement t1 = -1 * g.bracket(G("1/2"), g.bracket(G("1/2"), L(1)));
  const LieElement t2 = -1 * g.bracket(G("1/2"), g.bracket(L(1), G("1/2")));
  const LieElement t3 = g.bracket(L(1), g.bracket(G("1/2"), G("1/2")));
  // [G_{1/2}, L_1] = (1/2 - 1/2)G_{3/2} = 0 and [L_1, G_{1/2}] = 0, [L_1, 2L_1] = 0.
  EXPECT_TRUE(t1.is_zero());
  EXPECT_TRUE(t2.is_zero());
  EXPECT_TRUE(t3.is_zero());
  // A triple where the terms do not vanish individually.
  const LieElement x = G("1/2");
  const LieElement y = G("3/2");
  const LieElement z = L(-1);
  // [G_{3/2}, L_{-1}] = (3/2 + 1/2) G_{1/2} = 2G_{1/2}; [G_{1/2}, 2G_{1/2}] = 4L_1
  EXPECT_EQ(g.bracket(y, z), GaussianRational(2) * G("1/2"));
  EXPECT_EQ(g.bracket(x, g.bracket(y, z)), GaussianRational(4) * L(1));
  // [L_{-1}, G_{1/2}] = (-1/2 - 1/2) G_{-1/2}; [G_{3/2}, -G_{-1/2}] = -2L_1
  EXPECT_EQ(g.bracket(y, g.bracket(z, x)), GaussianRational(-2) * L(1));
  // [G_{1/2}, G_{3/2}] = 2L_2; [L_{-1}, 2L_2] = -6L_1
  EXPECT_EQ(g.bracket(z, g.bracket(x, y)), GaussianRational(-6) * L(1));
  // signs: (-1)^{|x||z|} = 1, (-1)^{|y||x|} = -1, (-1)^{|z||y|} = 1: 4 + 2 - 6 = 0
  EXPECT_TRUE(jacobi_check(g, x, y, z));
}

TEST(Jacobi, QuadraticCocycleBreaksAntisymmetry) {
  const Algebra bad(AlgebraKind::virasoro, testing_support::Z(), CentralTerm::quadratic);
  EXPECT_FALSE(antisymmetry_defect(bad, L(3), L(-3)).is_zero());
  EXPECT_EQ(antisymmetry_defect(bad, L(3), L(-3)), q(3, 2) * LieElement::C());
}

TEST(Jacobi, CubicCocycleIsInvisibleInVirasoro) {
  // m^3/12 differs from the standard cocycle by the coboundary m/12, so the
  // even-only algebra still satisfies Jacobi. The odd sector exposes it.
  const Algebra bad(AlgebraKind::virasoro, testing_support::Z(), CentralTerm::cubic);
  EXPECT_TRUE(jacobi_check(bad, L(2), L(-1), L(-1)));
  EXPECT_TRUE(jacobi_check(bad, L(3), L(-1), L(-2)));
  const Algebra bad_super(AlgebraKind::super_virasoro, testing_support::NS(), CentralTerm::cubic);
  EXPECT_FALSE(jacobi_check(bad_super, L(2), G("-1/2"), G("-3/2")));
  EXPECT_TRUE(jacobi_check(ns_vir(), L(2), G("-1/2"), G("-3/2")));
}

TEST(Support, Examples) {
  EXPECT_EQ(support(GaussianRational(3) * L(1) + L(-2)).size(), 2U);
  EXPECT_EQ(max_support(GaussianRational(3) * L(1) + L(-2)), GaussianRational(1));
  EXPECT_EQ(min_support(GaussianRational(3) * L(1) + L(-2)), GaussianRational(-2));
  EXPECT_EQ(max_support(witt().bracket(L(2) + L(0), L(5))), GaussianRational(7));
  EXPECT_EQ(max_support(L("i") + L(1)), GaussianRational(1));
  EXPECT_EQ(code_of([] { max_support(LieElement::C()); }), ErrorCode::empty_support);
  EXPECT_EQ(code_of([] { min_support(LieElement()); }), ErrorCode::empty_support);
}

TEST(Printing, Elements) {
  EXPECT_EQ(LieElement().to_string(), "0");
  EXPECT_EQ((GaussianRational(3) * L(1) + q(1, 2) * G("1/2") + LieElement::C()).to_string(),
            "3*L[1] + 1/2*G[1/2] + C");
  EXPECT_EQ(parse_lie_element("3*L[1] + (1/2+i)*G[1/2] - C").to_string(), "3*L[1] + (1/2+i)*G[1/2] - C");
}

TEST(LieProperty, AntisymmetryAndJacobiOnRandomCombinations) {
  Gen gen(20);
  const Algebra g(AlgebraKind::super_virasoro, testing_support::ZiRamond());
  const auto symbols = g.basis_symbols(g.group().window(Rational(2)));
  std::vector<BasisSymbol> even, odd;
  for (const auto& s : symbols) {
    (s.parity() == Parity::even ? even : odd).push_back(s);
  }
  auto random_homogeneous = [&](bool want_odd) {
    const auto& pool = want_odd ? odd : even;
    LieElement x;
    for (int k = 0; k < 3; ++k) {
      x.add_term(pool[static_cast<std::size_t>(gen.integer(0, static_cast<long>(pool.size()) - 1))],
                 gen.nonzero(3));
    }
    return x.is_zero() ? LieElement(pool.front()) : x;
  };
  for (int t = 0; t < 60; ++t) {
    const LieElement x = random_homogeneous(gen.coin());
    const LieElement y = random_homogeneous(gen.coin());
    const LieElement z = random_homogeneous(gen.coin());
    EXPECT_TRUE(antisymmetry_defect(g, x, y).is_zero());
    EXPECT_TRUE(jacobi_check(g, x, y, z)) << x.to_string() << " | " << y.to_string() << " | " << z.to_string();
  }
}

TEST(LieProperty, MaxSupportIsAdditive) {
  Gen gen(21);
  const Algebra g(AlgebraKind::witt, testing_support::Zi());
  for (int t = 0; t < 100; ++t) {
    LieElement a, b;
    for (int k = 0; k < 3; ++k) {
      a.add_term(BasisSymbol::L(gen.member(g.group(), 3).value), gen.nonzero(3));
      b.add_term(BasisSymbol::L(gen.member(g.group(), 3).value), gen.nonzero(3));
    }
    if (a.is_zero() || b.is_zero() || support(a).empty() || support(b).empty() ||
        max_support(a) == max_support(b)) {
      continue;
    }
    EXPECT_EQ(max_support(g.bracket(a, b)), max_support(a) + max_support(b));
  }
}
