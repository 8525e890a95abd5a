#include <gtest/gtest.h>

#include "support.hpp"
#include "wittmod/automorphism.hpp"
#include "wittmod/error.hpp"

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

LieElement L(int m) { return LieElement::L(GaussianRational(m)); }

}  // namespace

TEST(Automorphism, ReflectionOnWitt) {
  const Algebra g(AlgebraKind::witt, testing_support::Z());
  const auto phi = Automorphism::make(g, q("-1"), Character::trivial(testing_support::Z()));
  EXPECT_EQ(phi(L(3)), -1 * L(-3));
  EXPECT_EQ(phi(L(1)), -1 * L(-1));
  // phi([L1, L2]) = -phi(L3) = L_{-3}; [phi L1, phi L2] = [L_{-1}, L_{-2}] = L_{-3}.
  EXPECT_EQ(phi(g.bracket(L(1), L(2))), L(-3));
  EXPECT_EQ(g.bracket(phi(L(1)), phi(L(2))), L(-3));
}

TEST(Automorphism, CharacterScaling) {
  const auto z = testing_support::Z();
  const Algebra g(AlgebraKind::witt, z);
  const auto phi = Automorphism::make(g, q("1"), Character(z, {GaussianRational(2)}));
  EXPECT_EQ(phi(L(3)), GaussianRational(8) * L(3));
  EXPECT_EQ(phi(L(-1)), q(1, 2) * L(-1));
}

TEST(Automorphism, SuperUnit) {
  const auto ns = testing_support::NS();
  const Algebra g(AlgebraKind::super_witt, ns);
  const auto phi = Automorphism::make(g, I(), Character::trivial(ns));
  EXPECT_EQ(phi.index_scale(), GaussianRational(-1));
  EXPECT_EQ(phi(LieElement::G(q("1/2"))), I() * LieElement::G(q("-1/2")));
  EXPECT_EQ(phi(L(2)), -1 * L(-2));
  const auto r = testing_support::Ramond();
  EXPECT_NO_THROW(Automorphism::make(Algebra(AlgebraKind::super_witt, r), I(), Character::trivial(r)));
}

TEST(Automorphism, Rejections) {
  const auto z = testing_support::Z();
  const Algebra g(AlgebraKind::witt, z);
  EXPECT_EQ(code_of([&] { Automorphism::make(g, q("2"), Character::trivial(z)); }), ErrorCode::invalid_scaling);
  EXPECT_EQ(code_of([&] { Automorphism::make(g, q("0"), Character::trivial(z)); }), ErrorCode::invalid_scaling);
  const auto r = testing_support::Ramond();
  const Algebra sg(AlgebraKind::super_witt, r);
  // a = -1 gives the same index map as a = 1 but violates the branch condition.
  EXPECT_EQ(code_of([&] { Automorphism::make(sg, q("-1"), Character::trivial(r)); }), ErrorCode::invalid_scaling);
  EXPECT_EQ(code_of([&] { Automorphism::make(g, q("1"), Character::trivial(testing_support::Zi())); }),
            ErrorCode::spec_mismatch);
}

TEST(Automorphism, CentralCompletion) {
  const auto z = testing_support::Z();
  const Algebra vir(AlgebraKind::virasoro, z);
  const auto phi = Automorphism::make(vir, q("-1"), Character::trivial(z));
  EXPECT_EQ(phi(LieElement::C()), -1 * LieElement::C());
  EXPECT_EQ(phi(L(0)), -1 * L(0));  // (1/b - b)/24 = 0 for b = -1
  const auto pairs = basis_pairs(vir.basis_symbols(z->window(Rational(3))));
  EXPECT_TRUE(automorphism_preserves_bracket(vir, [&](const LieElement& x) { return phi(x); }, pairs));

  // Keeping C fixed breaks [L2, L-2] under the reflection.
  const LieMap naive = [&](const LieElement& x) {
    LieElement out = phi(x);
    out.add_term(BasisSymbol::C(), x.coefficient(BasisSymbol::C()) - out.coefficient(BasisSymbol::C()));
    return out;
  };
  EXPECT_FALSE(automorphism_preserves_bracket(vir, naive, {{L(2), L(-2)}}));

  const auto zi = testing_support::Zi();
  const Algebra vir_i(AlgebraKind::virasoro, zi);
  const auto rot = Automorphism::make(vir_i, I(), Character(zi, {GaussianRational(3), I()}));
  // b = i: C -> -iC, L0 -> i L0 + ((-i - i)/24) C
  EXPECT_EQ(rot(LieElement::C()), -I() * LieElement::C());
  EXPECT_EQ(rot(L(0)), I() * L(0) + q("-1/12*i") * LieElement::C());
  EXPECT_TRUE(automorphism_preserves_bracket(vir_i, [&](const LieElement& x) { return rot(x); },
                                             basis_pairs(vir_i.basis_symbols(zi->window(Rational(2))))));
}

TEST(Automorphism, WrongIndexTransformIsCaught) {
  // Over Z the units satisfy m a = m/a, so the corrupted map needs a = i.
  const auto zi = testing_support::Zi();
  const Algebra g(AlgebraKind::witt, zi);
  const Character f = Character::trivial(zi);
  const GaussianRational a = I();
  const LieMap wrong = [&](const LieElement& x) {
    LieElement out;
    for (const auto& [s, c] : x.terms()) {
      out.add_term(BasisSymbol::L(s.index.value * a), c * a * f(s.index));
    }
    return out;
  };
  EXPECT_FALSE(automorphism_preserves_bracket(g, wrong, {{L(1), L(2)}}));
  const auto good = Automorphism::make(g, a, f);
  EXPECT_TRUE(automorphism_preserves_bracket(g, [&](const LieElement& x) { return good(x); }, {{L(1), L(2)}}));
}

TEST(Automorphism, IdentityPreservesEverything) {
  const auto r = testing_support::ZiRamond();
  const Algebra g(AlgebraKind::super_virasoro, r);
  const auto id = Automorphism::make(g, q("1"), Character::trivial(r));
  const auto syms = g.basis_symbols(r->window(Rational(1)));
  for (const auto& s : syms) {
    EXPECT_EQ(id(LieElement(s)), LieElement(s));
  }
  EXPECT_TRUE(automorphism_preserves_bracket(g, [&](const LieElement& x) { return id(x); }, basis_pairs(syms)));
}

TEST(AutomorphismProperty, RandomCharactersAndUnits) {
  Gen gen(30);
  const std::vector<GroupPtr> groups{testing_support::Z(), testing_support::Zi(), testing_support::NS(),
                                     testing_support::Ramond(), testing_support::ZiRamond()};
  const std::vector<GaussianRational> units{1, -1, I(), -I()};
  for (const auto& gp : groups) {
    const AlgebraKind kind = gp->is_super() ? AlgebraKind::super_virasoro : AlgebraKind::virasoro;
    const Algebra g(kind, gp);
    const auto pairs = basis_pairs(g.basis_symbols(gp->window(Rational(1))));
    for (int t = 0; t < 4; ++t) {
      std::vector<GaussianRational> values;
      for (std::size_t k = 0; k < gp->basis().size(); ++k) {
        const bool torsion = gp->has_odd_torsion() && k + 1 == gp->basis().size();
        values.push_back(torsion ? GaussianRational(gen.coin() ? 1 : -1) : gen.nonzero(3));
      }
      const Character f(gp, values);
      for (const auto& a : units) {
        if (!gp->scaling_is_valid(a, g.is_super())) {
          continue;
        }
        const auto phi = Automorphism::make(g, a, f);
        EXPECT_TRUE(automorphism_preserves_bracket(g, [&](const LieElement& x) { return phi(x); }, pairs))
            << g.to_string() << " a=" << a << " " << f.to_string();
      }
    }
  }
}

TEST(AutomorphismProperty, CompositionPreservesBrackets) {
  Gen gen(31);
  const auto zi = testing_support::Zi();
  const Algebra g(AlgebraKind::virasoro, zi);
  const auto pairs = basis_pairs(g.basis_symbols(zi->window(Rational(1))));
  const std::vector<GaussianRational> units{1, -1, I(), -I()};
  for (int t = 0; t < 6; ++t) {
    const auto p1 = Automorphism::make(g, units[static_cast<std::size_t>(gen.integer(0, 3))],
                                       Character(zi, {gen.nonzero(3), gen.nonzero(3)}));
    const auto p2 = Automorphism::make(g, units[static_cast<std::size_t>(gen.integer(0, 3))],
                                       Character(zi, {gen.nonzero(3), gen.nonzero(3)}));
    const LieMap both = [&](const LieElement& x) { return p2(p1(x)); };
    EXPECT_TRUE(automorphism_preserves_bracket(g, both, pairs));
  }
}
