#ifndef WITTMOD_OMEGA_MODULE_HPP
#define WITTMOD_OMEGA_MODULE_HPP

#include <functional>
#include <string>
#include <vector>

#include "wittmod/automorphism.hpp"
#include "wittmod/error.hpp"
#include "wittmod/index_group.hpp"
#include "wittmod/lie_algebra.hpp"
#include "wittmod/polynomial.hpp"

namespace wittmod {

/// Omega(f, alpha) over a non-super group, sOmega(f, alpha) over a super group;
/// `parity_flipped` applies the parity switching functor.
struct OmegaModuleSpec {
  Character f;
  GaussianRational alpha;
  bool parity_flipped = false;

  const IndexGroup& group() const { return f.group(); }
  bool is_super() const { return f.group().is_super(); }
  /// Parity of the generator 1 (odd after a flip).
  Parity one_parity() const { return parity_flipped ? Parity::odd : Parity::even; }

  friend bool operator==(const OmegaModuleSpec&, const OmegaModuleSpec&) = default;
  std::string to_string() const;
};

/// P(x) + xi Q(x) with x standing for L_0. `one` is the coefficient of the
/// generator 1 and `xi` that of the generator xi; the parity flip only changes
/// which of the two is called even.
struct OmegaElement {
  Polynomial one;
  Polynomial xi;

  static OmegaElement of_one(Polynomial p) { return {std::move(p), {}}; }
  static OmegaElement of_xi(Polynomial q) { return {{}, std::move(q)}; }

  bool is_zero() const { return one.is_zero() && xi.is_zero(); }
  long degree() const { return std::max(one.degree(), xi.degree()); }

  OmegaElement& operator+=(const OmegaElement& o) {
    one += o.one;
    xi += o.xi;
    return *this;
  }
  OmegaElement& operator-=(const OmegaElement& o) {
    one -= o.one;
    xi -= o.xi;
    return *this;
  }
  OmegaElement& operator*=(const GaussianRational& c) {
    one *= c;
    xi *= c;
    return *this;
  }
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
  friend OmegaElement operator*(const GaussianRational& c, OmegaElement a) { return a *= c; }
  friend bool operator==(const OmegaElement&, const OmegaElement&) = default;

  /// "P + xi*(Q)"; either part is omitted when zero, "0" when both are.
  std::string to_string() const;
};

/// Throws NotSuper for a parity flip on a non-super group.
OmegaModuleSpec make_omega_spec(Character f, GaussianRational alpha, bool parity_flipped = false);

/// Action of x on v. C acts by zero. Throws NotInGroup for indices outside
/// the group, KindMismatch for G terms on a non-super module.
OmegaElement act(const OmegaModuleSpec& spec, const LieElement& x, const OmegaElement& v);
OmegaElement act(const OmegaModuleSpec& spec, const BasisSymbol& s, const OmegaElement& v);

/// Parity of a nonzero homogeneous element; nullopt for zero or mixed ones.
std::optional<Parity> omega_parity(const OmegaModuleSpec& spec, const OmegaElement& v);

/// act([x,y], v) - act(x, act(y, v)) + (-1)^{|x||y|} act(y, act(x, v)) for any
/// action on any vector type with +, - and scalar multiplication.
template <typename Vector, typename Action>
Vector module_axiom_defect(const Algebra& g, const Action& action, const LieElement& x,
                           const LieElement& y, const Vector& v) {
  const auto px = x.parity();
  const auto py = y.parity();
  if ((!x.is_zero() && !px) || (!y.is_zero() && !py)) {
    throw Error(ErrorCode::not_homogeneous, "module axiom needs homogeneous elements");
  }
  const int sign = koszul_sign(px.value_or(Parity::even), py.value_or(Parity::even));
  Vector d = action(g.bracket(x, y), v);
  d -= action(x, action(y, v));
  d += GaussianRational(sign) * action(y, action(x, v));
  return d;
}

bool module_axiom_check(const Algebra& g, const OmegaModuleSpec& spec, const LieElement& x,
                        const LieElement& y, const OmegaElement& v);

/// Throws NotSuper on a non-super module.
OmegaModuleSpec parity_flip(const OmegaModuleSpec& spec);

/// The module whose ordinary action is isomorphic to spec twisted by phi:
/// same alpha, character g'(m) = f_phi(m) g(m/b). Throws SpecMismatch when phi
/// lives on another group and KindMismatch when the super flags differ.
OmegaModuleSpec twist(const OmegaModuleSpec& spec, const Automorphism& phi);

/// The isomorphism from twist(spec, phi) to the phi-twisted spec:
/// P + xi Q -> P(bx) + a xi Q(bx).
OmegaElement twist_intertwiner(const Automorphism& phi, const OmegaElement& v);

/// psi(act(twist(spec, phi), x, v)) == act(spec, phi(x), psi(v)) for every
/// x in `ops` and v in `vectors`.
bool twist_intertwines(const OmegaModuleSpec& spec, const Automorphism& phi,
                       const std::vector<BasisSymbol>& ops, const std::vector<OmegaElement>& vectors);

/// Isomorphism classes: alpha and f agree, up to the parity character in the
/// super case; a flipped module is never isomorphic to an unflipped one.
/// Throws SpecMismatch for different groups.
bool isomorphic(const OmegaModuleSpec& a, const OmegaModuleSpec& b);

/// x^k (and xi x^k in super mode) for k <= degree.
std::vector<OmegaElement> monomials(const OmegaModuleSpec& spec, long degree);

/// L_m for even and G_r for odd elements of the window |Re|, |Im| <= bound.
std::vector<BasisSymbol> window_operators(const IndexGroup& group, const Rational& bound);

using OmegaMap = std::function<OmegaElement(const OmegaElement&)>;

/// A module map between two Omega specs, given by its action on elements.
struct OmegaMorphism {
  OmegaModuleSpec source;
  OmegaModuleSpec target;
  OmegaMap map;
  std::string rule;
};

/// Omega(f, 1) -> Omega(f, 0), P -> xP. Throws BadTarget unless target.alpha == 0.
OmegaMorphism embed_psi1(const OmegaModuleSpec& target);
/// Pi(sOmega(f, 1/2)) -> sOmega(f, 0), P + xi Q -> xQ + xi P. Throws BadTarget
/// unless target.alpha == 0, NotSuper on non-super targets.
OmegaMorphism embed_psi2(const OmegaModuleSpec& target);

bool intertwines(const OmegaMorphism& psi, const std::vector<BasisSymbol>& ops,
                 const std::vector<OmegaElement>& vectors);
/// Images of the vectors are linearly independent.
bool injective_on(const OmegaMorphism& psi, const std::vector<OmegaElement>& vectors);
/// The image of psi_1 / psi_2 is everything with zero constant term in the
/// coefficient of 1. This checks that every x in ops maps every vector into it,
/// i.e. that the one-dimensional cokernel is a trivial module.
bool cokernel_is_trivial(const OmegaMorphism& psi, const std::vector<BasisSymbol>& ops,
                         const std::vector<OmegaElement>& vectors);

}  // namespace wittmod

#endif  // WITTMOD_OMEGA_MODULE_HPP
