#ifndef WITTMOD_AUTOMORPHISM_HPP
#define WITTMOD_AUTOMORPHISM_HPP

#include <functional>
#include <utility>
#include <vector>

#include "wittmod/index_group.hpp"
#include "wittmod/lie_algebra.hpp"

namespace wittmod {

/// phi_{a,f}: L_m -> b f(m) L_{m/b}, G_r -> a f(r) G_{r/b} with b = a (even
/// kinds) or b = a^2 (super kinds).
///
/// On the central extensions the map is completed by C -> C/b and an extra
/// ((1/b - b)/24) C in the image of L_0; this is the unique completion that
/// keeps the bracket (it is the identity on C exactly when b = 1).
class Automorphism {
 public:
  /// Throws InvalidScaling when a fails the scaling test for the algebra's
  /// group, SpecMismatch when f lives on a different group.
  static Automorphism make(const Algebra& algebra, const GaussianRational& a, Character f);

  const Algebra& algebra() const { return algebra_; }
  const GaussianRational& scaling() const { return a_; }
  /// b: the factor by which indices are divided.
  const GaussianRational& index_scale() const { return b_; }
  const Character& character() const { return f_; }

  LieElement operator()(const BasisSymbol& s) const;
  LieElement operator()(const LieElement& x) const;

 private:
  Automorphism(Algebra algebra, GaussianRational a, GaussianRational b, Character f)
      : algebra_(std::move(algebra)), a_(std::move(a)), b_(std::move(b)), f_(std::move(f)) {}

  Algebra algebra_;
  GaussianRational a_;
  GaussianRational b_;
  Character f_;
};

using LieMap = std::function<LieElement(const LieElement&)>;

/// First homogeneous pair on which map([x,y]) != [map x, map y], if any.
std::optional<std::pair<LieElement, LieElement>> bracket_violation(
    const Algebra& g, const LieMap& map, const std::vector<std::pair<LieElement, LieElement>>& pairs);

bool automorphism_preserves_bracket(const Algebra& g, const LieMap& map,
                                    const std::vector<std::pair<LieElement, LieElement>>& pairs);

/// All ordered pairs of basis symbols drawn from `symbols`.
std::vector<std::pair<LieElement, LieElement>> basis_pairs(const std::vector<BasisSymbol>& symbols);

}  // namespace wittmod

#endif  // WITTMOD_AUTOMORPHISM_HPP
