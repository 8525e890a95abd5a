#ifndef WITTMOD_INDEX_GROUP_HPP
#define WITTMOD_INDEX_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/integer_lattice.hpp"
#include "wittmod/scalar.hpp"

namespace wittmod {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}
inline int as_int(Parity p) { return static_cast<int>(p); }
/// (-1)^(|a||b|)
inline int koszul_sign(Parity a, Parity b) { return (a == Parity::odd && b == Parity::odd) ? -1 : 1; }

/// An index (m, parity) in C x Z_2. Non-super groups only carry even elements.
struct GroupElement {
  GaussianRational value;
  Parity parity = Parity::even;

  GroupElement operator+(const GroupElement& o) const { return {value + o.value, parity + o.parity}; }
  GroupElement operator-(const GroupElement& o) const { return {value - o.value, parity + o.parity}; }
  GroupElement operator-() const { return {-value, parity}; }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// "1/2" for even elements, "1/2 odd" for odd ones.
  std::string to_string() const;
};

/// Orders by parity, then by the lexicographic order on values.
struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const;
};

/// A finitely generated subgroup of Q(i) (or of Q(i) x Z_2 in super mode)
/// containing (1, even).
///
/// The canonical basis is read off the Hermite normal form of the generators
/// after clearing denominators: value rows give a free basis of the value
/// lattice; when (0, odd) lies in the group (Ramond type) it is appended as a
/// Z_2 torsion generator whose coordinate is reduced mod 2.
class IndexGroup {
 public:
  /// Throws GroupMissingOne if (1, even) is not generated, ParityInconsistent
  /// if an odd generator is given to a non-super group.
  static std::shared_ptr<const IndexGroup> build(std::vector<GroupElement> generators,
                                                 bool super_mode);

  bool is_super() const { return super_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<GroupElement>& basis() const { return basis_; }
  /// True when (0, odd) is a member; the last basis element is then (0, odd).
  bool has_odd_torsion() const { return torsion_; }

  bool contains(const GaussianRational& x, Parity parity = Parity::even) const;
  bool contains(const GroupElement& x) const { return contains(x.value, x.parity); }

  /// Coordinates w.r.t. basis(); the torsion coordinate (if any) is 0 or 1.
  /// Throws NotInGroup.
  std::vector<long> coordinates(const GroupElement& x) const;
  std::optional<std::vector<long>> try_coordinates(const GroupElement& x) const;

  /// Builds the element, throwing NotInGroup if it is not a member.
  GroupElement element(const GaussianRational& x, Parity parity = Parity::even) const;

  /// All members with |Re|, |Im| <= bound, in GroupElementLess order.
  std::vector<GroupElement> window(const Rational& bound) const;

  /// aG = G (non-super) or a^2 G = G with parities preserved and the branch
  /// condition Re(a) > 0 or (Re(a) = 0 and Im(a) > 0) (super).
  bool scaling_is_valid(const GaussianRational& a, bool super_mode) const;

  bool is_subgroup_of(const IndexGroup& other) const;

  /// Same super flag and same canonical basis.
  friend bool operator==(const IndexGroup& a, const IndexGroup& b) {
    return a.super_ == b.super_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

 private:
  IndexGroup() = default;
  std::optional<IntVector> embed(const GaussianRational& x, Parity parity) const;

  bool super_ = false;
  bool torsion_ = false;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> basis_;
  mpz_class denominator_{1};
  std::optional<HermiteBasis> lattice_;
  std::size_t value_rank_ = 0;
};

using GroupPtr = std::shared_ptr<const IndexGroup>;

/// A homomorphism f from the group to Q(i)^*, stored by its values on the
/// canonical basis.
class Character {
 public:
  /// Throws InvalidCharacter for a wrong number of values, a zero value, or a
  /// torsion value other than +-1.
  Character(GroupPtr group, std::vector<GaussianRational> basis_values);

  static Character trivial(GroupPtr group);
  /// phi(a) = (-1)^parity(a). Throws NotSuper on a non-super group.
  static Character parity_character(GroupPtr group);

  const IndexGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<GaussianRational>& basis_values() const { return values_; }

  /// Throws NotInGroup.
  GaussianRational operator()(const GroupElement& x) const;
  GaussianRational operator()(const GaussianRational& x, Parity parity = Parity::even) const {
    return (*this)({x, parity});
  }

  /// Pointwise product; both characters must live on equal groups.
  Character operator*(const Character& o) const;
  bool is_trivial() const;

  friend bool operator==(const Character& a, const Character& b) {
    return *a.group_ == *b.group_ && a.values_ == b.values_;
  }

  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<GaussianRational> values_;
};

/// True iff big restricted to small's group equals small. Throws NotSubgroup
/// when small's group is not contained in big's.
bool restriction_agrees(const Character& big, const Character& small);

}  // namespace wittmod

#endif  // WITTMOD_INDEX_GROUP_HPP
