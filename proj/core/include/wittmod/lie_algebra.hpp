#ifndef WITTMOD_LIE_ALGEBRA_HPP
#define WITTMOD_LIE_ALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/index_group.hpp"
#include "wittmod/scalar.hpp"

namespace wittmod {

enum class SymbolKind : unsigned char { L, G, C };

/// L_m (even index), G_r (odd index) or the central element C (no index).
struct BasisSymbol {
  SymbolKind kind = SymbolKind::C;
  GroupElement index;

  static BasisSymbol L(const GaussianRational& m) { return {SymbolKind::L, {m, Parity::even}}; }
  static BasisSymbol G(const GaussianRational& r) { return {SymbolKind::G, {r, Parity::odd}}; }
  static BasisSymbol C() { return {SymbolKind::C, {}}; }

  Parity parity() const { return kind == SymbolKind::G ? Parity::odd : Parity::even; }
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
  std::string to_string() const;
};

/// L before G before C; within a kind, larger indices first in the
/// lexicographic order on C. Printing follows this order.
struct BasisSymbolLess {
  bool operator()(const BasisSymbol& a, const BasisSymbol& b) const;
};

/// Finite linear combination of basis symbols; zero coefficients are never stored.
class LieElement {
 public:
  using Terms = std::map<BasisSymbol, GaussianRational, BasisSymbolLess>;

  LieElement() = default;
  LieElement(const BasisSymbol& s, GaussianRational coefficient = GaussianRational(1));

  static LieElement L(const GaussianRational& m) { return LieElement(BasisSymbol::L(m)); }
  static LieElement G(const GaussianRational& r) { return LieElement(BasisSymbol::G(r)); }
  static LieElement C() { return LieElement(BasisSymbol::C()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const BasisSymbol& s) const;

  /// Adds c * s in place.
  void add_term(const BasisSymbol& s, const GaussianRational& c);

  /// Parity when all terms share one; nullopt for zero or mixed elements.
  std::optional<Parity> parity() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const GaussianRational& c);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const GaussianRational& c, LieElement a) { return a *= c; }
  friend LieElement operator*(LieElement a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const LieElement&, const LieElement&) = default;

  /// e.g. "3*L[1] + 1/2*G[1/2] + C"; "0" for the zero element.
  std::string to_string() const;

 private:
  Terms terms_;
};

enum class AlgebraKind { witt, virasoro, super_witt, super_virasoro };

std::string_view to_string(AlgebraKind kind);
inline bool is_super_kind(AlgebraKind k) {
  return k == AlgebraKind::super_witt || k == AlgebraKind::super_virasoro;
}
inline bool has_center(AlgebraKind k) {
  return k == AlgebraKind::virasoro || k == AlgebraKind::super_virasoro;
}

/// Coefficient of C in [L_m, L_{-m}]. Anything but `standard` is a deliberate
/// corruption used to show that the Jacobi checker notices bad tables.
enum class CentralTerm {
  standard,   // (m^3 - m)/12
  cubic,      // m^3/12, paired with the unchanged G-sector term
  quadratic,  // m^2/12
};

/// One of W_G, V_G, sW_G, sV_G over a fixed index group.
class Algebra {
 public:
  /// Throws KindMismatch when super-ness of kind and group disagree.
  Algebra(AlgebraKind kind, GroupPtr group, CentralTerm central = CentralTerm::standard);

  AlgebraKind kind() const { return kind_; }
  const IndexGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  bool is_super() const { return is_super_kind(kind_); }
  bool has_center() const { return wittmod::has_center(kind_); }
  CentralTerm central_term() const { return central_; }

  /// Throws NotInGroup / KindMismatch for symbols outside this algebra.
  void validate(const BasisSymbol& s) const;
  void validate(const LieElement& x) const;

  LieElement bracket(const BasisSymbol& a, const BasisSymbol& b) const;
  /// Bilinear extension of the basis brackets.
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// Same without membership validation, for inputs already known to be valid.
  LieElement bracket_unchecked(const LieElement& x, const LieElement& y) const;

  /// The basis symbols indexed by `indices` (L for even, G for odd) plus C
  /// when the algebra is centrally extended.
  std::vector<BasisSymbol> basis_symbols(const std::vector<GroupElement>& indices) const;

  std::string to_string() const;

 private:
  GaussianRational central_coefficient(const GaussianRational& m) const;

  AlgebraKind kind_;
  GroupPtr group_;
  CentralTerm central_;
};

using Bracket = std::function<LieElement(const LieElement&, const LieElement&)>;

/// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]].
/// Throws NotHomogeneous for non-homogeneous inputs.
LieElement jacobiator(const Bracket& bracket, const LieElement& x, const LieElement& y,
                      const LieElement& z);
bool jacobi_check(const Algebra& g, const LieElement& x, const LieElement& y, const LieElement& z);

/// [x,y] + (-1)^{|x||y|}[y,x]; zero when super-antisymmetry holds.
LieElement antisymmetry_defect(const Algebra& g, const LieElement& x, const LieElement& y);

/// Indices of the L and G terms (C carries none), largest first.
std::vector<GroupElement> support(const LieElement& x);
/// Extrema of the support values. Throw EmptySupport when there are no indexed terms.
GaussianRational max_support(const LieElement& x);
GaussianRational min_support(const LieElement& x);

}  // namespace wittmod

#endif  // WITTMOD_LIE_ALGEBRA_HPP
