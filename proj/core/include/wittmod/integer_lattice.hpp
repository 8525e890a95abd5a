#ifndef WITTMOD_INTEGER_LATTICE_HPP
#define WITTMOD_INTEGER_LATTICE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace wittmod {

using IntVector = std::vector<mpz_class>;

/// Row-style Hermite normal form of a lattice in Z^n.
///
/// The rows form a Z-basis of the lattice spanned by the generators. Each
/// row's pivot (first nonzero entry) is positive and lies strictly right of
/// the previous row's pivot; entries above a pivot are reduced into
/// [0, pivot). The form is unique for a given lattice, which is what makes
/// group bases canonical.
class HermiteBasis {
 public:
  HermiteBasis(std::vector<IntVector> generators, std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<IntVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Integer coordinates of v with respect to rows(), or nullopt when v is not
  /// in the lattice.
  std::optional<IntVector> solve(const IntVector& v) const;

 private:
  std::size_t dimension_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace wittmod

#endif  // WITTMOD_INTEGER_LATTICE_HPP
