#ifndef WITTMOD_ECHELON_HPP
#define WITTMOD_ECHELON_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "wittmod/scalar.hpp"

namespace wittmod {

using DenseVector = std::vector<GaussianRational>;
/// Sparse linear combination of previously inserted vectors, keyed by the
/// label passed to EchelonSpan::insert.
using Combination = std::map<std::size_t, GaussianRational>;

/// A subspace of Q(i)^dim kept in reduced row echelon form. The pivot of a row
/// is its highest nonzero coordinate; each row remembers how it was obtained
/// from the labelled inserted vectors.
class EchelonSpan {
 public:
  struct Row {
    DenseVector vector;
    std::size_t pivot = 0;
    Combination origin;
  };

  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Rows sorted by pivot, ascending.
  const std::vector<Row>& rows() const { return rows_; }

  /// Adds v (labelled `label`) to the span. Returns false when v was already in it.
  bool insert(const DenseVector& v, std::size_t label);
  bool insert(const DenseVector& v, Combination origin);

  bool contains(const DenseVector& v) const;
  /// Combination of inserted vectors equal to v, when v lies in the span.
  std::optional<Combination> express(const DenseVector& v) const;

 private:
  // Reduces v against the rows, accumulating the subtracted origins into origin.
  void reduce(DenseVector& v, Combination& origin) const;

  std::size_t dim_;
  std::vector<Row> rows_;
};

void add_scaled(Combination& into, const Combination& from, const GaussianRational& c);

}  // namespace wittmod

#endif  // WITTMOD_ECHELON_HPP
