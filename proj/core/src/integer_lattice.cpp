#include "wittmod/integer_lattice.hpp"

#include <algorithm>
#include <utility>

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

// row -= q * other
void axpy(IntVector& row, const mpz_class& q, const IntVector& other) {
  for (std::size_t k = 0; k < row.size(); ++k) {
    row[k] -= q * other[k];
  }
}

}  // namespace

HermiteBasis::HermiteBasis(std::vector<IntVector> generators, std::size_t dimension)
    : dimension_(dimension) {
  for (const auto& g : generators) {
    if (g.size() != dimension) {
      throw Error(ErrorCode::invalid_argument, "lattice generator has wrong dimension");
    }
  }
  std::vector<IntVector> work;
  for (auto& g : generators) {
    if (!is_zero_vector(g)) {
      work.push_back(std::move(g));
    }
  }

  std::size_t top = 0;
  for (std::size_t col = 0; col < dimension && top < work.size(); ++col) {
    // Euclid on column col across rows [top, end) until one nonzero remains.
    for (;;) {
      std::size_t best = work.size();
      for (std::size_t r = top; r < work.size(); ++r) {
        if (sgn(work[r][col]) == 0) {
          continue;
        }
        if (best == work.size() || abs(work[r][col]) < abs(work[best][col])) {
          best = r;
        }
      }
      if (best == work.size()) {
        break;
      }
      std::swap(work[top], work[best]);
      bool reduced_all = true;
      for (std::size_t r = top + 1; r < work.size(); ++r) {
        if (sgn(work[r][col]) == 0) {
          continue;
        }
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), work[r][col].get_mpz_t(), work[top][col].get_mpz_t());
        axpy(work[r], q, work[top]);
        if (sgn(work[r][col]) != 0) {
          reduced_all = false;
        }
      }
      if (reduced_all) {
        break;
      }
    }
    if (sgn(work[top][col]) == 0) {
      continue;
    }
    if (sgn(work[top][col]) < 0) {
      for (auto& x : work[top]) {
        x = -x;
      }
    }
    for (std::size_t r = 0; r < top; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), work[r][col].get_mpz_t(), work[top][col].get_mpz_t());
      axpy(work[r], q, work[top]);
    }
    pivots_.push_back(col);
    ++top;
    // Drop rows that became zero so they do not occupy pivot slots.
    work.erase(std::remove_if(work.begin() + static_cast<std::ptrdiff_t>(top), work.end(),
                              is_zero_vector),
               work.end());
  }
  work.resize(top);
  rows_ = std::move(work);
}

std::optional<IntVector> HermiteBasis::solve(const IntVector& v) const {
  if (v.size() != dimension_) {
    throw Error(ErrorCode::invalid_argument, "vector has wrong dimension");
  }
  IntVector rest = v;
  IntVector coords(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    for (std::size_t c = (r == 0 ? 0 : pivots_[r - 1] + 1); c < col; ++c) {
      if (sgn(rest[c]) != 0) {
        return std::nullopt;
      }
    }
    if (!mpz_divisible_p(rest[col].get_mpz_t(), rows_[r][col].get_mpz_t())) {
      return std::nullopt;
    }
    coords[r] = rest[col] / rows_[r][col];
    axpy(rest, coords[r], rows_[r]);
  }
  if (!is_zero_vector(rest)) {
    return std::nullopt;
  }
  return coords;
}

}  // namespace wittmod
