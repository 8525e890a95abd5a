#include "wittmod/echelon.hpp"

#include <algorithm>

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

std::optional<std::size_t> leading_index(const DenseVector& v) {
  for (std::size_t k = v.size(); k-- > 0;) {
    if (!v[k].is_zero()) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace

void add_scaled(Combination& into, const Combination& from, const GaussianRational& c) {
  for (const auto& [label, x] : from) {
    auto [it, inserted] = into.try_emplace(label, c * x);
    if (!inserted) {
      it->second += c * x;
    }
    if (it->second.is_zero()) {
      into.erase(it);
    }
  }
}

void EchelonSpan::reduce(DenseVector& v, Combination& origin) const {
  // Highest pivots first so that each subtraction only touches lower columns.
  for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
    const GaussianRational c = v[row->pivot];
    if (c.is_zero()) {
      continue;
    }
    for (std::size_t k = 0; k <= row->pivot; ++k) {
      if (!row->vector[k].is_zero()) {
        v[k] -= c * row->vector[k];
      }
    }
    add_scaled(origin, row->origin, -c);
  }
}

bool EchelonSpan::insert(const DenseVector& v, std::size_t label) {
  return insert(v, Combination{{label, GaussianRational(1)}});
}

bool EchelonSpan::insert(const DenseVector& v, Combination origin) {
  if (v.size() != dim_) {
    throw Error(ErrorCode::invalid_argument, "vector length does not match the span dimension");
  }
  DenseVector r = v;
  reduce(r, origin);
  const auto lead = leading_index(r);
  if (!lead) {
    return false;
  }
  const GaussianRational inv = r[*lead].inverse();
  for (auto& x : r) {
    x *= inv;
  }
  for (auto& [label, x] : origin) {
    x *= inv;
  }
  for (auto& row : rows_) {
    const GaussianRational c = row.vector[*lead];
    if (c.is_zero()) {
      continue;
    }
    for (std::size_t k = 0; k <= *lead; ++k) {
      if (!r[k].is_zero()) {
        row.vector[k] -= c * r[k];
      }
    }
    add_scaled(row.origin, origin, -c);
  }
  Row fresh{std::move(r), *lead, std::move(origin)};
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), fresh.pivot,
                                    [](const Row& a, std::size_t p) { return a.pivot < p; });
  rows_.insert(pos, std::move(fresh));
  return true;
}

bool EchelonSpan::contains(const DenseVector& v) const {
  return express(v).has_value();
}

std::optional<Combination> EchelonSpan::express(const DenseVector& v) const {
  if (v.size() != dim_) {
    throw Error(ErrorCode::invalid_argument, "vector length does not match the span dimension");
  }
  DenseVector r = v;
  Combination origin;
  reduce(r, origin);
  if (leading_index(r)) {
    return std::nullopt;
  }
  // r = v - sum(c_row * row) = 0, and origin accumulated -c_row * row.origin.
  for (auto& [label, x] : origin) {
    x = -x;
  }
  return origin;
}

}  // namespace wittmod
