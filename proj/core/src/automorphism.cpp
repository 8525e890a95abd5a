#include "wittmod/automorphism.hpp"

#include "wittmod/error.hpp"

namespace wittmod {

Automorphism Automorphism::make(const Algebra& algebra, const GaussianRational& a, Character f) {
  if (!(f.group() == algebra.group())) {
    throw Error(ErrorCode::spec_mismatch, "character " + f.to_string() + " is not defined on " +
                                              algebra.group().to_string());
  }
  const bool super_mode = algebra.is_super();
  if (!algebra.group().scaling_is_valid(a, super_mode)) {
    throw Error(ErrorCode::invalid_scaling,
                "a = " + a.to_string() + " does not preserve " + algebra.group().to_string());
  }
  GaussianRational b = super_mode ? a * a : a;
  return Automorphism(algebra, a, std::move(b), std::move(f));
}

LieElement Automorphism::operator()(const BasisSymbol& s) const {
  LieElement out;
  switch (s.kind) {
    case SymbolKind::L: {
      const GaussianRational& m = s.index.value;
      out.add_term(BasisSymbol::L(m / b_), b_ * f_(s.index));
      if (algebra_.has_center() && m.is_zero()) {
        out.add_term(BasisSymbol::C(), (b_.inverse() - b_) / GaussianRational(24));
      }
      break;
    }
    case SymbolKind::G:
      out.add_term(BasisSymbol::G(s.index.value / b_), a_ * f_(s.index));
      break;
    case SymbolKind::C:
      out.add_term(BasisSymbol::C(), b_.inverse());
      break;
  }
  return out;
}

LieElement Automorphism::operator()(const LieElement& x) const {
  algebra_.validate(x);
  LieElement out;
  for (const auto& [s, c] : x.terms()) {
    out += c * (*this)(s);
  }
  return out;
}

std::optional<std::pair<LieElement, LieElement>> bracket_violation(
    const Algebra& g, const LieMap& map, const std::vector<std::pair<LieElement, LieElement>>& pairs) {
  for (const auto& [x, y] : pairs) {
    if (!(map(g.bracket(x, y)) == g.bracket(map(x), map(y)))) {
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool automorphism_preserves_bracket(const Algebra& g, const LieMap& map,
                                    const std::vector<std::pair<LieElement, LieElement>>& pairs) {
  return !bracket_violation(g, map, pairs).has_value();
}

std::vector<std::pair<LieElement, LieElement>> basis_pairs(const std::vector<BasisSymbol>& symbols) {
  std::vector<std::pair<LieElement, LieElement>> out;
  out.reserve(symbols.size() * symbols.size());
  for (const auto& a : symbols) {
    for (const auto& b : symbols) {
      out.emplace_back(LieElement(a), LieElement(b));
    }
  }
  return out;
}

}  // namespace wittmod
