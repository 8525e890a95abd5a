#include "wittmod/lie_algebra.hpp"

#include <algorithm>

#include "format.hpp"
#include "wittmod/error.hpp"

namespace wittmod {

std::string BasisSymbol::to_string() const {
  switch (kind) {
    case SymbolKind::L: return "L[" + index.value.to_string() + "]";
    case SymbolKind::G: return "G[" + index.value.to_string() + "]";
    case SymbolKind::C: return "C";
  }
  return "?";
}

bool BasisSymbolLess::operator()(const BasisSymbol& a, const BasisSymbol& b) const {
  if (a.kind != b.kind) {
    return a.kind < b.kind;
  }
  if (a.kind == SymbolKind::C) {
    return false;
  }
  return lex_compare(a.index.value, b.index.value) > 0;
}

LieElement::LieElement(const BasisSymbol& s, GaussianRational coefficient) {
  add_term(s, coefficient);
}

GaussianRational LieElement::coefficient(const BasisSymbol& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void LieElement::add_term(const BasisSymbol& s, const GaussianRational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

std::optional<Parity> LieElement::parity() const {
  if (terms_.empty()) {
    return std::nullopt;
  }
  const Parity p = terms_.begin()->first.parity();
  for (const auto& [s, c] : terms_) {
    if (s.parity() != p) {
      return std::nullopt;
    }
  }
  return p;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [s, c] : o.terms_) {
    add_term(s, c);
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [s, c] : o.terms_) {
    add_term(s, -c);
  }
  return *this;
}

LieElement& LieElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, x] : terms_) {
    x *= c;
  }
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  return r *= GaussianRational(-1);
}

std::string LieElement::to_string() const {
  std::string out;
  for (const auto& [s, c] : terms_) {
    detail::append_term(out, c, s.to_string());
  }
  return out.empty() ? "0" : out;
}

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::witt: return "Witt";
    case AlgebraKind::virasoro: return "Virasoro";
    case AlgebraKind::super_witt: return "SuperWitt";
    case AlgebraKind::super_virasoro: return "SuperVirasoro";
  }
  return "?";
}

Algebra::Algebra(AlgebraKind kind, GroupPtr group, CentralTerm central)
    : kind_(kind), group_(std::move(group)), central_(central) {
  if (is_super_kind(kind_) != group_->is_super()) {
    throw Error(ErrorCode::kind_mismatch, std::string(wittmod::to_string(kind_)) + " over " +
                                              (group_->is_super() ? "super" : "non-super") +
                                              " group " + group_->to_string());
  }
}

void Algebra::validate(const BasisSymbol& s) const {
  switch (s.kind) {
    case SymbolKind::C:
      if (!has_center()) {
        throw Error(ErrorCode::kind_mismatch, "C in centerless " + to_string());
      }
      return;
    case SymbolKind::G:
      if (!is_super()) {
        throw Error(ErrorCode::kind_mismatch, s.to_string() + " in " + to_string());
      }
      break;
    case SymbolKind::L:
      break;
  }
  if (s.index.parity != s.parity() || !group_->contains(s.index)) {
    throw Error(ErrorCode::not_in_group, s.to_string() + ": index " + s.index.to_string() +
                                             " is not in " + group_->to_string());
  }
}

void Algebra::validate(const LieElement& x) const {
  for (const auto& [s, c] : x.terms()) {
    validate(s);
  }
}

GaussianRational Algebra::central_coefficient(const GaussianRational& m) const {
  switch (central_) {
    case CentralTerm::standard: return (m * m * m - m) / GaussianRational(12);
    case CentralTerm::cubic: return (m * m * m) / GaussianRational(12);
    case CentralTerm::quadratic: return (m * m) / GaussianRational(12);
  }
  return GaussianRational(0);
}

LieElement Algebra::bracket(const BasisSymbol& a, const BasisSymbol& b) const {
  LieElement out;
  if (a.kind == SymbolKind::C || b.kind == SymbolKind::C) {
    return out;
  }
  const GaussianRational& m = a.index.value;
  const GaussianRational& n = b.index.value;
  const GaussianRational sum = m + n;
  if (a.kind == SymbolKind::L && b.kind == SymbolKind::L) {
    out.add_term(BasisSymbol::L(sum), m - n);
    if (has_center() && sum.is_zero()) {
      out.add_term(BasisSymbol::C(), central_coefficient(m));
    }
  } else if (a.kind == SymbolKind::L && b.kind == SymbolKind::G) {
    out.add_term(BasisSymbol::G(sum), m / GaussianRational(2) - n);
  } else if (a.kind == SymbolKind::G && b.kind == SymbolKind::L) {
    out.add_term(BasisSymbol::G(sum), m - n / GaussianRational(2));
  } else {
    out.add_term(BasisSymbol::L(sum), GaussianRational(2));
    if (has_center() && sum.is_zero()) {
      out.add_term(BasisSymbol::C(), (m * m - Rational(1, 4)) / GaussianRational(3));
    }
  }
  return out;
}

LieElement Algebra::bracket(const LieElement& x, const LieElement& y) const {
  validate(x);
  validate(y);
  return bracket_unchecked(x, y);
}

LieElement Algebra::bracket_unchecked(const LieElement& x, const LieElement& y) const {
  LieElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const LieElement ab = bracket(a, b);
      if (ab.is_zero()) {
        continue;
      }
      const GaussianRational c = ca * cb;
      for (const auto& [s, v] : ab.terms()) {
        out.add_term(s, c * v);
      }
    }
  }
  return out;
}

std::vector<BasisSymbol> Algebra::basis_symbols(const std::vector<GroupElement>& indices) const {
  std::vector<BasisSymbol> out;
  for (const auto& e : indices) {
    if (e.parity == Parity::even) {
      out.push_back({SymbolKind::L, e});
    } else if (is_super()) {
      out.push_back({SymbolKind::G, e});
    }
  }
  if (has_center()) {
    out.push_back(BasisSymbol::C());
  }
  return out;
}

std::string Algebra::to_string() const {
  return std::string(wittmod::to_string(kind_)) + group_->to_string();
}

namespace {

Parity homogeneous_parity(const LieElement& x) {
  if (x.is_zero()) {
    return Parity::even;
  }
  const auto p = x.parity();
  if (!p) {
    throw Error(ErrorCode::not_homogeneous, x.to_string() + " mixes parities");
  }
  return *p;
}

}  // namespace

LieElement jacobiator(const Bracket& bracket, const LieElement& x, const LieElement& y,
                      const LieElement& z) {
  const Parity px = homogeneous_parity(x);
  const Parity py = homogeneous_parity(y);
  const Parity pz = homogeneous_parity(z);
  LieElement sum = GaussianRational(koszul_sign(px, pz)) * bracket(x, bracket(y, z));
  sum += GaussianRational(koszul_sign(py, px)) * bracket(y, bracket(z, x));
  sum += GaussianRational(koszul_sign(pz, py)) * bracket(z, bracket(x, y));
  return sum;
}

bool jacobi_check(const Algebra& g, const LieElement& x, const LieElement& y, const LieElement& z) {
  const Bracket b = [&g](const LieElement& u, const LieElement& v) { return g.bracket(u, v); };
  return jacobiator(b, x, y, z).is_zero();
}

LieElement antisymmetry_defect(const Algebra& g, const LieElement& x, const LieElement& y) {
  const int sign = koszul_sign(homogeneous_parity(x), homogeneous_parity(y));
  return g.bracket(x, y) + GaussianRational(sign) * g.bracket(y, x);
}

std::vector<GroupElement> support(const LieElement& x) {
  std::vector<GroupElement> out;
  for (const auto& [s, c] : x.terms()) {
    if (s.kind != SymbolKind::C) {
      out.push_back(s.index);
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
    return lex_compare(a.value, b.value) > 0;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const GroupElement& a, const GroupElement& b) { return a.value == b.value; }),
            out.end());
  return out;
}

GaussianRational max_support(const LieElement& x) {
  const auto s = support(x);
  if (s.empty()) {
    throw Error(ErrorCode::empty_support, "element " + x.to_string() + " has empty support");
  }
  return s.front().value;
}

GaussianRational min_support(const LieElement& x) {
  const auto s = support(x);
  if (s.empty()) {
    throw Error(ErrorCode::empty_support, "element " + x.to_string() + " has empty support");
  }
  return s.back().value;
}

}  // namespace wittmod
