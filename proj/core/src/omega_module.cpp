#include "wittmod/omega_module.hpp"

#include "wittmod/echelon.hpp"
#include "wittmod/error.hpp"

namespace wittmod {

std::string OmegaModuleSpec::to_string() const {
  std::string s = is_super() ? "sOmega" : "Omega";
  s += group().to_string() + "(f=" + f.to_string() + ", alpha=" + alpha.to_string() + ")";
  return parity_flipped ? "Pi(" + s + ")" : s;
}

std::string OmegaElement::to_string() const {
  if (xi.is_zero()) {
    return one.to_string();
  }
  const std::string odd = "xi*(" + xi.to_string() + ")";
  return one.is_zero() ? odd : one.to_string() + " + " + odd;
}

OmegaModuleSpec make_omega_spec(Character f, GaussianRational alpha, bool parity_flipped) {
  if (parity_flipped && !f.group().is_super()) {
    throw Error(ErrorCode::not_super, "parity flip of a non-super module");
  }
  return {std::move(f), std::move(alpha), parity_flipped};
}

OmegaElement act(const OmegaModuleSpec& spec, const BasisSymbol& s, const OmegaElement& v) {
  const GaussianRational& m = s.index.value;
  switch (s.kind) {
    case SymbolKind::C:
      return {};
    case SymbolKind::L: {
      const GaussianRational fm = spec.f(s.index);
      OmegaElement out;
      out.one = fm * Polynomial::linear(m * spec.alpha) * v.one.shifted(m);
      if (!v.xi.is_zero()) {
        const GaussianRational shift = m * (spec.alpha + Rational(1, 2));
        out.xi = fm * Polynomial::linear(shift) * v.xi.shifted(m);
      }
      return out;
    }
    case SymbolKind::G: {
      if (!spec.is_super()) {
        throw Error(ErrorCode::kind_mismatch, s.to_string() + " acting on " + spec.to_string());
      }
      const GaussianRational fr = spec.f(s.index);
      OmegaElement out;
      out.one = fr * Polynomial::linear(GaussianRational(2) * m * spec.alpha) * v.xi.shifted(m);
      out.xi = fr * v.one.shifted(m);
      return out;
    }
  }
  return {};
}

OmegaElement act(const OmegaModuleSpec& spec, const LieElement& x, const OmegaElement& v) {
  OmegaElement out;
  for (const auto& [s, c] : x.terms()) {
    if (s.kind == SymbolKind::G && !spec.is_super()) {
      throw Error(ErrorCode::kind_mismatch, s.to_string() + " acting on " + spec.to_string());
    }
    if (s.kind != SymbolKind::C && !spec.group().contains(s.index)) {
      throw Error(ErrorCode::not_in_group,
                  s.to_string() + " is not indexed by " + spec.group().to_string());
    }
    out += c * act(spec, s, v);
  }
  return out;
}

std::optional<Parity> omega_parity(const OmegaModuleSpec& spec, const OmegaElement& v) {
  if (v.is_zero() || (!v.one.is_zero() && !v.xi.is_zero())) {
    return std::nullopt;
  }
  const Parity p = spec.one_parity();
  return v.one.is_zero() ? p + Parity::odd : p;
}

bool module_axiom_check(const Algebra& g, const OmegaModuleSpec& spec, const LieElement& x,
                        const LieElement& y, const OmegaElement& v) {
  const auto action = [&spec](const LieElement& e, const OmegaElement& u) { return act(spec, e, u); };
  return module_axiom_defect(g, action, x, y, v).is_zero();
}

OmegaModuleSpec parity_flip(const OmegaModuleSpec& spec) {
  if (!spec.is_super()) {
    throw Error(ErrorCode::not_super, "parity flip of " + spec.to_string());
  }
  OmegaModuleSpec out = spec;
  out.parity_flipped = !spec.parity_flipped;
  return out;
}

OmegaModuleSpec twist(const OmegaModuleSpec& spec, const Automorphism& phi) {
  if (!(phi.algebra().group() == spec.group())) {
    throw Error(ErrorCode::spec_mismatch, "automorphism over " + phi.algebra().group().to_string() +
                                              " applied to " + spec.to_string());
  }
  if (phi.algebra().is_super() != spec.is_super()) {
    throw Error(ErrorCode::kind_mismatch, "automorphism of " + phi.algebra().to_string() +
                                              " applied to " + spec.to_string());
  }
  const auto& basis = spec.group().basis();
  const GaussianRational b_inv = phi.index_scale().inverse();
  std::vector<GaussianRational> values;
  values.reserve(basis.size());
  for (const auto& e : basis) {
    values.push_back(phi.character()(e) * spec.f(GroupElement{b_inv * e.value, e.parity}));
  }
  OmegaModuleSpec out = spec;
  out.f = Character(spec.f.group_ptr(), std::move(values));
  return out;
}

OmegaElement twist_intertwiner(const Automorphism& phi, const OmegaElement& v) {
  const GaussianRational& b = phi.index_scale();
  return {v.one.scaled(b), phi.scaling() * v.xi.scaled(b)};
}

bool twist_intertwines(const OmegaModuleSpec& spec, const Automorphism& phi,
                       const std::vector<BasisSymbol>& ops, const std::vector<OmegaElement>& vectors) {
  const OmegaModuleSpec twisted = twist(spec, phi);
  for (const auto& s : ops) {
    const LieElement image = phi(LieElement(s));
    for (const auto& v : vectors) {
      const OmegaElement lhs = twist_intertwiner(phi, act(twisted, s, v));
      const OmegaElement rhs = act(spec, image, twist_intertwiner(phi, v));
      if (!(lhs == rhs)) {
        return false;
      }
    }
  }
  return true;
}

bool isomorphic(const OmegaModuleSpec& a, const OmegaModuleSpec& b) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorCode::spec_mismatch, a.to_string() + " and " + b.to_string() +
                                              " live on different groups");
  }
  if (!(a.alpha == b.alpha) || a.parity_flipped != b.parity_flipped) {
    return false;
  }
  if (a.f == b.f) {
    return true;
  }
  return a.is_super() && a.f * Character::parity_character(a.f.group_ptr()) == b.f;
}

std::vector<OmegaElement> monomials(const OmegaModuleSpec& spec, long degree) {
  std::vector<OmegaElement> out;
  for (long k = 0; k <= degree; ++k) {
    out.push_back(OmegaElement::of_one(Polynomial::monomial(static_cast<std::size_t>(k))));
    if (spec.is_super()) {
      out.push_back(OmegaElement::of_xi(Polynomial::monomial(static_cast<std::size_t>(k))));
    }
  }
  return out;
}

std::vector<BasisSymbol> window_operators(const IndexGroup& group, const Rational& bound) {
  std::vector<BasisSymbol> out;
  for (const auto& e : group.window(bound)) {
    out.push_back({e.parity == Parity::odd ? SymbolKind::G : SymbolKind::L, e});
  }
  return out;
}

namespace {

void require_zero_alpha(const OmegaModuleSpec& target) {
  if (!target.alpha.is_zero()) {
    throw Error(ErrorCode::bad_target, "embedding target must have alpha = 0, got " +
                                           target.alpha.to_string());
  }
  if (target.parity_flipped) {
    throw Error(ErrorCode::bad_target, "embedding target must not be parity flipped");
  }
}

}  // namespace

OmegaMorphism embed_psi1(const OmegaModuleSpec& target) {
  require_zero_alpha(target);
  OmegaModuleSpec source = target;
  source.alpha = GaussianRational(1);
  OmegaMap map = [](const OmegaElement& v) {
    return OmegaElement{Polynomial::x() * v.one, Polynomial::x() * v.xi};
  };
  return {std::move(source), target, std::move(map), "P -> x*P"};
}

OmegaMorphism embed_psi2(const OmegaModuleSpec& target) {
  if (!target.is_super()) {
    throw Error(ErrorCode::not_super, "psi2 needs a super target, got " + target.to_string());
  }
  require_zero_alpha(target);
  OmegaModuleSpec source = target;
  source.alpha = Rational(1, 2);
  source.parity_flipped = true;
  // The flipped source's odd generator is 1, which lands on xi'; its even
  // generator xi lands on x*1'.
  OmegaMap map = [](const OmegaElement& v) { return OmegaElement{Polynomial::x() * v.xi, v.one}; };
  return {std::move(source), target, std::move(map), "P + xi*(Q) -> x*Q + xi*(P)"};
}

bool intertwines(const OmegaMorphism& psi, const std::vector<BasisSymbol>& ops,
                 const std::vector<OmegaElement>& vectors) {
  for (const auto& s : ops) {
    for (const auto& v : vectors) {
      if (!(psi.map(act(psi.source, s, v)) == act(psi.target, s, psi.map(v)))) {
        return false;
      }
    }
  }
  return true;
}

bool injective_on(const OmegaMorphism& psi, const std::vector<OmegaElement>& vectors) {
  std::vector<OmegaElement> images;
  long degree = 0;
  for (const auto& v : vectors) {
    images.push_back(psi.map(v));
    degree = std::max(degree, images.back().degree());
  }
  const auto width = static_cast<std::size_t>(degree + 1);
  EchelonSpan span(2 * width);
  for (std::size_t k = 0; k < images.size(); ++k) {
    DenseVector d(2 * width);
    for (std::size_t j = 0; j < width; ++j) {
      d[2 * j] = images[k].one.coefficient(j);
      d[2 * j + 1] = images[k].xi.coefficient(j);
    }
    if (!span.insert(d, k)) {
      return false;
    }
  }
  return true;
}

bool cokernel_is_trivial(const OmegaMorphism& psi, const std::vector<BasisSymbol>& ops,
                         const std::vector<OmegaElement>& vectors) {
  for (const auto& s : ops) {
    for (const auto& v : vectors) {
      if (!act(psi.target, s, v).one.coefficient(0).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace wittmod
