#include "wittmod/weight_module.hpp"

#include <deque>
#include <set>

#include "format.hpp"
#include "wittmod/echelon.hpp"
#include "wittmod/error.hpp"

namespace wittmod {

std::string WeightKey::to_string() const {
  return (parity == Parity::odd ? "w[" : "v[") + weight.to_string() + "]";
}

bool WeightKeyLess::operator()(const WeightKey& a, const WeightKey& b) const {
  const auto c = lex_compare(a.weight, b.weight);
  if (c != 0) {
    return c < 0;
  }
  return a.parity < b.parity;
}

WeightVector::WeightVector(const WeightKey& key, GaussianRational c) {
  add_term(key, c);
}

GaussianRational WeightVector::coefficient(const WeightKey& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void WeightVector::add_term(const WeightKey& key, const GaussianRational& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (const auto& [k, c] : o.terms_) {
    add_term(k, c);
  }
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (const auto& [k, c] : o.terms_) {
    add_term(k, -c);
  }
  return *this;
}

WeightVector& WeightVector::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) {
    x *= c;
  }
  return *this;
}

std::string WeightVector::to_string() const {
  std::string out;
  for (const auto& [k, c] : terms_) {
    detail::append_term(out, c, k.to_string());
  }
  return out.empty() ? "0" : out;
}

std::string IntermediateSpec::to_string() const {
  return std::string(is_super() ? "sV" : "V") + "(" + a.to_string() + ") over " + group->to_string();
}

namespace {

void check_symbol(const IndexGroup& group, bool super_mode, const BasisSymbol& s,
                  const std::string& where) {
  if (s.kind == SymbolKind::G && !super_mode) {
    throw Error(ErrorCode::kind_mismatch, s.to_string() + " acting on " + where);
  }
  if (s.kind != SymbolKind::C && !group.contains(s.index)) {
    throw Error(ErrorCode::not_in_group, s.to_string() + " is outside " + group.to_string());
  }
}

const GaussianRational kHalf{Rational(1, 2)};

}  // namespace

WeightVector act_intermediate(const IntermediateSpec& spec, const BasisSymbol& s, const WeightVector& v) {
  check_symbol(*spec.group, spec.is_super(), s, spec.to_string());
  WeightVector out;
  if (s.kind == SymbolKind::C) {
    return out;
  }
  const GaussianRational& m = s.index.value;
  for (const auto& [key, c] : v.terms()) {
    const GaussianRational& k = key.weight;
    if (s.kind == SymbolKind::L) {
      const GaussianRational coef =
          key.parity == Parity::even ? k - spec.a * m : k - (spec.a - kHalf) * m;
      out.add_term({k - m, key.parity}, c * coef);
    } else if (key.parity == Parity::even) {
      out.add_term({k - m, Parity::odd}, c);
    } else {
      out.add_term({k - m, Parity::even}, c * (k - GaussianRational(2) * m * (spec.a - kHalf)));
    }
  }
  return out;
}

WeightVector act_intermediate(const IntermediateSpec& spec, const LieElement& x, const WeightVector& v) {
  WeightVector out;
  for (const auto& [s, c] : x.terms()) {
    out += c * act_intermediate(spec, s, v);
  }
  return out;
}

WeightKey weighted_key(const OmegaModuleSpec& spec, const GaussianRational& c, Part part) {
  const Parity p = spec.one_parity();
  return {c, part == Part::one ? p : p + Parity::odd};
}

WeightVector weighting_act(const OmegaModuleSpec& spec, const LieElement& x,
                           const GaussianRational& c, Part part) {
  if (part == Part::xi && !spec.is_super()) {
    throw Error(ErrorCode::kind_mismatch, "no xi part in " + spec.to_string());
  }
  const auto parity = x.parity();
  if (!x.is_zero() && !parity) {
    throw Error(ErrorCode::not_homogeneous, x.to_string() + " mixes parities");
  }
  std::optional<GaussianRational> shift;
  for (const auto& [s, coef] : x.terms()) {
    const GaussianRational m = s.kind == SymbolKind::C ? GaussianRational(0) : s.index.value;
    if (shift && !(*shift == m)) {
      throw Error(ErrorCode::not_homogeneous, x.to_string() + " has no single ad-weight");
    }
    shift = m;
  }
  const GaussianRational target = c - shift.value_or(GaussianRational(0));
  const OmegaElement generator = part == Part::one ? OmegaElement::of_one(GaussianRational(1))
                                                   : OmegaElement::of_xi(GaussianRational(1));
  const OmegaElement image = act(spec, x, generator);
  WeightVector out;
  out.add_term(weighted_key(spec, target, Part::one), image.one.evaluate(target));
  out.add_term(weighted_key(spec, target, Part::xi), image.xi.evaluate(target));
  return out;
}

WeightVector weighted_act(const OmegaModuleSpec& spec, const LieElement& x, const WeightVector& v) {
  WeightVector out;
  for (const auto& [key, c] : v.terms()) {
    const Part part = key.parity == spec.one_parity() ? Part::one : Part::xi;
    out += c * weighting_act(spec, x, key.weight, part);
  }
  return out;
}

bool weighting_matches_intermediate(const OmegaModuleSpec& spec, const Character& f_ext,
                                    const std::vector<GaussianRational>& weights,
                                    const std::vector<BasisSymbol>& ops) {
  if (spec.parity_flipped) {
    throw Error(ErrorCode::spec_mismatch, "weighting comparison expects an unflipped module");
  }
  if (f_ext.group().is_super() != spec.is_super()) {
    throw Error(ErrorCode::kind_mismatch, "extension and module disagree on super mode");
  }
  if (!restriction_agrees(f_ext, spec.f)) {
    return false;
  }
  const IntermediateSpec target{GaussianRational(1) - spec.alpha, spec.f.group_ptr()};
  std::vector<Part> parts{Part::one};
  if (spec.is_super()) {
    parts.push_back(Part::xi);
  }
  // y_key = f_ext(-key) * v_key, with the parity of the key.
  const auto scale = [&f_ext](const WeightKey& key) { return f_ext(GroupElement{-key.weight, key.parity}); };
  for (const auto& c : weights) {
    for (const Part part : parts) {
      const WeightKey source = weighted_key(spec, c, part);
      for (const auto& op : ops) {
        const WeightVector computed = weighting_act(spec, LieElement(op), c, part);
        WeightVector rescaled;
        for (const auto& [key, coef] : computed.terms()) {
          rescaled.add_term(key, scale(source) * coef / scale(key));
        }
        if (!(rescaled == act_intermediate(target, op, WeightVector(source)))) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::vector<WeightKey> reach(const IntermediateSpec& spec, const std::vector<WeightKey>& seeds,
                             const std::vector<BasisSymbol>& ops,
                             const std::function<bool(const WeightKey&)>& keep, std::size_t rounds) {
  std::set<WeightKey, WeightKeyLess> seen;
  std::deque<std::pair<WeightKey, std::size_t>> queue;
  for (const auto& s : seeds) {
    if (keep(s) && seen.insert(s).second) {
      queue.emplace_back(s, 0);
    }
  }
  while (!queue.empty()) {
    const auto [key, depth] = queue.front();
    queue.pop_front();
    if (depth >= rounds) {
      continue;
    }
    for (const auto& op : ops) {
      const WeightVector image = act_intermediate(spec, op, WeightVector(key));
      for (const auto& [next, c] : image.terms()) {
        if (keep(next) && seen.insert(next).second) {
          queue.emplace_back(next, depth + 1);
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_box(const GaussianRational& z, const Rational& box) {
  return abs(z.real()) <= box && abs(z.imag()) <= box;
}

}  // namespace

SubmoduleReport submodule_analysis(const IntermediateSpec& spec, const std::vector<WeightKey>& seeds,
                                   const std::vector<BasisSymbol>& ops, const Rational& box) {
  for (const auto& op : ops) {
    check_symbol(*spec.group, spec.is_super(), op, spec.to_string());
  }
  for (const auto& s : seeds) {
    if (s.parity == Parity::odd && !spec.is_super()) {
      throw Error(ErrorCode::kind_mismatch, s.to_string() + " in " + spec.to_string());
    }
  }
  SubmoduleReport report;
  const auto keep = [&box](const WeightKey& k) { return in_box(k.weight, box); };
  report.closure = reach(spec, seeds, ops, keep, static_cast<std::size_t>(-1));

  std::set<WeightKey, WeightKeyLess> region;
  for (const auto& s : seeds) {
    const Rational reach_bound = box + std::max(abs(s.weight.real()), abs(s.weight.imag()));
    for (const auto& g : spec.group->window(reach_bound)) {
      const WeightKey k{s.weight + g.value, s.parity + g.parity};
      if (keep(k)) {
        region.insert(k);
      }
    }
  }
  report.region.assign(region.begin(), region.end());

  const std::set<WeightKey, WeightKeyLess> got(report.closure.begin(), report.closure.end());
  const WeightKey v0{GaussianRational(0), Parity::even};
  const WeightKey w0{GaussianRational(0), Parity::odd};
  std::set<WeightKey, WeightKeyLess> without_v0 = region;
  without_v0.erase(v0);
  if (got.empty()) {
    report.classification = "zero";
  } else if (got == region) {
    report.classification = "full";
  } else if (got == std::set<WeightKey, WeightKeyLess>{v0}) {
    report.classification = "C v0";
  } else if (got == std::set<WeightKey, WeightKeyLess>{w0}) {
    report.classification = "C w0";
  } else if (region.count(v0) != 0 && got == without_v0) {
    report.classification = "all but v0";
  } else {
    report.classification = "other";
  }
  return report;
}

bool orbit_lattice_check(const IntermediateSpec& spec, const GaussianRational& k,
                         const std::vector<BasisSymbol>& ops, std::size_t rounds) {
  for (const auto& op : ops) {
    check_symbol(*spec.group, spec.is_super(), op, spec.to_string());
  }
  const WeightKey start{k, Parity::even};
  const auto reached = reach(spec, {start}, ops, [](const WeightKey&) { return true; }, rounds);
  for (const auto& key : reached) {
    if (!spec.group->contains(key.weight - k, key.parity)) {
      return false;
    }
  }
  return true;
}

WeightVector WeightedMorphism::operator()(const WeightVector& v) const {
  WeightVector out;
  for (const auto& [key, c] : v.terms()) {
    const auto [coef, target] = rule(key);
    out.add_term(target, c * coef);
  }
  return out;
}

WeightVector WeightedMorphism::derived(const WeightVector& v) const {
  WeightVector out;
  for (const auto& [key, c] : v.terms()) {
    const Part part = key.parity == omega.source.one_parity() ? Part::one : Part::xi;
    const OmegaElement generator = part == Part::one ? OmegaElement::of_one(GaussianRational(1))
                                                     : OmegaElement::of_xi(GaussianRational(1));
    const OmegaElement image = omega.map(generator);
    out.add_term(weighted_key(omega.target, key.weight, Part::one), c * image.one.evaluate(key.weight));
    out.add_term(weighted_key(omega.target, key.weight, Part::xi), c * image.xi.evaluate(key.weight));
  }
  return out;
}

namespace {

std::vector<WeightKey> keys_at(const OmegaModuleSpec& spec, const GaussianRational& c) {
  std::vector<WeightKey> out{weighted_key(spec, c, Part::one)};
  if (spec.is_super()) {
    out.push_back(weighted_key(spec, c, Part::xi));
  }
  return out;
}

std::size_t rank_at(const WeightedMorphism& psi, const GaussianRational& c) {
  const auto targets = keys_at(psi.omega.target, c);
  EchelonSpan span(targets.size());
  std::size_t label = 0;
  for (const auto& key : keys_at(psi.omega.source, c)) {
    const WeightVector image = psi(WeightVector(key));
    DenseVector d;
    for (const auto& t : targets) {
      d.push_back(image.coefficient(t));
    }
    span.insert(d, label++);
  }
  return span.rank();
}

}  // namespace

std::size_t WeightedMorphism::kernel_dimension(const GaussianRational& c) const {
  return keys_at(omega.source, c).size() - rank_at(*this, c);
}

std::size_t WeightedMorphism::image_dimension(const GaussianRational& c) const {
  return rank_at(*this, c);
}

std::size_t WeightedMorphism::cokernel_dimension(const GaussianRational& c) const {
  return keys_at(omega.target, c).size() - rank_at(*this, c);
}

WeightedMorphism weighted_psi1(const OmegaModuleSpec& target) {
  WeightedMorphism out{embed_psi1(target), {}};
  out.rule = [](const WeightKey& k) { return std::make_pair(k.weight, k); };
  return out;
}

WeightedMorphism weighted_psi2(const OmegaModuleSpec& target) {
  WeightedMorphism out{embed_psi2(target), {}};
  out.rule = [](const WeightKey& k) {
    return std::make_pair(k.parity == Parity::even ? k.weight : GaussianRational(1), k);
  };
  return out;
}

bool weighted_intertwines(const WeightedMorphism& psi, const std::vector<GaussianRational>& weights,
                          const std::vector<BasisSymbol>& ops) {
  for (const auto& c : weights) {
    for (const auto& key : keys_at(psi.omega.source, c)) {
      const WeightVector v(key);
      if (!(psi(v) == psi.derived(v))) {
        return false;
      }
      for (const auto& op : ops) {
        const LieElement x(op);
        if (!(psi(weighted_act(psi.omega.source, x, v)) == weighted_act(psi.omega.target, x, psi(v)))) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace wittmod
