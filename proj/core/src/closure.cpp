#include "wittmod/closure.hpp"

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

// Column 2k holds the x^k coefficient of 1, column 2k+1 that of xi, so the
// pivot (highest nonzero column) tracks the degree.
DenseVector to_dense(const OmegaElement& v, std::size_t width) {
  DenseVector d(2 * width);
  for (std::size_t k = 0; k < width; ++k) {
    d[2 * k] = v.one.coefficient(k);
    d[2 * k + 1] = v.xi.coefficient(k);
  }
  return d;
}

OmegaElement from_dense(const DenseVector& d) {
  std::vector<GaussianRational> one;
  std::vector<GaussianRational> xi;
  for (std::size_t k = 0; 2 * k < d.size(); ++k) {
    one.push_back(d[2 * k]);
    xi.push_back(d[2 * k + 1]);
  }
  return {Polynomial(std::move(one)), Polynomial(std::move(xi))};
}

std::size_t degree_of_column(std::size_t col) { return col / 2; }

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::simple_witness: return "SimpleWitness";
    case Verdict::proper_submodule_witness: return "ProperSubmoduleWitness";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

ClosureResult closure(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                      const std::vector<BasisSymbol>& ops, const ClosureBounds& bounds) {
  if (bounds.degree < 0) {
    throw Error(ErrorCode::invalid_argument, "negative degree bound");
  }
  for (const auto& s : ops) {
    if (s.kind == SymbolKind::G && !spec.is_super()) {
      throw Error(ErrorCode::kind_mismatch, s.to_string() + " acting on " + spec.to_string());
    }
    if (s.kind != SymbolKind::C && !spec.group().contains(s.index)) {
      throw Error(ErrorCode::not_in_group, s.to_string() + " is outside " + spec.group().to_string());
    }
  }
  const auto bound = static_cast<std::size_t>(bounds.degree);
  // One extra degree so that images of degree-bound rows fit before truncation.
  const std::size_t width = bound + 2;
  EchelonSpan span(2 * width);
  ClosureResult result;

  for (const auto& seed : seeds) {
    if (seed.degree() > bounds.degree) {
      throw Error(ErrorCode::invalid_argument, "seed " + seed.to_string() +
                                                   " exceeds the degree bound " +
                                                   std::to_string(bounds.degree));
    }
    const std::size_t label = result.trace.size();
    result.trace.push_back({true, {}, {}});
    span.insert(to_dense(seed, width), label);
  }
  if (seeds.empty() || span.rank() == 0) {
    result.stabilized = true;
  }

  while (!result.stabilized && result.rounds < bounds.max_rounds) {
    ++result.rounds;
    std::vector<EchelonSpan::Row> frontier;
    for (const auto& row : span.rows()) {
      if (degree_of_column(row.pivot) <= bound) {
        frontier.push_back(row);
      }
    }
    bool grew = false;
    for (const auto& row : frontier) {
      const OmegaElement v = from_dense(row.vector);
      for (const auto& op : ops) {
        const OmegaElement image = act(spec, op, v);
        if (image.is_zero()) {
          continue;
        }
        const std::size_t label = result.trace.size();
        if (span.insert(to_dense(image, width), label)) {
          result.trace.push_back({false, op, row.origin});
          grew = true;
        }
      }
    }
    result.stabilized = !grew;
  }

  for (auto row = span.rows().rbegin(); row != span.rows().rend(); ++row) {
    if (degree_of_column(row->pivot) <= bound) {
      result.basis.push_back(from_dense(row->vector));
    }
  }
  std::vector<OmegaElement> generators{OmegaElement::of_one(Polynomial(GaussianRational(1)))};
  if (spec.is_super()) {
    generators.push_back(OmegaElement::of_xi(Polynomial(GaussianRational(1))));
  }
  for (const auto& g : generators) {
    if (auto c = span.express(to_dense(g, width))) {
      result.generators_reached.emplace_back(g, std::move(*c));
    }
  }
  return result;
}

ClosureResult closure(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                      const ClosureBounds& bounds) {
  return closure(spec, seeds, window_operators(spec.group(), bounds.window), bounds);
}

OmegaElement replay(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                    const std::vector<TraceEntry>& trace, const Combination& combination) {
  std::vector<OmegaElement> values;
  values.reserve(trace.size());
  std::size_t next_seed = 0;
  for (const auto& entry : trace) {
    if (entry.is_seed) {
      if (next_seed >= seeds.size()) {
        throw Error(ErrorCode::invalid_argument, "trace references more seeds than given");
      }
      values.push_back(seeds[next_seed++]);
      continue;
    }
    OmegaElement source;
    for (const auto& [label, c] : entry.source) {
      if (label >= values.size()) {
        throw Error(ErrorCode::invalid_argument, "trace entry refers to a later entry");
      }
      source += c * values[label];
    }
    values.push_back(act(spec, entry.op, source));
  }
  OmegaElement out;
  for (const auto& [label, c] : combination) {
    if (label >= values.size()) {
      throw Error(ErrorCode::invalid_argument, "combination refers to a missing entry");
    }
    out += c * values[label];
  }
  return out;
}

SimplicityCertificate simplicity_certificate(const OmegaModuleSpec& spec,
                                             const std::vector<OmegaElement>& seeds,
                                             const ClosureBounds& bounds) {
  SimplicityCertificate cert;
  cert.bounds = bounds;
  const auto ops = window_operators(spec.group(), bounds.window);
  const std::size_t wanted = spec.is_super() ? 2 : 1;
  bool any_proper = false;
  bool any_open = seeds.empty();
  for (const auto& seed : seeds) {
    SeedCertificate sc{seed, Verdict::inconclusive, closure(spec, {seed}, ops, bounds)};
    if (sc.closure.generators_reached.size() == wanted) {
      sc.verdict = Verdict::simple_witness;
    } else if (sc.closure.stabilized && bounds.max_rounds > 0) {
      sc.verdict = Verdict::proper_submodule_witness;
      any_proper = true;
    } else {
      any_open = true;
    }
    cert.seeds.push_back(std::move(sc));
  }
  if (any_proper) {
    cert.verdict = Verdict::proper_submodule_witness;
  } else if (any_open) {
    cert.verdict = Verdict::inconclusive;
  } else {
    cert.verdict = Verdict::simple_witness;
  }
  return cert;
}

bool verify_certificate(const OmegaModuleSpec& spec, const SimplicityCertificate& cert) {
  if (cert.verdict != Verdict::simple_witness) {
    return false;
  }
  for (const auto& sc : cert.seeds) {
    if (sc.closure.generators_reached.empty()) {
      return false;
    }
    for (const auto& [g, combination] : sc.closure.generators_reached) {
      if (!(replay(spec, {sc.seed}, sc.closure.trace, combination) == g)) {
        return false;
      }
    }
  }
  return true;
}

bool zero_constant_term(const std::vector<OmegaElement>& basis) {
  for (const auto& v : basis) {
    if (!v.one.coefficient(0).is_zero()) {
      return false;
    }
  }
  return true;
}

bool quotient_is_trivial(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& basis,
                         const std::vector<BasisSymbol>& ops, long degree_bound) {
  const auto width = static_cast<std::size_t>(std::max(degree_bound, 0L) + 1);
  EchelonSpan n(2 * width);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].degree() >= static_cast<long>(width)) {
      throw Error(ErrorCode::invalid_argument, "basis element above the degree bound");
    }
    n.insert(to_dense(basis[k], width), k);
  }
  for (const auto& v : monomials(spec, degree_bound - 1)) {
    for (const auto& op : ops) {
      if (!n.contains(to_dense(act(spec, op, v), width))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace wittmod
