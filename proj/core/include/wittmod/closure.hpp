#ifndef WITTMOD_CLOSURE_HPP
#define WITTMOD_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wittmod/echelon.hpp"
#include "wittmod/omega_module.hpp"

namespace wittmod {

struct ClosureBounds {
  long degree = 8;
  std::size_t max_rounds = 16;
  /// Operators are L_m / G_r with |Re|, |Im| <= window.
  Rational window{2};
};

/// One vector produced during a closure: either the seed itself or op applied
/// to a combination of earlier entries.
struct TraceEntry {
  bool is_seed = false;
  BasisSymbol op;
  Combination source;
};

struct ClosureResult {
  /// Reduced echelon basis of the closure intersected with degree <= bound,
  /// highest degree first.
  std::vector<OmegaElement> basis;
  std::vector<TraceEntry> trace;
  std::size_t rounds = 0;
  bool stabilized = false;
  /// Combination of trace entries equal to each generator reached (1, then xi).
  std::vector<std::pair<OmegaElement, Combination>> generators_reached;
};

/// Span of words in `ops` applied to `seed`, truncated to degree <= bounds.degree.
/// Each round applies every operator to the current basis rows; a round adding
/// nothing means the truncated space is invariant. Throws NotInGroup for an
/// operator outside the group and InvalidArgument when the seed is too large.
ClosureResult closure(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                      const std::vector<BasisSymbol>& ops, const ClosureBounds& bounds);
ClosureResult closure(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                      const ClosureBounds& bounds = {});

/// Recomputes every trace entry from scratch and returns the combination.
OmegaElement replay(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& seeds,
                    const std::vector<TraceEntry>& trace, const Combination& combination);

enum class Verdict { simple_witness, proper_submodule_witness, inconclusive };
std::string_view to_string(Verdict v);

struct SeedCertificate {
  OmegaElement seed;
  Verdict verdict = Verdict::inconclusive;
  ClosureResult closure;
};

struct SimplicityCertificate {
  Verdict verdict = Verdict::inconclusive;
  ClosureBounds bounds;
  std::vector<SeedCertificate> seeds;
};

/// SimpleWitness when every seed reaches the generators, ProperSubmoduleWitness
/// when some seed's closure stabilizes without them, Inconclusive otherwise
/// (including an empty seed list and max_rounds = 0).
SimplicityCertificate simplicity_certificate(const OmegaModuleSpec& spec,
                                             const std::vector<OmegaElement>& seeds,
                                             const ClosureBounds& bounds = {});

/// Replays every generator witness of a SimpleWitness certificate.
bool verify_certificate(const OmegaModuleSpec& spec, const SimplicityCertificate& cert);

/// Every element of the basis has zero constant term in the coefficient of 1.
bool zero_constant_term(const std::vector<OmegaElement>& basis);

/// For the truncated invariant space N with basis `basis`: op * v lies in N
/// for every op and every monomial v of degree < degree_bound, so the quotient
/// by N is acted on trivially.
bool quotient_is_trivial(const OmegaModuleSpec& spec, const std::vector<OmegaElement>& basis,
                         const std::vector<BasisSymbol>& ops, long degree_bound);

}  // namespace wittmod

#endif  // WITTMOD_CLOSURE_HPP
