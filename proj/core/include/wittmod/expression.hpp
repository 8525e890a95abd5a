#ifndef WITTMOD_EXPRESSION_HPP
#define WITTMOD_EXPRESSION_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wittmod/index_group.hpp"
#include "wittmod/lie_algebra.hpp"
#include "wittmod/omega_module.hpp"
#include "wittmod/polynomial.hpp"
#include "wittmod/scalar.hpp"
#include "wittmod/weight_module.hpp"

namespace wittmod {

// Parsers for the textual forms printed by the to_string() members. All of
// them throw Error(parse_error) with the offending position.

GaussianRational parse_scalar(std::string_view text);
/// Comma separated scalars, e.g. "0, 1/2, -i".
std::vector<GaussianRational> parse_scalar_list(std::string_view text);
/// "3", "1/2 odd", "i even".
GroupElement parse_group_element(std::string_view text);
/// "3*L[1] + (1/2+i)*G[1/2] - C".
LieElement parse_lie_element(std::string_view text);
/// "1 + 3*x^2".
Polynomial parse_polynomial(std::string_view text);
/// "x^2 + xi*(1 + x)".
OmegaElement parse_omega_element(std::string_view text);
/// "2*v[5] + w[1/2]".
WeightVector parse_weight_vector(std::string_view text);

/// Group from generator strings; super mode when any generator is odd or
/// `force_super` is set.
GroupPtr parse_group(const std::vector<std::string>& generators, bool force_super = false);

using ModuleSpec = std::variant<OmegaModuleSpec, IntermediateSpec>;

/// "kind=omega; group=1, 1/2 odd; f=2, -1; alpha=1/2; flip=1" or
/// "kind=intermediate; group=1; a=1/3". Keys other than kind are optional:
/// group defaults to Z, f to the trivial character (values on the canonical
/// basis), alpha / a to 0, flip to 0.
ModuleSpec parse_module(std::string_view text);

}  // namespace wittmod

#endif  // WITTMOD_EXPRESSION_HPP
