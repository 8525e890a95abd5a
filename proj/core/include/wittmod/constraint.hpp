#ifndef WITTMOD_CONSTRAINT_HPP
#define WITTMOD_CONSTRAINT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wittmod/index_group.hpp"
#include "wittmod/polynomial.hpp"

namespace wittmod {

/// q_m(x) = L_m . 1 for a module that is free of rank one over C[L_0].
using ActionTable = std::map<GaussianRational, Polynomial, LexLess>;

/// q_m(x) q_n(x+m) - q_n(x) q_m(x+n) - (m-n) q_{m+n}(x) - delta_{m+n,0} (m^3-m)/12 K.
/// Zero exactly when [L_m, L_n] = (m-n) L_{m+n} + delta (m^3-m)/12 C holds on 1
/// with C acting as K. Throws InvalidArgument when q_m, q_n or q_{m+n} is missing.
Polynomial constraint_residual(const ActionTable& q, const GaussianRational& m,
                               const GaussianRational& n, const GaussianRational& K);

/// The table q_m = f(m)(x + m alpha) over the given indices.
ActionTable omega_action_table(const Character& f, const GaussianRational& alpha,
                               const std::vector<GaussianRational>& indices);

/// Residual is zero on every sampled pair for q_m = f(m)(x + m alpha).
/// Throws NotInGroup for pairs outside the group.
bool virasoro_constraint_check(const Character& f, const GaussianRational& alpha,
                               const GaussianRational& K,
                               const std::vector<std::pair<GaussianRational, GaussianRational>>& pairs);

struct ModuleParameters {
  std::map<GaussianRational, GaussianRational, LexLess> lambda;
  GaussianRational alpha;
  GaussianRational K;
};

struct Inconsistency {
  /// "q0", "multiplicativity", "alpha relation", "central term" or "alpha constancy".
  std::string relation;
  GaussianRational m;
  GaussianRational n;
  std::string detail;
};

using Recovery = std::variant<ModuleParameters, Inconsistency>;

/// Reads q_m = lambda_m (x + m alpha_m) and tests, in order: q_0 = x,
/// lambda_{m+n} = lambda_m lambda_n, m^2 alpha_m - n^2 alpha_n = (m^2-n^2) alpha_{m+n},
/// the central constant from the pairs (m, -m), and constancy of alpha_m.
/// Throws ShapeViolation when some q_m is not of degree one.
Recovery recover_module_parameters(const ActionTable& q);

}  // namespace wittmod

#endif  // WITTMOD_CONSTRAINT_HPP
