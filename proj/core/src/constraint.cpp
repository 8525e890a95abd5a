#include "wittmod/constraint.hpp"

#include "wittmod/error.hpp"

namespace wittmod {
namespace {

const Polynomial& lookup(const ActionTable& q, const GaussianRational& m) {
  const auto it = q.find(m);
  if (it == q.end()) {
    throw Error(ErrorCode::invalid_argument, "no q_m for m = " + m.to_string());
  }
  return it->second;
}

Inconsistency inconsistent(std::string relation, const GaussianRational& m,
                           const GaussianRational& n, std::string detail) {
  return {std::move(relation), m, n, std::move(detail)};
}

}  // namespace

Polynomial constraint_residual(const ActionTable& q, const GaussianRational& m,
                               const GaussianRational& n, const GaussianRational& K) {
  const Polynomial& qm = lookup(q, m);
  const Polynomial& qn = lookup(q, n);
  const Polynomial& qmn = lookup(q, m + n);
  Polynomial r = qm * qn.shifted(m) - qn * qm.shifted(n) - (m - n) * qmn;
  if ((m + n).is_zero()) {
    r -= Polynomial((m * m * m - m) * K / GaussianRational(12));
  }
  return r;
}

ActionTable omega_action_table(const Character& f, const GaussianRational& alpha,
                               const std::vector<GaussianRational>& indices) {
  ActionTable q;
  for (const auto& m : indices) {
    q.emplace(m, f(m) * Polynomial::linear(m * alpha));
  }
  return q;
}

bool virasoro_constraint_check(const Character& f, const GaussianRational& alpha,
                               const GaussianRational& K,
                               const std::vector<std::pair<GaussianRational, GaussianRational>>& pairs) {
  for (const auto& [m, n] : pairs) {
    const ActionTable q = omega_action_table(f, alpha, {m, n, m + n});
    if (!constraint_residual(q, m, n, K).is_zero()) {
      return false;
    }
  }
  return true;
}

Recovery recover_module_parameters(const ActionTable& q) {
  ModuleParameters out;
  std::map<GaussianRational, GaussianRational, LexLess> alpha;
  for (const auto& [m, p] : q) {
    if (p.degree() != 1) {
      throw Error(ErrorCode::shape_violation,
                  "q_" + m.to_string() + " = " + p.to_string() + " is not of degree one");
    }
    const GaussianRational lambda = p.leading_coefficient();
    out.lambda.emplace(m, lambda);
    if (m.is_zero()) {
      if (!(p == Polynomial::x())) {
        return inconsistent("q0", m, m, "q_0 = " + p.to_string() + " instead of x");
      }
    } else {
      alpha.emplace(m, p.coefficient(0) / (m * lambda));
    }
  }

  for (const auto& [m, lm] : out.lambda) {
    for (const auto& [n, ln] : out.lambda) {
      if (m == n) {
        continue;
      }
      const auto it = out.lambda.find(m + n);
      if (it != out.lambda.end() && !(it->second == lm * ln)) {
        return inconsistent("multiplicativity", m, n,
                            "lambda_" + (m + n).to_string() + " = " + it->second.to_string() +
                                " but lambda_m lambda_n = " + (lm * ln).to_string());
      }
    }
  }

  for (const auto& [m, am] : alpha) {
    for (const auto& [n, an] : alpha) {
      if (m == n || (m + n).is_zero()) {
        continue;
      }
      const auto it = alpha.find(m + n);
      if (it == alpha.end()) {
        continue;
      }
      const GaussianRational lhs = m * m * am - n * n * an;
      const GaussianRational rhs = (m * m - n * n) * it->second;
      if (!(lhs == rhs)) {
        return inconsistent("alpha relation", m, n,
                            lhs.to_string() + " != " + rhs.to_string());
      }
    }
  }

  std::optional<GaussianRational> K;
  for (const auto& [m, am] : alpha) {
    const auto it = alpha.find(-m);
    if (it == alpha.end() || lex_compare(m, GaussianRational(0)) < 0) {
      continue;
    }
    const GaussianRational cubic = m * m * m - m;
    const GaussianRational gap = m * m * (am - it->second);
    if (cubic.is_zero()) {
      if (!gap.is_zero()) {
        return inconsistent("central term", m, -m,
                            "alpha_m != alpha_-m where the cocycle vanishes");
      }
      continue;
    }
    const GaussianRational k = GaussianRational(12) * gap / cubic;
    if (K && !(*K == k)) {
      return inconsistent("central term", m, -m,
                          "K = " + k.to_string() + " but earlier pairs gave " + K->to_string());
    }
    K = k;
  }
  out.K = K.value_or(GaussianRational(0));

  if (!alpha.empty()) {
    out.alpha = alpha.begin()->second;
    for (const auto& [m, am] : alpha) {
      if (!(am == out.alpha)) {
        return inconsistent("alpha constancy", alpha.begin()->first, m,
                            "alpha_m = " + am.to_string() + " differs from " + out.alpha.to_string());
      }
    }
  }
  return out;
}

}  // namespace wittmod
