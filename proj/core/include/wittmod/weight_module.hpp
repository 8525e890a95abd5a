#ifndef WITTMOD_WEIGHT_MODULE_HPP
#define WITTMOD_WEIGHT_MODULE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wittmod/index_group.hpp"
#include "wittmod/lie_algebra.hpp"
#include "wittmod/omega_module.hpp"

namespace wittmod {

/// v_c (even) or w_c (odd).
struct WeightKey {
  GaussianRational weight;
  Parity parity = Parity::even;
  friend bool operator==(const WeightKey&, const WeightKey&) = default;
  std::string to_string() const;
};

/// By weight in the lexicographic order, then even before odd.
struct WeightKeyLess {
  bool operator()(const WeightKey& a, const WeightKey& b) const;
};

/// Finitely supported vector of a weight module.
class WeightVector {
 public:
  using Terms = std::map<WeightKey, GaussianRational, WeightKeyLess>;

  WeightVector() = default;
  WeightVector(const WeightKey& key, GaussianRational c = GaussianRational(1));
  static WeightVector v(const GaussianRational& k) { return WeightVector({k, Parity::even}); }
  static WeightVector w(const GaussianRational& k) { return WeightVector({k, Parity::odd}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const WeightKey& key) const;
  void add_term(const WeightKey& key, const GaussianRational& c);

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector& operator*=(const GaussianRational& c);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const GaussianRational& c, WeightVector a) { return a *= c; }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  /// "2*v[5] + w[1/2]"; "0" for the zero vector.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// V(a) (or sV(a) when the group is super), acted on by the algebra indexed by
/// `group`:
///   L_m v_k = (k - a m) v_{k-m},         L_m w_j = (j - (a - 1/2) m) w_{j-m},
///   G_r v_k = w_{k-r},                   G_r w_j = (j - 2r(a - 1/2)) v_{j-r}.
struct IntermediateSpec {
  GaussianRational a;
  GroupPtr group;

  bool is_super() const { return group->is_super(); }
  std::string to_string() const;
};

/// Throws NotInGroup / KindMismatch like the Omega action.
WeightVector act_intermediate(const IntermediateSpec& spec, const LieElement& x, const WeightVector& v);
WeightVector act_intermediate(const IntermediateSpec& spec, const BasisSymbol& s, const WeightVector& v);

enum class Part { one, xi };

/// Weight-space key of the class of 1 or xi at weight c, following the parity
/// flip of the spec.
WeightKey weighted_key(const OmegaModuleSpec& spec, const GaussianRational& c, Part part);

/// x acting on the class of the generator `part` at weight c in W(spec): the
/// polynomial parts of x.part are evaluated at c' = c - m, where m is the index
/// of x. Throws NotHomogeneous when x mixes indices or parities.
WeightVector weighting_act(const OmegaModuleSpec& spec, const LieElement& x,
                           const GaussianRational& c, Part part);
/// Linear extension of weighting_act to arbitrary weight vectors of W(spec).
WeightVector weighted_act(const OmegaModuleSpec& spec, const LieElement& x, const WeightVector& v);

/// After rescaling y_c = f_ext(-c) v_c (and f_ext(-c, odd) w_c), the weighting
/// action of every op on every sampled weight equals the V(1 - alpha) action.
/// Throws NotSubgroup / NotInGroup from the restriction and evaluation of f_ext.
bool weighting_matches_intermediate(const OmegaModuleSpec& spec, const Character& f_ext,
                                    const std::vector<GaussianRational>& weights,
                                    const std::vector<BasisSymbol>& ops);

/// Closure of basis vectors under op words, restricted to |Re|, |Im| <= box.
struct SubmoduleReport {
  std::vector<WeightKey> closure;
  /// Seed cosets inside the box: everything the closure could reach.
  std::vector<WeightKey> region;
  /// "full", "C v0", "C w0", "all but v0", "zero" or "other".
  std::string classification;
};

/// Breadth first over basis vectors: the action sends basis vectors to
/// multiples of basis vectors, so the closure is spanned by the keys reached.
SubmoduleReport submodule_analysis(const IntermediateSpec& spec, const std::vector<WeightKey>& seeds,
                                   const std::vector<BasisSymbol>& ops, const Rational& box);

/// Closure of v_k (bounded by `rounds` applications) stays in k + group.
bool orbit_lattice_check(const IntermediateSpec& spec, const GaussianRational& k,
                         const std::vector<BasisSymbol>& ops, std::size_t rounds);

/// W applied to an Omega morphism: the class of a generator at weight c goes to
/// the class of its image, evaluated at c.
struct WeightedMorphism {
  OmegaMorphism omega;
  /// Rule written down independently: (source key) -> coefficient and target key.
  std::function<std::pair<GaussianRational, WeightKey>(const WeightKey&)> rule;

  WeightVector operator()(const WeightVector& v) const;
  /// Image computed from the Omega map instead of the rule.
  WeightVector derived(const WeightVector& v) const;

  std::size_t kernel_dimension(const GaussianRational& c) const;
  std::size_t image_dimension(const GaussianRational& c) const;
  std::size_t cokernel_dimension(const GaussianRational& c) const;
};

/// W(psi1): v_c -> c v'_c.
WeightedMorphism weighted_psi1(const OmegaModuleSpec& target);
/// W(psi2) from W(Pi(sOmega(f, 1/2))): v_c -> c v'_c and w_c -> w'_c. In the
/// flipped source v_c is the class of xi and w_c the class of 1.
WeightedMorphism weighted_psi2(const OmegaModuleSpec& target);

/// W(psi) commutes with the weighting actions on every sampled weight and op,
/// and the rule agrees with the image derived from psi.
bool weighted_intertwines(const WeightedMorphism& psi, const std::vector<GaussianRational>& weights,
                          const std::vector<BasisSymbol>& ops);

}  // namespace wittmod

#endif  // WITTMOD_WEIGHT_MODULE_HPP
