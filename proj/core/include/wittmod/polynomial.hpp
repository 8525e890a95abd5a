#ifndef WITTMOD_POLYNOMIAL_HPP
#define WITTMOD_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "wittmod/scalar.hpp"

namespace wittmod {

/// Univariate polynomial over Q(i) in the variable x (standing for L_0).
/// Coefficients are stored lowest degree first with trailing zeros trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coefficients);
  Polynomial(std::initializer_list<GaussianRational> coefficients)
      : Polynomial(std::vector<GaussianRational>(coefficients)) {}
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(const GaussianRational& c);  // NOLINT(google-explicit-constructor)

  static Polynomial x() { return monomial(1); }
  static Polynomial monomial(std::size_t degree, const GaussianRational& c = GaussianRational(1));
  /// x + c
  static Polynomial linear(const GaussianRational& c) { return Polynomial({c, GaussianRational(1)}); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  GaussianRational coefficient(std::size_t k) const;
  GaussianRational leading_coefficient() const;

  GaussianRational evaluate(const GaussianRational& at) const;
  /// P(x + c)
  Polynomial shifted(const GaussianRational& c) const;
  /// P(s x)
  Polynomial scaled(const GaussianRational& s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "1 + 3*x^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

}  // namespace wittmod

#endif  // WITTMOD_POLYNOMIAL_HPP
