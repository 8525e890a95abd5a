#ifndef WITTMOD_SCALAR_HPP
#define WITTMOD_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

namespace wittmod {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator. gmpxx arithmetic canonicalizes results; values built from a
/// raw numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const mpz_class& numerator, const mpz_class& denominator);

/// An element of Q(i). All coefficients in the library live here, so every
/// identity is checked with exact equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws Error(division_by_zero) for zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form, e.g. "3", "-1/2", "i", "1/2-3/4*i". Round-trips
  /// through parse_scalar() bit-exactly.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// x^n for any integer n. Throws Error(division_by_zero) for 0^n, n < 0.
GaussianRational int_pow(const GaussianRational& x, long n);

/// Total order on C used throughout: compare real parts, then imaginary parts.
/// It is compatible with addition (a < b implies a + c < b + c).
std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b);

struct LexLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    return lex_compare(a, b) < 0;
  }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace wittmod

#endif  // WITTMOD_SCALAR_HPP
