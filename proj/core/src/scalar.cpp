#include "wittmod/scalar.hpp"

#include <ostream>

#include "wittmod/error.hpp"

namespace wittmod {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::group_missing_one: return "GroupMissingOne";
    case ErrorCode::parity_inconsistent: return "ParityInconsistent";
    case ErrorCode::not_in_group: return "NotInGroup";
    case ErrorCode::not_super: return "NotSuper";
    case ErrorCode::not_subgroup: return "NotSubgroup";
    case ErrorCode::invalid_character: return "InvalidCharacter";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::invalid_scaling: return "InvalidScaling";
    case ErrorCode::empty_support: return "EmptySupport";
    case ErrorCode::not_homogeneous: return "NotHomogeneous";
    case ErrorCode::bad_target: return "BadTarget";
    case ErrorCode::shape_violation: return "ShapeViolation";
    case ErrorCode::spec_mismatch: return "SpecMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (sgn(denominator) == 0) {
    throw Error(ErrorCode::division_by_zero, "zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool GaussianRational::is_integer() const {
  return sgn(im_) == 0 && re_.get_den() == 1;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::division_by_zero, "inverse of 0");
  }
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw Error(ErrorCode::division_by_zero, to_string() + " / 0");
  }
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) {
    return re_.get_str();
  }
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "*i";
  }
  if (sgn(re_) == 0) {
    return imag;
  }
  if (imag.front() == '-') {
    return re_.get_str() + imag;
  }
  return re_.get_str() + "+" + imag;
}

GaussianRational int_pow(const GaussianRational& x, long n) {
  if (n < 0) {
    if (x.is_zero()) {
      throw Error(ErrorCode::division_by_zero, "0 raised to a negative power");
    }
    return int_pow(x.inverse(), -n);
  }
  GaussianRational result(1);
  GaussianRational base = x;
  auto e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) {
      result *= base;
    }
    e >>= 1;
    if (e != 0) {
      base *= base;
    }
  }
  return result;
}

std::strong_ordering lex_compare(const GaussianRational& a, const GaussianRational& b) {
  const int c = cmp(a.real(), b.real());
  if (c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int d = cmp(a.imag(), b.imag());
  if (d != 0) {
    return d < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << x.to_string();
}

}  // namespace wittmod
