#include "wittmod/polynomial.hpp"

#include "format.hpp"

namespace wittmod {

Polynomial::Polynomial(std::vector<GaussianRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(const GaussianRational& c) {
  if (!c.is_zero()) {
    coeffs_.push_back(c);
  }
}

Polynomial Polynomial::monomial(std::size_t degree, const GaussianRational& c) {
  std::vector<GaussianRational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

GaussianRational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0);
}

GaussianRational Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? GaussianRational(0) : coeffs_.back();
}

GaussianRational Polynomial::evaluate(const GaussianRational& at) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(const GaussianRational& c) const {
  if (c.is_zero() || coeffs_.size() < 2) {
    return *this;
  }
  // Horner in the ring: P(x + c) = (((a_n)(x + c) + a_{n-1})(x + c) + ...)
  std::vector<GaussianRational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.emplace_back();
    for (std::size_t k = acc.size() - 1; k > 0; --k) {
      acc[k] = acc[k - 1] + c * acc[k];
    }
    acc[0] = c * acc[0] + *it;
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::scaled(const GaussianRational& s) const {
  std::vector<GaussianRational> v = coeffs_;
  GaussianRational power(1);
  for (auto& a : v) {
    a *= power;
    power *= s;
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size());
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[k] += o.coeffs_[k];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(o.coeffs_.size());
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[k] -= o.coeffs_[k];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) {
    a *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  return r *= GaussianRational(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) {
      continue;
    }
    std::string atom;
    if (k == 1) {
      atom = "x";
    } else if (k > 1) {
      atom = "x^" + std::to_string(k);
    }
    detail::append_term(out, coeffs_[k], atom);
  }
  return out.empty() ? "0" : out;
}

}  // namespace wittmod
