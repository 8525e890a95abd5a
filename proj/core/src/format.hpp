#ifndef WITTMOD_SRC_FORMAT_HPP
#define WITTMOD_SRC_FORMAT_HPP

#include <string>

#include "wittmod/scalar.hpp"

namespace wittmod::detail {

// Appends "c*atom" to out using " + " / " - " separators. An empty atom
// denotes a bare scalar term.
inline void append_term(std::string& out, const GaussianRational& c, const std::string& atom) {
  std::string coef = c.to_string();
  bool negative = false;
  if (!coef.empty() && coef.front() == '-' && (c.is_real() || sgn(c.real()) == 0)) {
    negative = true;
    coef.erase(0, 1);
  }
  const bool compound = sgn(c.real()) != 0 && sgn(c.imag()) != 0;
  if (compound) {
    coef = "(" + coef + ")";
  }
  std::string body;
  if (atom.empty()) {
    body = coef;
  } else if (coef == "1") {
    body = atom;
  } else {
    body = coef + "*" + atom;
  }
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace wittmod::detail

#endif  // WITTMOD_SRC_FORMAT_HPP
