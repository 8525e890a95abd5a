#ifndef WITTMOD_TESTS_SUPPORT_HPP
#define WITTMOD_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "wittmod/expression.hpp"
#include "wittmod/index_group.hpp"
#include "wittmod/scalar.hpp"

namespace testing_support {

using wittmod::GaussianRational;
using wittmod::GroupElement;
using wittmod::GroupPtr;
using wittmod::Parity;

inline GaussianRational q(const char* text) { return wittmod::parse_scalar(text); }
inline GaussianRational q(long n, long d) { return GaussianRational(wittmod::make_rational(n, d)); }
inline GaussianRational I() { return GaussianRational::i(); }

inline GroupPtr group(std::initializer_list<const char*> gens) {
  std::vector<std::string> g(gens.begin(), gens.end());
  return wittmod::parse_group(g);
}

inline GroupPtr Z() { return group({"1"}); }
inline GroupPtr Zi() { return group({"1", "i"}); }
inline GroupPtr NS() { return group({"1", "1/2 odd"}); }
inline GroupPtr Ramond() { return group({"1", "0 odd"}); }
inline GroupPtr ZiRamond() { return group({"1", "i", "0 odd"}); }

// Small seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(unsigned long seed) : rng_(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<unsigned long>(hi - lo + 1)); }
  bool coin() { return rng_() % 2 == 0; }

  GaussianRational rational(long span = 9) {
    long den = integer(1, span);
    return GaussianRational(wittmod::make_rational(integer(-span, span), den));
  }
  GaussianRational gaussian(long span = 9) {
    return {rational(span).real(), coin() ? rational(span).real() : wittmod::Rational(0)};
  }
  GaussianRational nonzero(long span = 9) {
    GaussianRational x;
    while (x.is_zero()) {
      x = gaussian(span);
    }
    return x;
  }
  // Random integer combination of the canonical basis.
  GroupElement member(const wittmod::IndexGroup& g, long span = 4) {
    GroupElement e{GaussianRational(0), Parity::even};
    for (const auto& b : g.basis()) {
      const long c = integer(-span, span);
      for (long k = 0; k < std::abs(c); ++k) {
        e = c > 0 ? e + b : e - b;
      }
    }
    return e;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing_support

#endif  // WITTMOD_TESTS_SUPPORT_HPP
