#include <benchmark/benchmark.h>

#include "wittmod/closure.hpp"
#include "wittmod/expression.hpp"
#include "wittmod/lie_algebra.hpp"

using namespace wittmod;

namespace {

const Algebra& super_virasoro() {
  static const Algebra g(AlgebraKind::super_virasoro, parse_group({"1", "i", "0 odd"}));
  return g;
}

std::vector<LieElement> basis(const Algebra& g, long bound) {
  std::vector<LieElement> out;
  for (const auto& s : g.basis_symbols(g.group().window(Rational(bound)))) {
    out.emplace_back(s);
  }
  return out;
}

void BM_Bracket(benchmark::State& state) {
  const auto& g = super_virasoro();
  const auto b = basis(g, 2);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& x = b[k % b.size()];
    const auto& y = b[(k * 7 + 3) % b.size()];
    benchmark::DoNotOptimize(g.bracket_unchecked(x, y));
    ++k;
  }
}
BENCHMARK(BM_Bracket);

void BM_JacobiTriple(benchmark::State& state) {
  const auto& g = super_virasoro();
  const auto b = basis(g, 2);
  const Bracket br = [&g](const LieElement& u, const LieElement& v) { return g.bracket_unchecked(u, v); };
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacobiator(br, b[k % b.size()], b[(k * 5 + 1) % b.size()], b[(k * 11 + 2) % b.size()]));
    ++k;
  }
}
BENCHMARK(BM_JacobiTriple);

void BM_Closure(benchmark::State& state) {
  const auto spec = make_omega_spec(Character::trivial(parse_group({"1"})), GaussianRational(2));
  ClosureBounds bounds;
  bounds.degree = state.range(0);
  const std::vector<OmegaElement> seeds{OmegaElement::of_one(Polynomial::monomial(3))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(spec, seeds, bounds));
  }
}
BENCHMARK(BM_Closure)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
