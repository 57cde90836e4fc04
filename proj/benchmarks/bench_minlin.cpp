#include "minlin/duality.hpp"
#include "minlin/function_class.hpp"
#include "minlin/lp.hpp"
#include "minlin/sampling.hpp"
#include "minlin/transform.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

using namespace minlin;

namespace {

ExtFun random_function(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Rational(static_cast<long>(rng() % 41) - 20, 4));
  return ExtFun::real(v);
}

Matrix unit_metric(std::size_t n) {
  Matrix d(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  return d;
}

void BM_SolveDenseLP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  lp::LinearProgram p(lp::Sense::Maximize);
  for (std::size_t i = 0; i < n; ++i) {
    p.add_variable("x" + std::to_string(i), true);
    p.set_objective(i, Rational(static_cast<long>(rng() % 7) + 1));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(Rational(static_cast<long>(rng() % 5) + 1));
    p.add_dense_constraint(std::move(row), lp::Relation::LessEqual, Rational(static_cast<long>(rng() % 20) + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve(p));
}
BENCHMARK(BM_SolveDenseLP)->Arg(4)->Arg(8)->Arg(16);

void BM_Biconjugate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::indexed(n, unit_metric(n));
  const ExtFun f = random_function(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(biconjugate(space, f, FunctionClass::lipschitz()));
}
BENCHMARK(BM_Biconjugate)->Arg(2)->Arg(5)->Arg(10);

void BM_FenchelTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Space space = Space::indexed(n);
  const ExtFun f = random_function(n, 3);
  const auto sample = sample_simplex(n, 8, 4);
  for (auto _ : state) {
    for (const auto& q : sample) benchmark::DoNotOptimize(fenchel_transform(space, f, FunctionClass::full(), q));
  }
}
BENCHMARK(BM_FenchelTransform)->Arg(2)->Arg(5)->Arg(10);

void BM_InfConvolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ExtFun f = random_function(n, 5);
  const ExtFun g = random_function(n, 6);
  const ExtFun theta = random_function(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(infconv_eval(f, g, theta));
}
BENCHMARK(BM_InfConvolution)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
