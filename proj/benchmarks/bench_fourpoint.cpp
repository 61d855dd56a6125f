#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fourpoint/fourpoint.hpp"

using namespace fourpoint;

namespace {

std::vector<Cx> random_points(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Cx> out(n);
  for (auto& z : out) z = {u(rng), u(rng)};
  return out;
}

void BM_SolvePolyDegree12(benchmark::State& state) {
  const auto c = random_points(13, 1);
  const Polynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(solve_poly(p));
}
BENCHMARK(BM_SolvePolyDegree12);

void BM_SolvePolyCubic(benchmark::State& state) {
  const Polynomial p = hesse_cubic(Cx{0.4, 1.3});
  for (auto _ : state) benchmark::DoNotOptimize(solve_poly(p));
}
BENCHMARK(BM_SolvePolyCubic);

void BM_HesseRootsClosedForm(benchmark::State& state) {
  const Cx k{0.4, 1.3};
  for (auto _ : state) benchmark::DoNotOptimize(hesse_roots(k));
}
BENCHMARK(BM_HesseRootsClosedForm);

void BM_CrossRatio(benchmark::State& state) {
  const auto z = random_points(4, 2);
  const FourPoints pts(z[0], z[1], z[2], z[3]);
  for (auto _ : state) benchmark::DoNotOptimize(cross_ratio(pts));
}
BENCHMARK(BM_CrossRatio);

void BM_JOfPoints(benchmark::State& state) {
  const auto z = random_points(4, 3);
  const FourPoints pts(z[0], z[1], z[2], z[3]);
  for (auto _ : state) benchmark::DoNotOptimize(j_of_points(pts));
}
BENCHMARK(BM_JOfPoints);

void BM_HesseFromLambda(benchmark::State& state) {
  const Cx lambda{0.3, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(hesse_from_lambda(lambda));
}
BENCHMARK(BM_HesseFromLambda);

void BM_ShapeOf(benchmark::State& state) {
  const FourPoints pts(Cx{0.0}, Cx{1.0}, Cx{0.2, 0.9}, Cx{1.7, -0.4});
  for (auto _ : state) benchmark::DoNotOptimize(shape_of(pts));
}
BENCHMARK(BM_ShapeOf);

void BM_ShapeSvg(benchmark::State& state) {
  const FourPoints pts(Cx{0.0}, Cx{1.0}, Cx{0.2, 0.9}, Cx{1.7, -0.4});
  for (auto _ : state) benchmark::DoNotOptimize(shape_svg(pts));
}
BENCHMARK(BM_ShapeSvg);

}  // namespace

BENCHMARK_MAIN();
