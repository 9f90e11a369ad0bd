#include <benchmark/benchmark.h>

#include <random>

#include "artin/matrix.hpp"

namespace {

using namespace artin;

ExactMatrix random_matrix(int n, long span, uint64_t seed) {
  const FieldDescriptor q = FieldDescriptor::rationals();
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<long> dist(-span, span);
  ExactMatrix m(n, n, q);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = Scalar::of_integer(dist(eng), q);
  return m;
}

void BM_row_reduce_rational(benchmark::State& state) {
  const ExactMatrix m = random_matrix(static_cast<int>(state.range(0)), 10, 5);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m).rank);
}
BENCHMARK(BM_row_reduce_rational)->Arg(20)->Arg(40)->Arg(80);

void BM_kernel_basis_rational(benchmark::State& state) {
  const ExactMatrix m = random_matrix(static_cast<int>(state.range(0)), 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m).rows());
}
BENCHMARK(BM_kernel_basis_rational)->Arg(40);

void BM_matrix_multiply_rational(benchmark::State& state) {
  const ExactMatrix m = random_matrix(static_cast<int>(state.range(0)), 3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(m.multiply(m).is_zero());
}
BENCHMARK(BM_matrix_multiply_rational)->Arg(24)->Arg(54);

}  // namespace
