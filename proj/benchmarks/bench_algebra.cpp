#include <benchmark/benchmark.h>

#include "artin/io.hpp"

namespace {

using namespace artin;

const FieldDescriptor Q = FieldDescriptor::rationals();

AlgebraSpec perazzo_spec() {
  const VariableTable t = VariableTable::standard({"x", "y", "z", "u", "v"});
  return AlgebraSpec{Q, t,
                     DualPresentation{parse_divided_polynomial("X*U^[2]+Y*U*V+Z*V^[2]", t, Q)}};
}

void BM_build_perazzo_fiber(benchmark::State& state) {
  const AlgebraSpec spec = perazzo_spec();
  for (auto _ : state) benchmark::DoNotOptimize(GradedAlgebra::build(spec).dimension());
}
BENCHMARK(BM_build_perazzo_fiber);

void BM_build_coinvariants_3_3(benchmark::State& state) {
  const AlgebraSpec spec = coinv_gr1n(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(GradedAlgebra::build(spec).dimension());
}
BENCHMARK(BM_build_coinvariants_3_3);

void BM_generic_jordan_perazzo(benchmark::State& state) {
  const GradedAlgebra b = GradedAlgebra::build(perazzo_spec());
  for (auto _ : state)
    benchmark::DoNotOptimize(
        generic_jordan_type(b, SampleMode::LinearForms, 7, 0).partition.count());
}
BENCHMARK(BM_generic_jordan_perazzo);

void BM_jordan_type_coinvariants_3_3(benchmark::State& state) {
  const GradedAlgebra a = GradedAlgebra::build(coinv_gr1n(3, 3));
  const Element ell = sample_stratum_element(a, SampleMode::LinearForms, 1);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(a, ell).partition.count());
}
BENCHMARK(BM_jordan_type_coinvariants_3_3);

void BM_valid_g_space_perazzo(benchmark::State& state) {
  const GradedAlgebra b = GradedAlgebra::build(perazzo_spec());
  for (auto _ : state) benchmark::DoNotOptimize(valid_g_space(b, 1).size());
}
BENCHMARK(BM_valid_g_space_perazzo);

void BM_theorem_check_perazzo(benchmark::State& state) {
  const AlgebraSpec b_spec = perazzo_spec();
  const ExtensionTriple triple = build_dual_extension(
      b_spec, 1, parse_divided_polynomial("X^[2]*U*V+X*Y*V^[2]", b_spec.table, Q));
  for (auto _ : state)
    benchmark::DoNotOptimize(theorem_check(triple, 7, 0).p_c.count());
}
BENCHMARK(BM_theorem_check_perazzo);

}  // namespace
