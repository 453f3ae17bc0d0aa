// Serial vs OpenMP basis-tuple sweeps on full (violation-free) workloads.

#include <benchmark/benchmark.h>

#include <random>

#include "nacalg/algebra.hpp"
#include "nacalg/kernels.hpp"

using namespace nacalg;

namespace {

/// Associative and commutative: the sweep has to visit every tuple.
FinAlgebra group_algebra(std::size_t n) {
  const Field q = Field::rationals();
  return make_algebra(q, std::vector<std::string>(n, "g"), Vec::unit_vector(q, n, 0), [&](std::size_t i, std::size_t j) {
    return Vec::unit_vector(q, n, (i + j) % n);
  });
}

template <class Sweep>
void associativity_sweep(benchmark::State& state, Sweep sweep) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  FinAlgebra a = group_algebra(n);
  auto holds = [&](std::span<const std::size_t> t) {
    Vec x = a.basis_vector(t[0]), z = a.basis_vector(t[2]);
    Vec xy = a.mul(x, a.basis_vector(t[1])), yz = a.mul(a.basis_vector(t[1]), z);
    return a.mul(xy, z) == a.mul(x, yz);
  };
  for (auto _ : state) benchmark::DoNotOptimize(sweep(n, 3, holds));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n * n));
}

void BM_SerialAssociativity(benchmark::State& state) {
  associativity_sweep(state, kernels::serial::first_violation);
}

void BM_ParallelAssociativity(benchmark::State& state) {
  associativity_sweep(state, kernels::parallel::first_violation);
}

}  // namespace

BENCHMARK(BM_SerialAssociativity)->Arg(4)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_ParallelAssociativity)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
