#include <benchmark/benchmark.h>

#include <numbers>

#include "breitrabi/berry.hpp"
#include "breitrabi/crossings.hpp"
#include "breitrabi/entanglement.hpp"

using namespace breitrabi;

namespace {

const AtomParams& sodium() {
  static const AtomParams atom = *find_preset("sodium");
  return atom;
}

void BM_BuildHamiltonian(benchmark::State& state) {
  const FieldPoint p{0.05, 1.0};
  for (auto _ : state) {
    auto h = build_hamiltonian(sodium(), p);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_BuildHamiltonian);

void BM_JacobiSolve8x8(benchmark::State& state) {
  const Mat full = build_full_hamiltonian(sodium(), {0.05, 1.0});
  for (auto _ : state) {
    auto eig = jacobi_eigensolve(full);
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_JacobiSolve8x8);

void BM_HermitianSolve8x8(benchmark::State& state) {
  const CMat h = build_rotated_hamiltonian(sodium(), {0.05, 1.0}, 1.1, 0.6);
  for (auto _ : state) {
    auto eig = jacobi_eigensolve(h);
    benchmark::DoNotOptimize(eig);
  }
}
BENCHMARK(BM_HermitianSolve8x8);

void BM_ClosedFormLevels(benchmark::State& state) {
  const FieldPoint p{0.05, 1.0};
  for (auto _ : state) {
    auto levels = sodium_closed_form(sodium(), p);
    benchmark::DoNotOptimize(levels);
  }
}
BENCHMARK(BM_ClosedFormLevels);

void BM_SchmidtDecomposition(benchmark::State& state) {
  const auto basis = product_basis(sodium().nuclear_spin);
  const auto level = level_by_id(sodium(), {0.05, 1.0},
                                 {HalfInteger::from_int(1), Branch::minus});
  for (auto _ : state) {
    auto dec = schmidt(level.amplitudes, basis);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_SchmidtDecomposition);

void BM_WilsonLoop(benchmark::State& state) {
  const LevelId id{HalfInteger::from_int(1), Branch::minus};
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double beta = berry_phase_numeric(
        sodium(), {std::numbers::pi / 3, 0.05, 1.0, steps}, id);
    benchmark::DoNotOptimize(beta);
  }
}
BENCHMARK(BM_WilsonLoop)->Arg(100)->Arg(500);

void BM_SpectrumSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto table = spectrum_sweep(sodium(), -0.2, 0.2, 1001, 1.0);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_SpectrumSweep);

void BM_AvoidedCrossingScan(benchmark::State& state) {
  for (auto _ : state) {
    auto events = find_avoided_crossings(
        sodium(), SweepParameter::field, {-0.2, 0.2, 201, 1.0},
        HalfInteger::from_int(-1));
    benchmark::DoNotOptimize(events);
  }
}
BENCHMARK(BM_AvoidedCrossingScan);

}  // namespace

BENCHMARK_MAIN();
