#include <benchmark/benchmark.h>

#include "bakerlab/baker.hpp"
#include "bakerlab/coupled.hpp"
#include "bakerlab/entanglement.hpp"
#include "bakerlab/linalg.hpp"
#include "bakerlab/markov.hpp"
#include "bakerlab/spectral.hpp"

using namespace bakerlab;

namespace {

CoupledSpec cnot_spec(Index d_c, Index d_t) {
  CoupledSpec s;
  s.d_c = d_c;
  s.d_t = d_t;
  s.gate = CouplingGate::cnot();
  return s;
}

void bm_fourier(benchmark::State& state) {
  const Index d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_g(d));
  }
}
BENCHMARK(bm_fourier)->Arg(64)->Arg(256)->Arg(512);

void bm_baker_unitary(benchmark::State& state) {
  const Index d = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(baker_unitary(d));
  }
}
BENCHMARK(bm_baker_unitary)->Arg(64)->Arg(256)->Arg(512);

void bm_coupled_baker(benchmark::State& state) {
  const Index d_c = state.range(0);
  const CoupledSpec s = cnot_spec(d_c, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coupled_baker(s));
  }
}
BENCHMARK(bm_coupled_baker)->Arg(8)->Arg(32)->Arg(64);

void bm_evolution_step(benchmark::State& state) {
  const Index d_c = state.range(0);
  const Index d_t = 16;
  const ComplexMatrix u = coupled_baker(cnot_spec(d_c, d_t));
  HaarSampler rng_c(1, 0), rng_t(1, 1);
  StateVector psi = haar_product_state(d_c, d_t, rng_c, rng_t);
  for (auto _ : state) {
    psi = u * psi;
    psi.normalize();
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(bm_evolution_step)->Arg(16)->Arg(64)->Arg(256);

void bm_reduced_entropy(benchmark::State& state) {
  const Index d_c = state.range(0);
  const Index d_t = 16;
  HaarSampler rng(2, 0);
  const StateVector psi = haar_state(d_c * d_t, rng);
  for (auto _ : state) {
    DensityMatrix rho = reduced_density(psi, d_c, d_t, Keep::right);
    benchmark::DoNotOptimize(purity_and_linear_entropy(rho).linear_entropy);
  }
}
BENCHMARK(bm_reduced_entropy)->Arg(16)->Arg(64)->Arg(256);

void bm_channel_step(benchmark::State& state) {
  const Index d_t = state.range(0);
  const KrausPair kraus = KrausPair::for_dim(d_t);
  DensityMatrix rho = DensityMatrix::maximally_mixed(d_t);
  for (auto _ : state) {
    rho = apply_channel(kraus, rho);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(bm_channel_step)->Arg(16)->Arg(64)->Arg(128);

void bm_superop_spectrum(benchmark::State& state) {
  const Index d_t = state.range(0);
  const ComplexMatrix s = superop_matrix(KrausPair::for_dim(d_t));
  for (auto _ : state) {
    benchmark::DoNotOptimize(superop_spectrum(s));
  }
}
BENCHMARK(bm_superop_spectrum)->Arg(8)->Arg(16);

void bm_eigenphases(benchmark::State& state) {
  const Index d_c = state.range(0);
  const ComplexMatrix u = coupled_baker(cnot_spec(d_c, 16));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenphases(u));
  }
}
BENCHMARK(bm_eigenphases)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
