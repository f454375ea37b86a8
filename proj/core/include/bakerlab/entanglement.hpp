#pragma once

// Entanglement production of coupled maps: Haar-random product states,
// linear-entropy traces along the evolution, ensemble statistics and the
// random-state reference value.

#include <cstdint>
#include <random>
#include <vector>

#include "bakerlab/linalg.hpp"

namespace bakerlab {

// Deterministic stream-splittable sampler. Two samplers with the same seed
// and different stream ids produce independent sequences; the output is
// identical across platforms (no library distributions involved).
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform();  // [0, 1)
  double normal();   // standard normal, Box-Muller

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Haar-random pure state: normalized vector of iid complex Gaussians.
StateVector haar_state(Index dim, HaarSampler& rng);

// Product of Haar-random factors, control slow: v[c*d_t + t] = vc[c]*vt[t].
StateVector haar_product_state(Index d_c, Index d_t, HaarSampler& rng_c, HaarSampler& rng_t);

// Linear entropy of one subsystem at t = 0..steps; values.size() == steps+1.
struct EntropyTrace {
  std::vector<double> values;

  Index steps() const { return static_cast<Index>(values.size()) - 1; }
};

// Evolves psi0 under u, recording the reduced linear entropy each step.
// The two subsystem entropies of a pure state agree; they are both computed
// and cross-checked to 1e-10 (throws std::runtime_error on divergence).
EntropyTrace evolve_entropy_trace(const ComplexMatrix& u, const StateVector& psi0, Index d_c,
                                  Index d_t, Index steps);

// Target-side entropy trace for the initial state (1/d_c) 1_c x |psi_t><psi_t|.
// The mixture is evolved as d_c independent basis-state branches, which is
// exact by linearity of u . u^dag.
EntropyTrace evolve_mixed_control(const ComplexMatrix& u, const StateVector& psi_t, Index d_c,
                                  Index d_t, Index steps);

struct EnsembleResult {
  Index n_samples = 0;
  std::vector<double> mean;     // per step, size steps+1
  std::vector<double> std_dev;  // sample standard deviation per step
  double haar_reference = 0.0;
};

struct EnsembleRun {
  std::vector<EntropyTrace> traces;  // one per sample
  EnsembleResult summary;
};

// Entropy traces of n_samples Haar product states evolved under u, plus the
// per-step summary. Sample i draws its factors from streams (2i, 2i+1) of
// the given seed, so the result is independent of evaluation order.
EnsembleRun ensemble_entropy_traces(const ComplexMatrix& u, Index d_c, Index d_t, Index n_samples,
                                    Index steps, std::uint64_t seed);

// Summary only.
EnsembleResult ensemble_entropy(const ComplexMatrix& u, Index d_c, Index d_t, Index n_samples,
                                Index steps, std::uint64_t seed);

// Mean linear entropy 1 - (d_c + d_t)/(d_c*d_t + 1) of a Haar-random pure
// state on the composite space.
double lubkin_mean(Index d_c, Index d_t);

}  // namespace bakerlab
