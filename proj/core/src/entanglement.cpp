#include "bakerlab/entanglement.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bakerlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

void check_state_norm(const StateVector& psi, const char* what) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument(std::string(what) + " must be normalized to 1e-12, norm=" +
                                std::to_string(psi.norm()));
  }
}

// Purity of the reduced state of psi on the smaller factor; both factors of
// a pure state have the same spectrum.
double reduced_purity(const StateVector& psi, Index d_c, Index d_t) {
  Eigen::Map<const ComplexMatrix> m(psi.data(), d_t, d_c);
  if (d_t <= d_c) {
    return (m * m.adjoint()).squaredNorm();
  }
  return (m.adjoint() * m).squaredNorm();
}

}  // namespace

HaarSampler::HaarSampler(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(seed) ^ (stream * 0x9E3779B97F4A7C15ull))) {}

double HaarSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double HaarSampler::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

StateVector haar_state(Index dim, HaarSampler& rng) {
  if (dim < 1) throw std::invalid_argument("state dimension must be >= 1");
  StateVector v(dim);
  double norm2 = 0.0;
  do {
    for (Index i = 0; i < dim; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      v[i] = Complex(re, im);
    }
    norm2 = v.squaredNorm();
  } while (norm2 == 0.0);
  return v / std::sqrt(norm2);
}

StateVector haar_product_state(Index d_c, Index d_t, HaarSampler& rng_c, HaarSampler& rng_t) {
  const StateVector vc = haar_state(d_c, rng_c);
  const StateVector vt = haar_state(d_t, rng_t);
  StateVector v(d_c * d_t);
  for (Index c = 0; c < d_c; ++c) {
    v.segment(c * d_t, d_t) = vc[c] * vt;
  }
  return v;
}

EntropyTrace evolve_entropy_trace(const ComplexMatrix& u, const StateVector& psi0, Index d_c,
                                  Index d_t, Index steps) {
  const Index dim = d_c * d_t;
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("propagator is " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", expected " + std::to_string(dim));
  }
  if (psi0.size() != dim) {
    throw std::invalid_argument("state has dimension " + std::to_string(psi0.size()) +
                                ", expected " + std::to_string(dim));
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  check_state_norm(psi0, "initial state");

  StateVector psi = psi0 / psi0.norm();
  EntropyTrace trace;
  trace.values.reserve(static_cast<std::size_t>(steps) + 1);
  for (Index t = 0;; ++t) {
    const auto left = purity_and_linear_entropy(reduced_density(psi, d_c, d_t, Keep::left));
    const auto right = purity_and_linear_entropy(reduced_density(psi, d_c, d_t, Keep::right));
    if (std::abs(left.linear_entropy - right.linear_entropy) > 1e-10) {
      throw std::runtime_error("subsystem entropies of a pure state diverged: " +
                               std::to_string(left.linear_entropy) + " vs " +
                               std::to_string(right.linear_entropy));
    }
    trace.values.push_back(left.linear_entropy);
    if (t == steps) break;
    psi = u * psi;
    psi /= psi.norm();
  }
  return trace;
}

EntropyTrace evolve_mixed_control(const ComplexMatrix& u, const StateVector& psi_t, Index d_c,
                                  Index d_t, Index steps) {
  const Index dim = d_c * d_t;
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("propagator is " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", expected " + std::to_string(dim));
  }
  if (psi_t.size() != d_t) {
    throw std::invalid_argument("target state has dimension " + std::to_string(psi_t.size()) +
                                ", expected " + std::to_string(d_t));
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  check_state_norm(psi_t, "target state");

  ComplexMatrix branches = ComplexMatrix::Zero(dim, d_c);
  for (Index c = 0; c < d_c; ++c) {
    branches.block(c * d_t, c, d_t, 1) = psi_t / psi_t.norm();
  }

  EntropyTrace trace;
  trace.values.reserve(static_cast<std::size_t>(steps) + 1);
  const double weight = 1.0 / static_cast<double>(d_c);
  for (Index t = 0;; ++t) {
    ComplexMatrix rho_t = ComplexMatrix::Zero(d_t, d_t);
    for (Index c = 0; c < d_c; ++c) {
      Eigen::Map<const ComplexMatrix> m(branches.col(c).data(), d_t, d_c);
      rho_t.noalias() += weight * (m * m.adjoint());
    }
    trace.values.push_back(purity_and_linear_entropy(DensityMatrix{rho_t}).linear_entropy);
    if (t == steps) break;
    branches = u * branches;
    for (Index c = 0; c < d_c; ++c) {
      branches.col(c) /= branches.col(c).norm();
    }
  }
  return trace;
}

EnsembleRun ensemble_entropy_traces(const ComplexMatrix& u, Index d_c, Index d_t, Index n_samples,
                                    Index steps, std::uint64_t seed) {
  const Index dim = d_c * d_t;
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("propagator is " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", expected " + std::to_string(dim));
  }
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");

  ComplexMatrix states(dim, n_samples);
  for (Index i = 0; i < n_samples; ++i) {
    HaarSampler rng_c(seed, static_cast<std::uint64_t>(2 * i));
    HaarSampler rng_t(seed, static_cast<std::uint64_t>(2 * i + 1));
    states.col(i) = haar_product_state(d_c, d_t, rng_c, rng_t);
  }

  EnsembleRun run;
  run.traces.resize(static_cast<std::size_t>(n_samples));
  for (auto& trace : run.traces) {
    trace.values.reserve(static_cast<std::size_t>(steps) + 1);
  }
  run.summary.n_samples = n_samples;
  run.summary.haar_reference = lubkin_mean(d_c, d_t);
  run.summary.mean.reserve(static_cast<std::size_t>(steps) + 1);
  run.summary.std_dev.reserve(static_cast<std::size_t>(steps) + 1);

  for (Index t = 0;; ++t) {
    double sum = 0.0;
    for (Index i = 0; i < n_samples; ++i) {
      const double s = 1.0 - reduced_purity(states.col(i), d_c, d_t);
      run.traces[static_cast<std::size_t>(i)].values.push_back(s);
      sum += s;
    }
    const double mean = sum / static_cast<double>(n_samples);
    double var = 0.0;
    for (const auto& trace : run.traces) {
      const double s = trace.values.back();
      var += (s - mean) * (s - mean);
    }
    const double std_dev =
        n_samples > 1 ? std::sqrt(var / static_cast<double>(n_samples - 1)) : 0.0;
    run.summary.mean.push_back(mean);
    run.summary.std_dev.push_back(std_dev);
    if (t == steps) break;
    states = u * states;
    for (Index i = 0; i < n_samples; ++i) {
      states.col(i) /= states.col(i).norm();
    }
  }
  return run;
}

EnsembleResult ensemble_entropy(const ComplexMatrix& u, Index d_c, Index d_t, Index n_samples,
                                Index steps, std::uint64_t seed) {
  return ensemble_entropy_traces(u, d_c, d_t, n_samples, steps, seed).summary;
}

double lubkin_mean(Index d_c, Index d_t) {
  if (d_c < 1 || d_t < 1) throw std::invalid_argument("factor dimensions must be >= 1");
  return 1.0 - static_cast<double>(d_c + d_t) / (static_cast<double>(d_c) * d_t + 1.0);
}

}  // namespace bakerlab
