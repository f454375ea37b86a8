#pragma once

// Shared generators for the test binaries. Everything is seeded through
// HaarSampler so failures reproduce exactly.

#include <cstdint>

#include <Eigen/QR>

#include "bakerlab/entanglement.hpp"
#include "bakerlab/linalg.hpp"

namespace bakerlab::testing {

inline ComplexMatrix random_matrix(Index rows, Index cols, std::uint64_t seed,
                                   std::uint64_t stream = 0) {
  HaarSampler rng(seed, stream);
  ComplexMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = rng.normal();
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

inline ComplexMatrix random_unitary(Index dim, std::uint64_t seed, std::uint64_t stream = 0) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(dim, dim, seed, stream));
  return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

// Random full-rank density operator: a normalized mixture of dim pure states.
inline DensityMatrix random_density(Index dim, std::uint64_t seed, std::uint64_t stream = 0) {
  const ComplexMatrix g = random_matrix(dim, dim, seed, stream);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace();
  return DensityMatrix{std::move(m)};
}

}  // namespace bakerlab::testing
