#pragma once

// The incoherent mixture of the two baker stackings acting on the target
// alone: Kraus form, the matrix of the superoperator, its spectrum and the
// asymptotic state. This channel is the large-control limit of the coupled
// map with a maximally mixed control.

#include <vector>

#include "bakerlab/entanglement.hpp"
#include "bakerlab/linalg.hpp"

namespace bakerlab {

// rho -> k0 rho k0^dag + k1 rho k1^dag with k0, k1 the two baker stackings
// over sqrt(2). Trace preserving by construction.
struct KrausPair {
  ComplexMatrix k0;
  ComplexMatrix k1;

  Index dim() const { return k0.rows(); }

  static KrausPair for_dim(Index d_t);
};

DensityMatrix apply_channel(const KrausPair& kraus, const DensityMatrix& rho);

// Column-stacking matrix of the channel: vec(K rho K^dag) = (conj K x K) vec(rho).
ComplexMatrix superop_matrix(const KrausPair& kraus);

struct SpectrumReport {
  std::vector<Complex> eigenvalues;  // sorted by modulus, descending
  Index n_unit = 0;                  // eigenvalues within 1e-8 of 1
  double max_subunit_modulus = 0.0;  // largest modulus among the rest
  double fixed_space_residual = 0.0;

  double spectral_gap() const { return 1.0 - max_subunit_modulus; }
};

// Full spectrum of a channel superoperator (dimension d^2 x d^2, d even)
// plus fixed-space diagnostics: the residual covers both directions,
// S v = v for v in span{vec(1), vec(R)} and membership of the computed unit
// eigenvectors in that span.
SpectrumReport superop_spectrum(const ComplexMatrix& s);

// Spectral projector onto the unit eigenvalue of s, built from matching
// right and left eigenvectors: P = R (L^dag R)^-1 L^dag, with P^2 = P and
// P S = S P.
ComplexMatrix unit_eigenprojector(const ComplexMatrix& s);

// Unit-eigenprojection of vec(rho0) reshaped back to a density matrix: the
// t -> infinity limit of repeated channel application.
DensityMatrix asymptotic_state(const KrausPair& kraus, const DensityMatrix& rho0);

// Linear entropy of |psi0><psi0| under repeated channel application,
// t = 0..steps.
EntropyTrace markov_entropy_trace(const KrausPair& kraus, const StateVector& psi0, Index steps);

}  // namespace bakerlab
