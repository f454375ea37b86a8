#pragma once

// Quantization of the baker map on the antiperiodic (half-integer) grid
// q_n = (n+1/2)/D, p_m = (m+1/2)/D: the Fourier matrix G_D, the propagator
// in both stackings, the generating-function form of the mixed propagator,
// and the reflection symmetry R.
//
// Convention, fixed once: the position-representation matrix is
// B = G_D^{-1} * (mixed propagator), with the normal-stacking mixed
// propagator blockdiag(G_{D/2}, G_{D/2}) and the primed one its
// block-anti-diagonal counterpart.

#include "bakerlab/classical.hpp"
#include "bakerlab/linalg.hpp"

namespace bakerlab {

// Grid value (k + 1/2) / d.
double grid_value(Index d, Index k);

// Antiperiodic Fourier matrix G_D[m,n] = exp(-2pi i (m+1/2)(n+1/2)/D)/sqrt(D).
ComplexMatrix fourier_g(Index d);

// Mixed (momentum rows, position columns) propagator of one baker step.
ComplexMatrix baker_mixed(Index d, Stacking stacking = Stacking::normal);

// Position-representation baker unitary, B or B'.
ComplexMatrix baker_unitary(Index d, Stacking stacking = Stacking::normal);

// Generating function W_eps(p, q) = 2pq - eps*p - eps*q of the normal map.
double generating_exponent(double p, double q, int eps);

// Classically allowed domain R_eps of the normal map: both coordinates on
// the eps side of 1/2.
bool in_allowed_domain(double p, double q, int eps);

// Entrywise deviation between the mixed propagator and its generating-
// function form sqrt(2/D) exp(-2pi i D W), with exact zeros on forbidden
// entries. For the primed stacking the generating function is
// 2pq - eps*p - (1-eps)*q on the block-anti-diagonal domains.
double vanvleck_check(Index d, Stacking stacking = Stacking::normal);

// Reflection q -> 1-q as the index-reversal permutation m -> D-1-m.
ComplexMatrix reflection_r(Index d);

}  // namespace bakerlab
