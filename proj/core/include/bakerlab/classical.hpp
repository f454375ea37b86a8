#pragma once

// Classical baker map in both stackings, its symbolic (shift) dynamics on
// dyadic points, and the 4-dimensional controlled-not coupled map.
//
// Conventions: coordinates live in [0,1) with periodic boundaries; the
// primary bit is eps = 1 iff q >= 1/2. Dyadic points are exact: a
// coordinate with at most 52 binary digits is closed under the map in
// double precision, so float trajectories of dyadic inputs are exact until
// the bit budget runs out.

#include <cstdint>
#include <vector>

namespace bakerlab {

enum class Stacking { normal, primed };

struct PhasePoint {
  double p = 0.0;
  double q = 0.0;
};

struct CoupledPhasePoint {
  PhasePoint control;
  PhasePoint target;
};

// Primary bit of a coordinate: [2q] with the q >= 1/2 seam convention.
int primary_bit(double q);

// One step of the baker map. normal: p' = (p+eps)/2; primed: p' = (p+1-eps)/2;
// both: q' = 2q - eps with eps = [2q].
PhasePoint baker_step(const PhasePoint& x, Stacking stacking = Stacking::normal);

// One step of the coupled map: the control evolves as a normal baker and its
// primary bit flips the target's stacking (target momentum picks up
// eps_t XOR eps_c).
CoupledPhasePoint coupled_cnot_step(const CoupledPhasePoint& x);

// Bi-infinite symbol string truncated to finite lists. future holds
// (eps_0, eps_1, ...) so q = sum eps_i / 2^{i+1}; past holds
// (eps_{-1}, eps_{-2}, ...) so p = sum eps_{-i} / 2^i.
struct DyadicPoint {
  std::vector<std::uint8_t> past;
  std::vector<std::uint8_t> future;

  double q() const;
  double p() const;
  PhasePoint point() const { return PhasePoint{p(), q()}; }

  // One baker step as a symbol shift: eps_0 moves from the head of future
  // to the head of past. An exhausted future shifts in 0 bits (q = 0
  // convention).
  DyadicPoint shifted() const;
  DyadicPoint shifted(int steps) const;
};

// First `steps` symbols eps_0 .. eps_{steps-1} of the itinerary.
std::vector<std::uint8_t> encode_symbols(const DyadicPoint& x, std::size_t steps);

// Rebuild the phase point from finite past/future symbol lists.
DyadicPoint decode_symbols(std::vector<std::uint8_t> past_bits,
                           std::vector<std::uint8_t> future_bits);

double reduce_mod1(double x);

}  // namespace bakerlab
