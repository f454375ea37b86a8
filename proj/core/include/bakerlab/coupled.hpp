#pragma once

// Two baker maps coupled through their principal qubits by a two-qubit
// gate: the mixed-representation block form, the position-representation
// unitary, the single-qubit-control special case and the stacked-qubit
// comparison map.
//
// Composite basis order: control slow, target fast (n = n_c * d_t + n_t).
// The 4x4 gate acts on (principal bit of control, principal bit of target)
// in the basis (00, 01, 10, 11).

#include "bakerlab/baker.hpp"
#include "bakerlab/linalg.hpp"

namespace bakerlab {

enum class GateKind { identity, xx, swap, cnot, custom };

struct CouplingGate {
  GateKind kind = GateKind::identity;
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Identity();

  static CouplingGate identity();
  static CouplingGate xx();
  static CouplingGate swap();
  static CouplingGate cnot();
  // Any 4x4 unitary (checked to 1e-12).
  static CouplingGate custom(const Eigen::Matrix4cd& u);

  static CouplingGate from_kind(GateKind kind);
};

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct CoupledSpec {
  Index d_c = 2;
  Index d_t = 2;
  CouplingGate gate = CouplingGate::cnot();

  Index dim() const { return d_c * d_t; }
};

// Mixed-representation matrix: entry ((m',m),(n',n)) is
// gate[(eps_p^c,eps_p^t),(eps_q^c,eps_q^t)] * G_{Dc/2}(m' mod, n' mod)
//                                           * G_{Dt/2}(m mod, n mod),
// where eps(x) is the principal bit of the grid coordinate.
ComplexMatrix coupled_mixed_rep(const CoupledSpec& spec);

// Position-representation unitary (G_{Dc} x G_{Dt})^-1 * mixed rep.
ComplexMatrix coupled_baker(const CoupledSpec& spec);

// The d_c = 2 construction assembled from operator factors:
// (G_2 x G_{Dt})^-1 [gate x G_{Dt/2}] times the residual scalar G_1 = -i
// of the collapsed control Fourier factor. Equals coupled_baker at d_c = 2.
ComplexMatrix single_qubit_control_baker(Index d_t, const CouplingGate& gate);

// Stacked-qubit comparison map [1_2 x B_{2*d_t}] * S on 4*d_t dimensions,
// with S the permutation exchanging the two leading qubits. Requires d_t a
// power of two.
ComplexMatrix schack_caves_b_n2(Index d_t);

// Permutation exchanging the two leading (most significant) qubits of a
// 2^n-dimensional register.
ComplexMatrix leading_qubit_swap(Index dim);

// Permutation P reordering the composite basis from
// (qubit_c, rest_c, qubit_t, rest_t) to (qubit_c, qubit_t, rest_c, rest_t):
// coupled_mixed_rep = P^T * kron(gate, G_{Dc/2}, G_{Dt/2}) * P.
ComplexMatrix qubit_front_permutation(Index d_c, Index d_t);

// Exchange of the two factors of C^d x C^d, for symmetry checks.
ComplexMatrix factor_exchange(Index d);

}  // namespace bakerlab
