#include "bakerlab/coupled.hpp"

#include <stdexcept>
#include <string>

namespace bakerlab {

namespace {

Eigen::Matrix4cd identity4() { return Eigen::Matrix4cd::Identity(); }

Eigen::Matrix4cd xx4() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 0) = 1.0;
  return m;
}

Eigen::Matrix4cd swap4() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

Eigen::Matrix4cd cnot4() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

void require_even_pair(Index d_c, Index d_t) {
  if (d_c < 2 || d_c % 2 != 0 || d_t < 2 || d_t % 2 != 0) {
    throw std::invalid_argument("coupled baker dimensions must be even and >= 2, got d_c=" +
                                std::to_string(d_c) + " d_t=" + std::to_string(d_t));
  }
}

}  // namespace

CouplingGate CouplingGate::identity() { return {GateKind::identity, identity4()}; }
CouplingGate CouplingGate::xx() { return {GateKind::xx, xx4()}; }
CouplingGate CouplingGate::swap() { return {GateKind::swap, swap4()}; }
CouplingGate CouplingGate::cnot() { return {GateKind::cnot, cnot4()}; }

CouplingGate CouplingGate::custom(const Eigen::Matrix4cd& u) {
  double defect = (u.adjoint() * u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff();
  if (defect > 1e-12) {
    throw std::invalid_argument("custom coupling gate is not unitary, defect=" +
                                std::to_string(defect));
  }
  return {GateKind::custom, u};
}

CouplingGate CouplingGate::from_kind(GateKind kind) {
  switch (kind) {
    case GateKind::identity: return identity();
    case GateKind::xx: return xx();
    case GateKind::swap: return swap();
    case GateKind::cnot: return cnot();
    case GateKind::custom: break;
  }
  throw std::invalid_argument("custom gate needs an explicit matrix");
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::identity: return "identity";
    case GateKind::xx: return "xx";
    case GateKind::swap: return "swap";
    case GateKind::cnot: return "cnot";
    case GateKind::custom: return "custom";
  }
  return "unknown";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "identity") return GateKind::identity;
  if (name == "xx") return GateKind::xx;
  if (name == "swap") return GateKind::swap;
  if (name == "cnot") return GateKind::cnot;
  throw std::invalid_argument("unknown gate name: " + name +
                              " (expected identity, xx, swap or cnot)");
}

ComplexMatrix coupled_mixed_rep(const CoupledSpec& spec) {
  require_even_pair(spec.d_c, spec.d_t);
  const Index hc = spec.d_c / 2;
  const Index ht = spec.d_t / 2;
  const ComplexMatrix gc = fourier_g(hc);
  const ComplexMatrix gt = fourier_g(ht);
  const Eigen::Matrix4cd& gate = spec.gate.matrix;

  const Index dim = spec.dim();
  ComplexMatrix mixed(dim, dim);
  for (Index nc = 0; nc < spec.d_c; ++nc) {
    const int eq_c = nc >= hc ? 1 : 0;
    const Index rq_c = nc % hc;
    for (Index nt = 0; nt < spec.d_t; ++nt) {
      const int eq_t = nt >= ht ? 1 : 0;
      const Index rq_t = nt % ht;
      const Index col = nc * spec.d_t + nt;
      const int gate_col = 2 * eq_c + eq_t;
      for (Index mc = 0; mc < spec.d_c; ++mc) {
        const int ep_c = mc >= hc ? 1 : 0;
        const Complex outer = gc(mc % hc, rq_c);
        for (Index mt = 0; mt < spec.d_t; ++mt) {
          const int ep_t = mt >= ht ? 1 : 0;
          mixed(mc * spec.d_t + mt, col) =
              gate(2 * ep_c + ep_t, gate_col) * outer * gt(mt % ht, rq_t);
        }
      }
    }
  }
  return mixed;
}

ComplexMatrix coupled_baker(const CoupledSpec& spec) {
  const ComplexMatrix mixed = coupled_mixed_rep(spec);
  const ComplexMatrix gc_adj = fourier_g(spec.d_c).adjoint();
  const ComplexMatrix gt_adj = fourier_g(spec.d_t).adjoint();
  return apply_kron(gc_adj, gt_adj, mixed);
}

ComplexMatrix single_qubit_control_baker(Index d_t, const CouplingGate& gate) {
  if (d_t < 2 || d_t % 2 != 0) {
    throw std::invalid_argument("target dimension must be even and >= 2, got " +
                                std::to_string(d_t));
  }
  // Collapsed control Fourier factor G_1 = [-i] survives as a scalar.
  const Complex g1(0.0, -1.0);
  ComplexMatrix mixed = g1 * kron(ComplexMatrix(gate.matrix), fourier_g(d_t / 2));
  const ComplexMatrix g2_adj = fourier_g(2).adjoint();
  const ComplexMatrix gt_adj = fourier_g(d_t).adjoint();
  return apply_kron(g2_adj, gt_adj, mixed);
}

ComplexMatrix leading_qubit_swap(Index dim) {
  if (dim < 4 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("leading qubit swap needs a power-of-two dimension >= 4, got " +
                                std::to_string(dim));
  }
  const Index quarter = dim / 4;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (Index n = 0; n < dim; ++n) {
    const Index b1 = n / (2 * quarter) % 2;
    const Index b2 = n / quarter % 2;
    const Index rest = n % quarter;
    s((b2 * 2 + b1) * quarter + rest, n) = 1.0;
  }
  return s;
}

ComplexMatrix schack_caves_b_n2(Index d_t) {
  if (d_t < 2 || (d_t & (d_t - 1)) != 0) {
    throw std::invalid_argument("stacked-qubit map needs a power-of-two target dimension, got " +
                                std::to_string(d_t));
  }
  const ComplexMatrix inner = baker_unitary(2 * d_t, Stacking::normal);
  return kron(ComplexMatrix::Identity(2, 2).eval(), inner) * leading_qubit_swap(4 * d_t);
}

ComplexMatrix qubit_front_permutation(Index d_c, Index d_t) {
  require_even_pair(d_c, d_t);
  const Index hc = d_c / 2;
  const Index ht = d_t / 2;
  const Index dim = d_c * d_t;
  ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
  for (Index nc = 0; nc < d_c; ++nc) {
    const Index ec = nc / hc;
    const Index rc = nc % hc;
    for (Index nt = 0; nt < d_t; ++nt) {
      const Index et = nt / ht;
      const Index rt = nt % ht;
      const Index reordered = ((ec * 2 + et) * hc + rc) * ht + rt;
      p(reordered, nc * d_t + nt) = 1.0;
    }
  }
  return p;
}

ComplexMatrix factor_exchange(Index d) {
  if (d < 1) throw std::invalid_argument("factor exchange needs d >= 1");
  ComplexMatrix e = ComplexMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      e(j * d + i, i * d + j) = 1.0;
    }
  }
  return e;
}

}  // namespace bakerlab
