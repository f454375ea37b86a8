#include "bakerlab/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bakerlab/baker.hpp"

namespace bakerlab {

namespace {

constexpr double kUnitTol = 1e-8;

StateVector vec_of(const ComplexMatrix& m) {
  return Eigen::Map<const StateVector>(m.data(), m.size());
}

ComplexMatrix unvec(const StateVector& v, Index d) {
  return Eigen::Map<const ComplexMatrix>(v.data(), d, d);
}

Index state_dim_of(const ComplexMatrix& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("superoperator must be square");
  const Index d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(s.rows()))));
  if (d * d != s.rows()) {
    throw std::invalid_argument("superoperator dimension " + std::to_string(s.rows()) +
                                " is not a perfect square");
  }
  return d;
}

}  // namespace

KrausPair KrausPair::for_dim(Index d_t) {
  const double w = 1.0 / std::sqrt(2.0);
  return {w * baker_unitary(d_t, Stacking::normal), w * baker_unitary(d_t, Stacking::primed)};
}

DensityMatrix apply_channel(const KrausPair& kraus, const DensityMatrix& rho) {
  if (rho.dim() != kraus.dim()) {
    throw std::invalid_argument("state dimension " + std::to_string(rho.dim()) +
                                " does not match channel dimension " +
                                std::to_string(kraus.dim()));
  }
  ComplexMatrix out = kraus.k0 * rho.mat * kraus.k0.adjoint();
  out.noalias() += kraus.k1 * rho.mat * kraus.k1.adjoint();
  return DensityMatrix{std::move(out)};
}

ComplexMatrix superop_matrix(const KrausPair& kraus) {
  return kron(kraus.k0.conjugate(), kraus.k0) + kron(kraus.k1.conjugate(), kraus.k1);
}

SpectrumReport superop_spectrum(const ComplexMatrix& s) {
  const Index d = state_dim_of(s);
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("fixed-space analysis needs an even state dimension, got " +
                                std::to_string(d));
  }
  const Eigensystem es = eig_with_vectors(s);

  const Index n = es.values.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    const double ma = std::abs(es.values[a]);
    const double mb = std::abs(es.values[b]);
    if (ma != mb) return ma > mb;
    if (es.values[a].real() != es.values[b].real())
      return es.values[a].real() > es.values[b].real();
    return es.values[a].imag() > es.values[b].imag();
  });

  SpectrumReport report;
  report.eigenvalues.reserve(static_cast<std::size_t>(n));
  double span_residual = 0.0;

  // Orthonormal basis of the expected fixed space: vec(1) and vec(R) are
  // orthogonal since tr R = 0 for even dimension.
  const double root_d = std::sqrt(static_cast<double>(d));
  const StateVector v_id = vec_of(ComplexMatrix::Identity(d, d)) / root_d;
  const StateVector v_r = vec_of(reflection_r(d)) / root_d;

  for (Index k = 0; k < n; ++k) {
    const Complex lambda = es.values[order[static_cast<std::size_t>(k)]];
    report.eigenvalues.push_back(lambda);
    if (std::abs(lambda - 1.0) <= kUnitTol) {
      ++report.n_unit;
      StateVector w = es.vectors.col(order[static_cast<std::size_t>(k)]);
      w /= w.norm();
      const StateVector proj = v_id * v_id.dot(w) + v_r * v_r.dot(w);
      span_residual = std::max(span_residual, (w - proj).norm());
    } else {
      report.max_subunit_modulus = std::max(report.max_subunit_modulus, std::abs(lambda));
    }
  }

  const double fix_id = (s * v_id - v_id).norm();
  const double fix_r = (s * v_r - v_r).norm();
  report.fixed_space_residual = std::max({span_residual, fix_id, fix_r});
  return report;
}

ComplexMatrix unit_eigenprojector(const ComplexMatrix& s) {
  state_dim_of(s);
  const Eigensystem right = eig_with_vectors(s);
  const Eigensystem left = eig_with_vectors(s.adjoint().eval());

  auto collect = [](const Eigensystem& es) {
    std::vector<Index> idx;
    for (Index k = 0; k < es.values.size(); ++k) {
      if (std::abs(es.values[k] - 1.0) <= kUnitTol) idx.push_back(k);
    }
    return idx;
  };
  const std::vector<Index> ri = collect(right);
  const std::vector<Index> li = collect(left);
  if (ri.empty() || ri.size() != li.size()) {
    throw std::runtime_error("unit eigenspace is unbalanced: " + std::to_string(ri.size()) +
                             " right vs " + std::to_string(li.size()) + " left vectors");
  }

  const Index m = static_cast<Index>(ri.size());
  ComplexMatrix r(s.rows(), m);
  ComplexMatrix l(s.rows(), m);
  for (Index k = 0; k < m; ++k) {
    r.col(k) = right.vectors.col(ri[static_cast<std::size_t>(k)]);
    l.col(k) = left.vectors.col(li[static_cast<std::size_t>(k)]);
  }

  const ComplexMatrix overlap = l.adjoint() * r;
  Eigen::FullPivLU<ComplexMatrix> lu(overlap);
  if (!lu.isInvertible()) {
    throw std::runtime_error("unit eigenspace pairing is singular; projector undefined");
  }
  return r * lu.solve(l.adjoint());
}

DensityMatrix asymptotic_state(const KrausPair& kraus, const DensityMatrix& rho0) {
  if (rho0.dim() != kraus.dim()) {
    throw std::invalid_argument("state dimension " + std::to_string(rho0.dim()) +
                                " does not match channel dimension " +
                                std::to_string(kraus.dim()));
  }
  const ComplexMatrix p = unit_eigenprojector(superop_matrix(kraus));
  const ComplexMatrix limit = unvec(p * vec_of(rho0.mat), rho0.dim());
  // The limit of a Hermitian input is Hermitian; discard the numerical skew.
  return DensityMatrix{0.5 * (limit + limit.adjoint())};
}

EntropyTrace markov_entropy_trace(const KrausPair& kraus, const StateVector& psi0, Index steps) {
  if (psi0.size() != kraus.dim()) {
    throw std::invalid_argument("state dimension " + std::to_string(psi0.size()) +
                                " does not match channel dimension " +
                                std::to_string(kraus.dim()));
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (std::abs(psi0.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("initial state must be normalized to 1e-12, norm=" +
                                std::to_string(psi0.norm()));
  }
  DensityMatrix rho = DensityMatrix::from_pure(psi0 / psi0.norm());
  EntropyTrace trace;
  trace.values.reserve(static_cast<std::size_t>(steps) + 1);
  for (Index t = 0;; ++t) {
    trace.values.push_back(purity_and_linear_entropy(rho).linear_entropy);
    if (t == steps) break;
    rho = apply_channel(kraus, rho);
  }
  return trace;
}

}  // namespace bakerlab
