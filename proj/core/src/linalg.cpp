#include "bakerlab/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bakerlab {

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("from_pure: zero vector");
  StateVector unit = psi / n;
  return DensityMatrix{unit * unit.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  return DensityMatrix{ComplexMatrix::Identity(dim, dim) / double(dim)};
}

DensityMatrix DensityMatrix::validated(ComplexMatrix m, double tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("density matrix must be square");
  const double herm = (m - m.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > tol)
    throw std::invalid_argument("density matrix not Hermitian: defect " +
                                std::to_string(herm));
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol)
    throw std::invalid_argument("density matrix trace != 1");
  return DensityMatrix{std::move(m)};
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) {
  return kron(kron(a, b), c);
}

ComplexMatrix apply_kron(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexMatrix& x) {
  if (x.rows() != a.cols() * b.cols())
    throw std::invalid_argument("apply_kron: row count mismatch");
  ComplexMatrix out(a.rows() * b.rows(), x.cols());
  ComplexMatrix at = a.transpose();
  for (Index j = 0; j < x.cols(); ++j) {
    // Column-major reshape: x[(i_a)*b.cols() + i_b] -> m(i_b, i_a),
    // so (a ⊗ b) x = vec(b * m * a^T).
    Eigen::Map<const ComplexMatrix> m(x.col(j).data(), b.cols(), a.cols());
    Eigen::Map<ComplexMatrix> o(out.col(j).data(), b.rows(), a.rows());
    o = b * m * at;
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Index d_left,
                            Index d_right, Keep keep) {
  if (rho.dim() != d_left * d_right)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  const ComplexMatrix& m = rho.mat;
  if (keep == Keep::left) {
    ComplexMatrix out = ComplexMatrix::Zero(d_left, d_left);
    for (Index i = 0; i < d_left; ++i)
      for (Index j = 0; j < d_left; ++j)
        for (Index k = 0; k < d_right; ++k)
          out(i, j) += m(i * d_right + k, j * d_right + k);
    return DensityMatrix{std::move(out)};
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_right, d_right);
  for (Index i = 0; i < d_right; ++i)
    for (Index j = 0; j < d_right; ++j)
      for (Index k = 0; k < d_left; ++k)
        out(i, j) += m(k * d_right + i, k * d_right + j);
  return DensityMatrix{std::move(out)};
}

DensityMatrix reduced_density(const StateVector& psi, Index d_left,
                              Index d_right, Keep keep) {
  if (psi.size() != d_left * d_right)
    throw std::invalid_argument("reduced_density: dimension mismatch");
  // psi[(i)*d_right + k]: view as a d_right x d_left matrix column-wise.
  Eigen::Map<const ComplexMatrix> m(psi.data(), d_right, d_left);
  if (keep == Keep::left) return DensityMatrix{(m.adjoint() * m).conjugate()};
  return DensityMatrix{m * m.adjoint()};
}

PurityResult purity_and_linear_entropy(const DensityMatrix& rho) {
  const Complex tr2 = (rho.mat.array() * rho.mat.transpose().array()).sum();
  if (std::abs(tr2.imag()) > 1e-12)
    throw std::runtime_error("purity: imaginary residue above 1e-12");
  return PurityResult{tr2.real(), 1.0 - tr2.real()};
}

double purity_of(const ComplexMatrix& rho) {
  return (rho.array() * rho.transpose().array()).sum().real();
}

std::vector<Complex> eig_general(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("eig_general: matrix must be square");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_general: eigensolver did not converge");
  const auto& v = solver.eigenvalues();
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

Eigensystem eig_with_vectors(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("eig_with_vectors: matrix must be square");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_with_vectors: eigensolver did not converge");
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const ComplexMatrix& u) {
  ComplexMatrix g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

}  // namespace bakerlab
