#pragma once

// Dense complex linear algebra used by every other module: Kronecker
// products, partial traces, purity, and a checked eigensolver wrapper.
//
// Index convention, fixed project-wide: a composite index of a bipartite
// space is n = n_left * d_right + n_right, i.e. the LEFT tensor factor is
// the slow (most significant) index.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace bakerlab {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Density operator carrier. validated() enforces the type invariants
// (square, Hermitian and unit trace within tol); the static factories
// produce valid states by construction. Positivity is not re-checked on
// every construction; tests probe it where it matters.
struct DensityMatrix {
  ComplexMatrix mat;

  Index dim() const { return mat.rows(); }

  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix maximally_mixed(Index dim);
  static DensityMatrix validated(ComplexMatrix m, double tol = 1e-12);
};

enum class Keep { left, right };

// Kronecker product, left factor slow: (a ⊗ b)[i*rb+k, j*cb+l] = a(i,j)b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c);

// (a ⊗ b) * x without forming the Kronecker product. x may have any number
// of columns; x.rows() must equal a.cols() * b.cols().
ComplexMatrix apply_kron(const ComplexMatrix& a, const ComplexMatrix& b,
                         const ComplexMatrix& x);

// Reduced density operator of a bipartite state. rho.dim() must equal
// d_left * d_right.
DensityMatrix partial_trace(const DensityMatrix& rho, Index d_left,
                            Index d_right, Keep keep);

// Same reduction taken directly from a pure state, skipping the full
// |psi><psi| outer product.
DensityMatrix reduced_density(const StateVector& psi, Index d_left,
                              Index d_right, Keep keep);

struct PurityResult {
  double purity;         // tr rho^2
  double linear_entropy; // 1 - tr rho^2
};

// tr rho^2 evaluated as sum_ij rho_ij rho_ji; throws if the imaginary
// residue exceeds 1e-12.
PurityResult purity_and_linear_entropy(const DensityMatrix& rho);

// Low-level variant used in evolution loops.
double purity_of(const ComplexMatrix& rho);

// All eigenvalues of a square matrix. Throws std::runtime_error if the
// solver fails to converge; never truncates.
std::vector<Complex> eig_general(const ComplexMatrix& a);

struct Eigensystem {
  Eigen::VectorXcd values;
  ComplexMatrix vectors; // column i pairs with values[i]
};

Eigensystem eig_with_vectors(const ComplexMatrix& a);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |(U^dag U - I)_ij|
double unitarity_defect(const ComplexMatrix& u);

}  // namespace bakerlab
