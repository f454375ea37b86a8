#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "bakerlab/linalg.hpp"
#include "test_support.hpp"

using namespace bakerlab;
using testing::random_density;
using testing::random_matrix;
using testing::random_unitary;

namespace {

ComplexMatrix kron_by_formula(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_CASE("kron matches the defining index formula") {
  const ComplexMatrix a = random_matrix(2, 3, 11);
  const ComplexMatrix b = random_matrix(4, 2, 12);
  CHECK(max_abs_diff(kron(a, b), kron_by_formula(a, b)) == 0.0);
}

TEST_CASE("kron of three factors associates") {
  const ComplexMatrix a = random_matrix(2, 2, 21);
  const ComplexMatrix b = random_matrix(3, 3, 22);
  const ComplexMatrix c = random_matrix(2, 2, 23);
  CHECK(max_abs_diff(kron(a, b, c), kron(a, kron(b, c))) <= 1e-13);
}

TEST_CASE("kron mixed-product identity") {
  const ComplexMatrix a = random_matrix(3, 3, 31);
  const ComplexMatrix b = random_matrix(2, 2, 32);
  const ComplexMatrix c = random_matrix(3, 3, 33);
  const ComplexMatrix d = random_matrix(2, 2, 34);
  CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
}

TEST_CASE("apply_kron equals the materialized product") {
  SUBCASE("square factors, multiple columns") {
    const ComplexMatrix a = random_matrix(4, 4, 41);
    const ComplexMatrix b = random_matrix(3, 3, 42);
    const ComplexMatrix x = random_matrix(12, 5, 43);
    CHECK(max_abs_diff(apply_kron(a, b, x), kron(a, b) * x) <= 1e-12);
  }
  SUBCASE("rectangular factors") {
    const ComplexMatrix a = random_matrix(2, 4, 44);
    const ComplexMatrix b = random_matrix(5, 3, 45);
    const ComplexMatrix x = random_matrix(12, 2, 46);
    CHECK(max_abs_diff(apply_kron(a, b, x), kron(a, b) * x) <= 1e-12);
  }
  SUBCASE("row count mismatch is rejected") {
    const ComplexMatrix a = random_matrix(2, 2, 47);
    CHECK_THROWS_AS(apply_kron(a, a, random_matrix(5, 1, 48)), std::invalid_argument);
  }
}

TEST_CASE("partial trace of a product splits into the factors") {
  const DensityMatrix rho_a = random_density(3, 51);
  const DensityMatrix rho_b = random_density(4, 52);
  const DensityMatrix joint{kron(rho_a.mat, rho_b.mat)};
  CHECK(max_abs_diff(partial_trace(joint, 3, 4, Keep::left).mat, rho_a.mat) <= 1e-13);
  CHECK(max_abs_diff(partial_trace(joint, 3, 4, Keep::right).mat, rho_b.mat) <= 1e-13);
}

TEST_CASE("partial trace preserves the trace") {
  const DensityMatrix rho = random_density(12, 53);
  const Complex t0 = rho.mat.trace();
  CHECK(std::abs(partial_trace(rho, 3, 4, Keep::left).mat.trace() - t0) <= 1e-13);
  CHECK(std::abs(partial_trace(rho, 4, 3, Keep::right).mat.trace() - t0) <= 1e-13);
}

TEST_CASE("reduced_density agrees with partial trace of the outer product") {
  StateVector psi = random_matrix(12, 1, 54);
  psi /= psi.norm();
  const DensityMatrix outer = DensityMatrix::from_pure(psi);
  for (const Keep keep : {Keep::left, Keep::right}) {
    CHECK(max_abs_diff(reduced_density(psi, 4, 3, keep).mat,
                       partial_trace(outer, 4, 3, keep).mat) <= 1e-13);
  }
}

TEST_CASE("purity endpoints and unitary invariance") {
  const auto mixed = purity_and_linear_entropy(DensityMatrix::maximally_mixed(6));
  CHECK(mixed.purity == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(mixed.linear_entropy == doctest::Approx(5.0 / 6.0).epsilon(1e-14));

  StateVector psi = random_matrix(6, 1, 61);
  psi /= psi.norm();
  const DensityMatrix pure = DensityMatrix::from_pure(psi);
  CHECK(purity_and_linear_entropy(pure).purity == doctest::Approx(1.0).epsilon(1e-13));

  const ComplexMatrix u = random_unitary(6, 62);
  const DensityMatrix rho = random_density(6, 63);
  const DensityMatrix rotated{u * rho.mat * u.adjoint()};
  CHECK(std::abs(purity_of(rotated.mat) - purity_of(rho.mat)) <= 1e-13);
}

TEST_CASE("purity rejects a strong imaginary residue") {
  // tr(m^2) = 4i for this matrix; the checked entry point must refuse it.
  // The raw helper stays unchecked by design and just drops the residue.
  ComplexMatrix skew(2, 2);
  skew << 0.0, Complex(0.0, 2.0), 1.0, 0.0;
  CHECK_THROWS_AS((void)purity_and_linear_entropy(DensityMatrix{skew}),
                  std::runtime_error);
  CHECK(purity_of(skew) == 0.0);
}

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix::validated(DensityMatrix::maximally_mixed(4).mat));
  ComplexMatrix wrong_trace = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(DensityMatrix::validated(wrong_trace), std::invalid_argument);
  ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  skew(0, 0) = 0.5;
  skew(1, 1) = 0.5;
  CHECK_THROWS_AS(DensityMatrix::validated(skew), std::invalid_argument);
}

TEST_CASE("eig_general returns every eigenvalue of a diagonal matrix") {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = Complex(0.0, 1.0);
  d(2, 2) = -1.0;
  d(3, 3) = Complex(0.0, -1.0);
  std::vector<Complex> values = eig_general(d);
  REQUIRE(values.size() == 4);
  for (const Complex expected : {Complex(0, -1), Complex(-1, 0), Complex(1, 0), Complex(0, 1)}) {
    double nearest = 1e300;
    for (const Complex v : values) nearest = std::min(nearest, std::abs(v - expected));
    CHECK(nearest <= 1e-14);
  }
}

TEST_CASE("eig_with_vectors satisfies the eigen equation") {
  const ComplexMatrix a = random_matrix(20, 20, 71);
  const Eigensystem es = eig_with_vectors(a);
  REQUIRE(es.values.size() == 20);
  double worst = 0.0;
  for (Index k = 0; k < 20; ++k) {
    worst = std::max(worst,
                     (a * es.vectors.col(k) - es.values[k] * es.vectors.col(k)).norm());
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("unitarity defect separates unitaries from the rest") {
  CHECK(unitarity_defect(random_unitary(9, 81)) <= 1e-13);
  CHECK(unitarity_defect(2.0 * ComplexMatrix::Identity(3, 3)) == doctest::Approx(3.0));
}
