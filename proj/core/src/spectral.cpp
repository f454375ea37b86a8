#include "bakerlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bakerlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

std::vector<double> eigenphases(const ComplexMatrix& u) {
  const std::vector<Complex> values = eig_general(u);
  std::vector<double> phases;
  phases.reserve(values.size());
  double worst = 0.0;
  for (const Complex& lambda : values) {
    worst = std::max(worst, std::abs(std::abs(lambda) - 1.0));
  }
  if (worst > 1e-6) {
    throw std::runtime_error("eigenvalue moduli deviate from 1 by " + std::to_string(worst) +
                             "; matrix is not unitary enough for phase statistics");
  }
  for (const Complex& lambda : values) {
    double phi = std::atan2(lambda.imag(), lambda.real());
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    phases.push_back(phi);
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

std::vector<double> unit_mean_spacings(const std::vector<double>& phases) {
  const std::size_t n = phases.size();
  if (n < 2) throw std::invalid_argument("need at least two phases for spacings");
  if (!std::is_sorted(phases.begin(), phases.end())) {
    throw std::invalid_argument("phases must be sorted ascending");
  }
  if (phases.front() < 0.0 || phases.back() >= kTwoPi) {
    throw std::invalid_argument("phases must lie in [0, 2pi)");
  }
  const double scale = static_cast<double>(n) / kTwoPi;
  std::vector<double> spacings;
  spacings.reserve(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    spacings.push_back((phases[k + 1] - phases[k]) * scale);
  }
  spacings.push_back((phases.front() + kTwoPi - phases.back()) * scale);
  return spacings;
}

const char* reference_name(ReferenceKind kind) {
  switch (kind) {
    case ReferenceKind::poisson: return "poisson";
    case ReferenceKind::goe: return "goe";
    case ReferenceKind::gue: return "gue";
  }
  return "unknown";
}

double reference_pdf(ReferenceKind kind, double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be nonnegative");
  switch (kind) {
    case ReferenceKind::poisson:
      return std::exp(-s);
    case ReferenceKind::goe:
      return 0.5 * std::numbers::pi * s * std::exp(-0.25 * std::numbers::pi * s * s);
    case ReferenceKind::gue: {
      const double c = 32.0 / (std::numbers::pi * std::numbers::pi);
      return c * s * s * std::exp(-4.0 * s * s / std::numbers::pi);
    }
  }
  return 0.0;
}

double reference_cdf(ReferenceKind kind, double s) {
  if (s <= 0.0) return 0.0;
  switch (kind) {
    case ReferenceKind::poisson:
      return 1.0 - std::exp(-s);
    case ReferenceKind::goe:
      return 1.0 - std::exp(-0.25 * std::numbers::pi * s * s);
    case ReferenceKind::gue: {
      const double x = 2.0 * s / std::sqrt(std::numbers::pi);
      return std::erf(x) - (4.0 * s / std::numbers::pi) * std::exp(-4.0 * s * s / std::numbers::pi);
    }
  }
  return 0.0;
}

double ks_distance(const std::vector<double>& spacings, ReferenceKind kind) {
  if (spacings.empty()) throw std::invalid_argument("need at least one spacing");
  std::vector<double> sorted = spacings;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = reference_cdf(kind, sorted[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, f - lo, hi - f});
  }
  return d;
}

Index SpacingHistogram::in_range() const {
  Index total = 0;
  for (const Index c : counts) total += c;
  return total;
}

SpacingHistogram spacing_histogram(const std::vector<double>& spacings, Index bins, double s_max) {
  if (bins < 1) throw std::invalid_argument("need at least one bin");
  if (!(s_max > 0.0)) throw std::invalid_argument("s_max must be positive");

  SpacingHistogram h;
  h.n_levels = static_cast<Index>(spacings.size());
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  for (Index k = 0; k <= bins; ++k) {
    h.bin_edges[static_cast<std::size_t>(k)] =
        s_max * static_cast<double>(k) / static_cast<double>(bins);
  }

  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (const double s : spacings) {
    if (s < 0.0 || s > s_max) continue;
    Index k = static_cast<Index>(std::floor(s / s_max * static_cast<double>(bins)));
    if (k == bins) k = bins - 1;  // s == s_max lands in the last bin
    ++h.counts[static_cast<std::size_t>(k)];
  }

  h.density.assign(static_cast<std::size_t>(bins), 0.0);
  const Index in_range = h.in_range();
  if (in_range > 0) {
    const double width = s_max / static_cast<double>(bins);
    for (Index k = 0; k < bins; ++k) {
      h.density[static_cast<std::size_t>(k)] =
          static_cast<double>(h.counts[static_cast<std::size_t>(k)]) /
          (static_cast<double>(in_range) * width);
    }
  }
  return h;
}

SymmetrySectors split_by_symmetry(const ComplexMatrix& u, const ComplexMatrix& p, double tol) {
  if (u.rows() != u.cols() || p.rows() != p.cols() || u.rows() != p.rows()) {
    throw std::invalid_argument("operator and symmetry must be square and of equal dimension");
  }
  const Index n = u.rows();
  const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  const double invol = (p * p - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (herm > tol || invol > tol) {
    throw std::invalid_argument("symmetry must be a Hermitian involution (defects " +
                                std::to_string(herm) + ", " + std::to_string(invol) + ")");
  }
  const double comm = (u * p - p * u).cwiseAbs().maxCoeff();
  if (comm > tol) {
    throw std::invalid_argument("operator does not commute with the candidate symmetry "
                                "(defect " + std::to_string(comm) +
                                "); sector spectra would be meaningless");
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("symmetry eigendecomposition failed to converge");
  }

  Index n_odd = 0;
  for (Index k = 0; k < n; ++k) {
    if (es.eigenvalues()[k] < 0.0) ++n_odd;
  }
  // Eigenvalues ascend, so the -1 block precedes the +1 block.
  const ComplexMatrix v_odd = es.eigenvectors().leftCols(n_odd);
  const ComplexMatrix v_even = es.eigenvectors().rightCols(n - n_odd);

  SymmetrySectors sectors;
  sectors.even = v_even.adjoint() * u * v_even;
  sectors.odd = v_odd.adjoint() * u * v_odd;
  return sectors;
}

}  // namespace bakerlab
