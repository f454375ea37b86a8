#pragma once

// Eigenphase statistics of unitary propagators: circular unfolded spacings,
// random-matrix reference distributions, Kolmogorov-Smirnov distances,
// spacing histograms and symmetry-sector splitting.

#include <vector>

#include "bakerlab/linalg.hpp"

namespace bakerlab {

// Sorted eigenphases in [0, 2pi). Throws std::runtime_error when any
// eigenvalue modulus strays from 1 by more than 1e-6 (the matrix is then
// not usefully unitary and phases would be meaningless).
std::vector<double> eigenphases(const ComplexMatrix& u);

// Consecutive phase gaps on the circle, including the wrap-around gap,
// scaled by n/(2pi) so the mean spacing is exactly 1. Input must be sorted;
// n phases give n spacings.
std::vector<double> unit_mean_spacings(const std::vector<double>& phases);

enum class ReferenceKind { poisson, goe, gue };

const char* reference_name(ReferenceKind kind);

// Wigner-surmise family at unit mean spacing. Negative s is rejected.
double reference_pdf(ReferenceKind kind, double s);
double reference_cdf(ReferenceKind kind, double s);

// sup_s |F_empirical(s) - F_reference(s)|, evaluated at the jump points.
double ks_distance(const std::vector<double>& spacings, ReferenceKind kind);

struct SpacingHistogram {
  std::vector<double> bin_edges;  // bins+1 ascending edges over [0, s_max]
  std::vector<Index> counts;      // per bin
  std::vector<double> density;    // counts normalized so the histogram integrates to 1
  Index n_levels = 0;             // spacings fed in, including any beyond s_max

  Index in_range() const;
  double bin_center(Index k) const { return 0.5 * (bin_edges[k] + bin_edges[k + 1]); }
};

// Density histogram of spacings over [0, s_max]; spacings beyond s_max are
// excluded from the counts and the normalization.
SpacingHistogram spacing_histogram(const std::vector<double>& spacings, Index bins = 30,
                                   double s_max = 4.0);

struct SymmetrySectors {
  ComplexMatrix even;
  ComplexMatrix odd;
};

// Splits u into the two eigensectors of an involutive Hermitian symmetry p.
// Throws std::invalid_argument when p is not an involution or does not
// commute with u within tol: quoting sector spectra of a non-symmetry would
// be silently wrong, so the check is mandatory.
SymmetrySectors split_by_symmetry(const ComplexMatrix& u, const ComplexMatrix& p,
                                  double tol = 1e-10);

}  // namespace bakerlab
