#include "bakerlab/baker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bakerlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_even(Index d, const char* who) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": dimension must be even and >= 2");
}

} // namespace

double grid_value(Index d, Index k) { return (double(k) + 0.5) / double(d); }

ComplexMatrix fourier_g(Index d) {
  if (d < 1) throw std::invalid_argument("fourier_g: dimension must be >= 1");
  const double norm = 1.0 / std::sqrt(double(d));
  ComplexMatrix g(d, d);
  // The phase is -2pi (2m+1)(2n+1) / (4D); reducing the integer numerator
  // mod 4D keeps the argument of polar() small for large D.
  const std::int64_t period = 4 * d;
  for (Index m = 0; m < d; ++m)
    for (Index n = 0; n < d; ++n) {
      const std::int64_t k = (2 * std::int64_t(m) + 1) * (2 * std::int64_t(n) + 1) % period;
      g(m, n) = std::polar(norm, -kTwoPi * double(k) / double(period));
    }
  return g;
}

ComplexMatrix baker_mixed(Index d, Stacking stacking) {
  require_even(d, "baker_mixed");
  const Index h = d / 2;
  const ComplexMatrix gh = fourier_g(h);
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  if (stacking == Stacking::normal) {
    m.topLeftCorner(h, h) = gh;
    m.bottomRightCorner(h, h) = gh;
  } else {
    m.topRightCorner(h, h) = gh;
    m.bottomLeftCorner(h, h) = gh;
  }
  return m;
}

ComplexMatrix baker_unitary(Index d, Stacking stacking) {
  require_even(d, "baker_unitary");
  const Index h = d / 2;
  const ComplexMatrix gd_adj = fourier_g(d).adjoint();
  const ComplexMatrix gh = fourier_g(h);
  // B = G_D^-1 * blockdiag(G_h, G_h); only two D x h products are needed.
  ComplexMatrix b(d, d);
  if (stacking == Stacking::normal) {
    b.leftCols(h) = gd_adj.leftCols(h) * gh;
    b.rightCols(h) = gd_adj.rightCols(h) * gh;
  } else {
    b.leftCols(h) = gd_adj.rightCols(h) * gh;
    b.rightCols(h) = gd_adj.leftCols(h) * gh;
  }
  return b;
}

double generating_exponent(double p, double q, int eps) {
  if (eps != 0 && eps != 1)
    throw std::invalid_argument("generating_exponent: eps must be 0 or 1");
  return 2.0 * p * q - eps * p - eps * q;
}

bool in_allowed_domain(double p, double q, int eps) {
  if (eps != 0 && eps != 1)
    throw std::invalid_argument("in_allowed_domain: eps must be 0 or 1");
  return primary_bit(p) == eps && primary_bit(q) == eps;
}

double vanvleck_check(Index d, Stacking stacking) {
  require_even(d, "vanvleck_check");
  const ComplexMatrix mixed = baker_mixed(d, stacking);
  const double amp = std::sqrt(2.0 / double(d));
  double worst = 0.0;
  for (Index m = 0; m < d; ++m) {
    const double p = grid_value(d, m);
    for (Index n = 0; n < d; ++n) {
      const double q = grid_value(d, n);
      const int eps = primary_bit(q);
      bool allowed;
      double w;
      if (stacking == Stacking::normal) {
        allowed = primary_bit(p) == eps;
        w = generating_exponent(p, q, eps);
      } else {
        allowed = primary_bit(p) == 1 - eps;
        w = 2.0 * p * q - eps * p - (1 - eps) * q;
      }
      const Complex expected =
          allowed ? std::polar(amp, -kTwoPi * double(d) * w) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(mixed(m, n) - expected));
    }
  }
  return worst;
}

ComplexMatrix reflection_r(Index d) {
  if (d < 1) throw std::invalid_argument("reflection_r: dimension must be >= 1");
  ComplexMatrix r = ComplexMatrix::Zero(d, d);
  for (Index m = 0; m < d; ++m) r(d - 1 - m, m) = 1.0;
  return r;
}

}  // namespace bakerlab
