#include "bakerlab/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace bakerlab {

double reduce_mod1(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0; // x just below an integer rounds up
  return r;
}

int primary_bit(double q) { return q >= 0.5 ? 1 : 0; }

PhasePoint baker_step(const PhasePoint& x, Stacking stacking) {
  const int eps = primary_bit(x.q);
  const double q1 = reduce_mod1(2.0 * x.q - eps);
  const int shift = stacking == Stacking::normal ? eps : 1 - eps;
  const double p1 = reduce_mod1(0.5 * (x.p + shift));
  return PhasePoint{p1, q1};
}

CoupledPhasePoint coupled_cnot_step(const CoupledPhasePoint& x) {
  const int eps_c = primary_bit(x.control.q);
  const int eps_t = primary_bit(x.target.q);
  CoupledPhasePoint y;
  y.control = baker_step(x.control, Stacking::normal);
  y.target.q = reduce_mod1(2.0 * x.target.q - eps_t);
  y.target.p = reduce_mod1(0.5 * (x.target.p + (eps_t ^ eps_c)));
  return y;
}

double DyadicPoint::q() const {
  // Horner from the least significant stored bit keeps every operation exact.
  double v = 0.0;
  for (auto it = future.rbegin(); it != future.rend(); ++it)
    v = 0.5 * (v + double(*it));
  return v;
}

double DyadicPoint::p() const {
  double v = 0.0;
  for (auto it = past.rbegin(); it != past.rend(); ++it)
    v = 0.5 * (v + double(*it));
  return v;
}

DyadicPoint DyadicPoint::shifted() const {
  DyadicPoint y;
  const std::uint8_t eps0 = future.empty() ? 0 : future.front();
  y.past.reserve(past.size() + 1);
  y.past.push_back(eps0);
  y.past.insert(y.past.end(), past.begin(), past.end());
  if (!future.empty())
    y.future.assign(future.begin() + 1, future.end());
  return y;
}

DyadicPoint DyadicPoint::shifted(int steps) const {
  if (steps < 0) throw std::invalid_argument("shifted: steps must be >= 0");
  DyadicPoint y = *this;
  for (int i = 0; i < steps; ++i) y = y.shifted();
  return y;
}

std::vector<std::uint8_t> encode_symbols(const DyadicPoint& x,
                                         std::size_t steps) {
  std::vector<std::uint8_t> out(steps, 0);
  for (std::size_t i = 0; i < steps && i < x.future.size(); ++i)
    out[i] = x.future[i] ? 1 : 0;
  return out;
}

DyadicPoint decode_symbols(std::vector<std::uint8_t> past_bits,
                           std::vector<std::uint8_t> future_bits) {
  for (auto b : past_bits)
    if (b > 1) throw std::invalid_argument("decode_symbols: bits must be 0/1");
  for (auto b : future_bits)
    if (b > 1) throw std::invalid_argument("decode_symbols: bits must be 0/1");
  return DyadicPoint{std::move(past_bits), std::move(future_bits)};
}

}  // namespace bakerlab
