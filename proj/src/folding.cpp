#include "nodal/folding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nodal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

}  // namespace

std::pair<std::complex<double>, std::complex<double>> trig_h(TrigPoint pt) {
  const auto h1 = unit(-pt.u) + unit(-pt.v) + unit(pt.u + pt.v);
  const auto h2 = unit(pt.u) + unit(pt.v) + unit(-pt.u - pt.v);
  return {h1, h2};
}

std::array<std::array<std::complex<double>, 2>, 2> trig_h_jacobian(TrigPoint pt) {
  const std::complex<double> i2pi(0.0, kTwoPi);
  const auto a = unit(-pt.u), b = unit(-pt.v), c = unit(pt.u + pt.v);
  const auto dh1_du = i2pi * (c - a);
  const auto dh1_dv = i2pi * (c - b);
  return {{{dh1_du, dh1_dv}, {std::conj(dh1_du), std::conj(dh1_dv)}}};
}

double trig_C(int d, TrigPoint pt) {
  return 2.0 * std::cos(kTwoPi * d * pt.u) + 2.0 * std::cos(kTwoPi * d * pt.v) +
         2.0 * std::cos(kTwoPi * d * (pt.u + pt.v));
}

double trig_H(int d, TrigPoint pt) {
  constexpr double shift = kTwoPi / 3.0;
  return 2.0 * std::cos(kTwoPi * d * pt.u - shift) + 2.0 * std::cos(kTwoPi * d * pt.v - shift) +
         2.0 * std::cos(kTwoPi * d * (pt.u + pt.v) + shift);
}

std::array<double, 2> trig_H_gradient(int d, TrigPoint pt) {
  constexpr double shift = kTwoPi / 3.0;
  const double su = std::sin(kTwoPi * d * pt.u - shift);
  const double sv = std::sin(kTwoPi * d * pt.v - shift);
  const double suv = std::sin(kTwoPi * d * (pt.u + pt.v) + shift);
  const double scale = -2.0 * kTwoPi * d;
  return {scale * (su + suv), scale * (sv + suv)};
}

FoldingCache::FoldingCache(int d) {
  if (d < 0) throw std::invalid_argument("FoldingCache: negative degree");
  const auto x = MultiPoly::variable(2, 0);
  const auto y = MultiPoly::variable(2, 1);
  table_.push_back(MultiPoly::constant(2, Cyclo12(3L)));
  if (d >= 1) table_.push_back(x);
  if (d >= 2) table_.push_back(x * x - Cyclo12(2L) * y);
  for (int k = 3; k <= d; ++k) table_.push_back(x * table_[k - 1] - y * table_[k - 2] + table_[k - 3]);
}

MultiPoly power_sum(int d) { return FoldingCache(d)[d]; }

MultiPoly swap_xy(const MultiPoly& p) {
  if (p.arity() != 2) throw std::invalid_argument("swap_xy: bivariate polynomial expected");
  const std::array<int, 2> swapped{1, 0};
  return p.lift(2, swapped);
}

MultiPoly folding_P(int d) {
  if (d < 1) throw std::invalid_argument("folding_P: degree must be >= 1");
  auto p = power_sum(d);
  return p + swap_xy(p);
}

MultiPoly folding_Q(int d) {
  if (d < 1) throw std::invalid_argument("folding_Q: degree must be >= 1");
  auto p = power_sum(d);
  return Cyclo12::omega() * p + Cyclo12::omega_sq() * swap_xy(p);
}

MultiPoly chebyshev_T(int d) {
  if (d < 1) throw std::invalid_argument("chebyshev_T: degree must be >= 1");
  const auto w = MultiPoly::variable(1, 0);
  MultiPoly prev = MultiPoly::constant(1, Cyclo12(1L));
  MultiPoly cur = w;
  for (int k = 2; k <= d; ++k) {
    MultiPoly next = Cyclo12(2L) * (w * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur += MultiPoly::constant(1, Cyclo12(5L));
  return cur * Cyclo12(Rational(1, 2));
}

std::vector<ChebyshevCritical> chebyshev_critical_points(int d) {
  if (d < 1) throw std::invalid_argument("chebyshev_critical_points: degree must be >= 1");
  std::vector<ChebyshevCritical> out;
  for (int k = 1; k < d; ++k)
    out.push_back({k, std::cos(k * std::numbers::pi / d), k % 2 == 1 ? 2 : 3});
  return out;
}

}  // namespace nodal
