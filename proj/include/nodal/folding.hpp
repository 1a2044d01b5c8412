// A2 folding polynomials and their trigonometric ground truth.
//
// The generalized cosine h(u, v) = (h1, conj(h1)) with
//   h1 = e^{-2 pi i u} + e^{-2 pi i v} + e^{2 pi i (u + v)}
// folds the affine Weyl group orbits of the plane. Any invariant trigonometric
// sum is a polynomial in (h1, h2); the constructions below are those
// polynomials for the plain and phase-shifted cosine sums.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "nodal/poly.hpp"

namespace nodal {

struct TrigPoint {
  double u = 0.0;
  double v = 0.0;
};

/// (h1, h2) at a point of the real (u, v) plane.
std::pair<std::complex<double>, std::complex<double>> trig_h(TrigPoint pt);

/// Jacobian of (h1, h2) with respect to (u, v); rows are h1, h2.
std::array<std::array<std::complex<double>, 2>, 2> trig_h_jacobian(TrigPoint pt);

/// 2cos(2 pi d u) + 2cos(2 pi d v) + 2cos(2 pi d (u+v)).
double trig_C(int d, TrigPoint pt);

/// 2cos(2 pi d u - 2pi/3) + 2cos(2 pi d v - 2pi/3) + 2cos(2 pi d (u+v) + 2pi/3).
double trig_H(int d, TrigPoint pt);

/// Gradient of trig_H with respect to (u, v).
std::array<double, 2> trig_H_gradient(int d, TrigPoint pt);

/// Power sums p_0..p_d of the roots of z^3 - x z^2 + y z - 1, built by the
/// Newton recurrence p_k = x p_{k-1} - y p_{k-2} + p_{k-3}, p_0 = 3.
class FoldingCache {
 public:
  explicit FoldingCache(int d);

  int max_degree() const { return static_cast<int>(table_.size()) - 1; }
  const MultiPoly& operator[](int k) const { return table_.at(static_cast<std::size_t>(k)); }

 private:
  std::vector<MultiPoly> table_;
};

/// p_d(x, y): the polynomial with p_d(h(u, v)) = h1(du, dv).
MultiPoly power_sum(int d);

/// Swaps the two variables of a bivariate polynomial.
MultiPoly swap_xy(const MultiPoly& p);

/// P_d = p_d(x, y) + p_d(y, x).
MultiPoly folding_P(int d);

/// Q_d = omega p_d(x, y) + omega^2 p_d(y, x), so that Q_d(h(u, v)) = H_d(u, v).
MultiPoly folding_Q(int d);

/// T_d(w) = (t_d(w) + 5) / 2 with t_d the first-kind Chebyshev polynomial.
/// Interior critical values are 2 (odd k) and 3 (even k) at w_k = cos(k pi / d).
MultiPoly chebyshev_T(int d);

struct ChebyshevCritical {
  int k;
  double w;
  int value;  // 2 or 3
};

/// Critical points w_k = cos(k pi / d), k = 1..d-1, with their exact critical values.
std::vector<ChebyshevCritical> chebyshev_critical_points(int d);

}  // namespace nodal
