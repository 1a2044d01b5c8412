// Nodal surfaces Q_d(x, y) + T_d(w) = 0 (kind U) and the baseline
// P_d(x, y) + T_d(w) = 0 (kind V), the four-variable hypersurfaces
// Q_d(x1, y1) - Q_d(x2, y2) = 0, and the real variants obtained from
// x = X + iY, y = X - iY, w = Z.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "nodal/critical.hpp"
#include "nodal/poly.hpp"

namespace nodal {

enum class SurfaceKind { U, V };

struct SurfaceSpec {
  int d = 0;
  SurfaceKind kind = SurfaceKind::U;
  MultiPoly poly{3};
};

/// planar(x, y) + T_d(w) as a trivariate polynomial.
MultiPoly assemble_surface(const MultiPoly& planar, int d);

SurfaceSpec build_surface(int d, SurfaceKind kind);

/// Node counts; exact integer formulas for d divisible by 3.
std::int64_t count_singular_U(int d);
std::int64_t count_singular_V(int d);
std::int64_t mu_lower_bound(int n);

struct NodeTolerances {
  double residual = 1e-8;  // |F| and |grad F| relative to the coefficient scale
  double hessian = 1e-4;   // |det Hess| relative to scale^dimension
  /// Compare |det Hess| against the product of its row norms instead of scale^dimension.
  /// The absolute bound loses about a factor 10 per step of 3 in degree and rejects d = 12.
  bool hessian_relative = false;
};

struct SingularPoint {
  std::complex<double> x, y, w;
  int q_value = 0;
  int t_value = 0;
  double residual_f = 0.0;
  double residual_grad = 0.0;
  double hessian3_det = 0.0;  // modulus
  int source_i = 0, source_j = 0, chebyshev_k = 0;
};

/// Pairs interior critical points of Q_d with Chebyshev critical points whose values cancel,
/// then certifies each pair as an ordinary double point of `surface`.
/// Throws VerificationError on any residual or Hessian failure.
std::vector<SingularPoint> enumerate_singular(const MultiPoly& surface, int d,
                                              const std::vector<CriticalPoint>& critical,
                                              const NodeTolerances& tol = {});

/// Full pipeline for U_d; also checks the point count against count_singular_U.
std::vector<SingularPoint> enumerate_singular_U(int d, const NodeTolerances& tol = {});

struct InfinityCheck {
  bool ok = false;
  MultiPoly form{3};
  std::string diagnostic;
};

/// The top-degree form of a degree-d surface must be omega x^d + omega^2 y^d + 2^{d-2} w^d.
InfinityCheck check_degree_form(const MultiPoly& surface, int d);
InfinityCheck infinity_check(int d);

struct HypersurfaceSpec {
  int n = 0;
  MultiPoly poly{4};
};

HypersurfaceSpec hypersurface_build(int n);
std::int64_t hypersurface_count(int n);
/// Same count for P_{3n}(x1, y1) - P_{3n}(x2, y2).
std::int64_t chmutov_hypersurface_count(int n);
std::int64_t hypersurface_excess(int n);

struct HyperSingularPoint {
  std::array<std::complex<double>, 4> coords;
  int value = 0;
  double residual_f = 0.0;
  double residual_grad = 0.0;
  double hessian4_det = 0.0;
};

std::vector<HyperSingularPoint> enumerate_singular_hyper(int n, const NodeTolerances& tol = {});

/// U_d after x = X + iY, y = X - iY, w = Z; throws VerificationError on a non-real coefficient.
MultiPoly real_variant_of(const MultiPoly& surface);
MultiPoly real_variant(int d);
inline const std::vector<std::string> kRealVariantVars{"X", "Y", "Z"};

struct RealNode {
  double X, Y, Z;
  double residual;
};

/// Singular points of U_d that are real points of the real variant (numerical report only).
std::vector<RealNode> real_nodes(int d, double tol = 1e-8);

/// Modulus of the determinant of a small complex matrix.
double det_abs(std::vector<std::vector<std::complex<double>>> m);

}  // namespace nodal
