// Critical points of the shifted cosine sum H_d inside the fundamental triangle
// of the affine Weyl group of A2, and their images as critical points of Q_d.
//
// All interior critical points sit on the lattice (i / 6d, j / 6d). The scan
// below finds them numerically; the family parametrizations reproduce the same
// set in closed form and must agree with the scan exactly.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodal/errors.hpp"
#include "nodal/folding.hpp"
#include "nodal/numfield.hpp"

namespace nodal {

/// Open triangle u - v > 0, u + 2v > 0, 2u + v < 1.
struct FundamentalTriangle {
  static bool contains(const Rational& u, const Rational& v);
  /// Exact test for the lattice point (i / 6d, j / 6d).
  static bool contains_lattice(int i, int j, int d);
  static bool on_boundary(const Rational& u, const Rational& v);
};

enum class Family { A, B1, B2, C1, C2 };

std::string_view family_tag(Family f);
int family_value(Family f);
/// Closed-form number of interior points of a family, d divisible by 3.
std::int64_t family_count_formula(Family f, int d);
inline constexpr std::array<Family, 5> kAllFamilies{Family::A, Family::B1, Family::B2, Family::C1, Family::C2};

/// Family of a critical point from its value and lattice residues (i mod 6, j mod 6).
std::optional<Family> classify_residue(int value, int i_mod6, int j_mod6);

using Mat2 = std::array<std::array<double, 2>, 2>;

inline double det(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

enum class Morse { Maximum, Minimum, Saddle, Degenerate };
Morse morse_type(const Mat2& hessian);

/// Closed-form second derivatives of trig_H.
Mat2 hessian_H(int d, TrigPoint pt);

struct CriticalPoint {
  int i = 0;
  int j = 0;
  Rational u;
  Rational v;
  int value = 0;
  Family family = Family::A;
  double hessian_det = 0.0;
  std::complex<double> image_x;
  std::complex<double> image_y;

  TrigPoint trig_point() const { return {u.get_d(), v.get_d()}; }
};

struct ScanTolerances {
  double grad_per_degree = 1e-7;  // gradient threshold is this times d
  double value = 1e-8;
};

/// Numeric scan of every interior lattice point; sorted by (i, j).
/// Throws VerificationError if a retained point has a value outside {6, -3, -2}.
std::vector<CriticalPoint> brute_force_scan(int d, const ScanTolerances& tol = {});

/// Smallest gradient norm among interior lattice points the scan rejects.
double min_rejected_gradient(int d, const ScanTolerances& tol = {});

/// Closed-form families filtered to the interior; sorted by (i, j).
std::vector<CriticalPoint> family_points(int d);

/// family_points, checked against brute_force_scan; throws VerificationError on mismatch.
std::vector<CriticalPoint> family_enumerate(int d, const ScanTolerances& tol = {});

struct FamilyCount {
  Family family;
  int value;
  std::int64_t count_formula;
  std::int64_t count_bruteforce;
};

struct FamilyCensus {
  int d = 0;
  std::vector<FamilyCount> families;
  std::map<int, std::int64_t> value_totals;  // keyed by critical value
  std::int64_t total = 0;
  std::int64_t distinct_images = 0;
};

/// Closed-form per-value counts: N_6, N_{-3}, N_{-2}.
std::int64_t lemma_count(int value, int d);

/// Deduplicates images under h (threshold 1e-6) and tallies families.
/// Throws VerificationError when two points share an image or the image count is not (d-1)^2.
FamilyCensus image_census(const std::vector<CriticalPoint>& points, int d);

void require_multiple_of_three(int d, std::string_view what);

}  // namespace nodal
