#include "nodal/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <utility>

namespace nodal {

namespace {

constexpr std::array<int, 3> kCriticalValues{6, -3, -2};

int mod6(int k) { return ((k % 6) + 6) % 6; }

CriticalPoint make_point(int d, int i, int j, int value, Family family) {
  CriticalPoint cp;
  cp.i = i;
  cp.j = j;
  cp.u = Rational(i, 6 * d);
  cp.v = Rational(j, 6 * d);
  cp.u.canonicalize();
  cp.v.canonicalize();
  cp.value = value;
  cp.family = family;
  const TrigPoint pt = cp.trig_point();
  cp.hessian_det = det(hessian_H(d, pt));
  std::tie(cp.image_x, cp.image_y) = trig_h(pt);
  return cp;
}

bool index_less(const CriticalPoint& a, const CriticalPoint& b) {
  return std::pair(a.i, a.j) < std::pair(b.i, b.j);
}

}  // namespace

void require_multiple_of_three(int d, std::string_view what) {
  if (d < 3 || d % 3 != 0)
    throw std::invalid_argument(std::string(what) + ": degree must be a positive multiple of 3, got " +
                                std::to_string(d));
}

bool FundamentalTriangle::contains(const Rational& u, const Rational& v) {
  return u - v > 0 && u + 2 * v > 0 && 2 * u + v < 1;
}

bool FundamentalTriangle::contains_lattice(int i, int j, int d) {
  return i - j > 0 && i + 2 * j > 0 && 2 * i + j < 6 * d;
}

bool FundamentalTriangle::on_boundary(const Rational& u, const Rational& v) {
  const bool closed = u - v >= 0 && u + 2 * v >= 0 && 2 * u + v <= 1;
  return closed && !contains(u, v);
}

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B1: return "b1";
    case Family::B2: return "b2";
    case Family::C1: return "c1";
    case Family::C2: return "c2";
  }
  return "?";
}

int family_value(Family f) {
  switch (f) {
    case Family::A: return 6;
    case Family::B1:
    case Family::B2: return -3;
    case Family::C1:
    case Family::C2: return -2;
  }
  return 0;
}

std::int64_t family_count_formula(Family f, int d) {
  require_multiple_of_three(d, "family_count_formula");
  const std::int64_t n = d;
  switch (f) {
    case Family::A: return n * (n - 3) / 6;
    case Family::B1: return 1 + n * (n - 3) / 6;
    case Family::B2: return n * (n - 3) / 6;
    case Family::C1: return n * (n - 1) / 3;
    case Family::C2: return n * (n - 1) / 6;
  }
  return 0;
}

std::optional<Family> classify_residue(int value, int i_mod6, int j_mod6) {
  // Derived from the d = 6 scan; the tests re-derive it and check stability in d.
  struct Entry {
    int value, i, j;
    Family family;
  };
  static constexpr std::array<Entry, 6> table{{
      {6, 2, 2, Family::A},
      {-3, 0, 0, Family::B1},
      {-3, 4, 4, Family::B2},
      {-2, 5, 2, Family::C1},
      {-2, 5, 5, Family::C1},
      {-2, 2, 5, Family::C2},
  }};
  for (const auto& e : table)
    if (e.value == value && e.i == i_mod6 && e.j == j_mod6) return e.family;
  return std::nullopt;
}

Morse morse_type(const Mat2& hessian) {
  const double dt = det(hessian);
  const double scale = std::abs(hessian[0][0]) + std::abs(hessian[1][1]) + 2 * std::abs(hessian[0][1]);
  if (std::abs(dt) <= 1e-12 * scale * scale) return Morse::Degenerate;
  if (dt < 0) return Morse::Saddle;
  return hessian[0][0] < 0 ? Morse::Maximum : Morse::Minimum;
}

Mat2 hessian_H(int d, TrigPoint pt) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr double shift = two_pi / 3.0;
  const double cu = std::cos(two_pi * d * pt.u - shift);
  const double cv = std::cos(two_pi * d * pt.v - shift);
  const double cuv = std::cos(two_pi * d * (pt.u + pt.v) + shift);
  const double k = -8.0 * std::numbers::pi * std::numbers::pi * d * d;
  return {{{k * (cu + cuv), k * cuv}, {k * cuv, k * (cv + cuv)}}};
}

std::vector<CriticalPoint> brute_force_scan(int d, const ScanTolerances& tol) {
  require_multiple_of_three(d, "brute_force_scan");
  const int n = 6 * d;
  const double grad_tol = tol.grad_per_degree * d;
  std::vector<CriticalPoint> out;
  for (int i = 0; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      if (!FundamentalTriangle::contains_lattice(i, j, d)) continue;
      const TrigPoint pt{static_cast<double>(i) / n, static_cast<double>(j) / n};
      const auto g = trig_H_gradient(d, pt);
      if (std::abs(g[0]) >= grad_tol || std::abs(g[1]) >= grad_tol) continue;

      const double value = trig_H(d, pt);
      auto nearest = *std::min_element(kCriticalValues.begin(), kCriticalValues.end(),
                                       [&](int a, int b) { return std::abs(value - a) < std::abs(value - b); });
      if (std::abs(value - nearest) >= tol.value)
        throw VerificationError("brute_force_scan: critical value " + std::to_string(value) + " at (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")/" + std::to_string(n) +
                                " is not in {6, -3, -2}");
      auto family = classify_residue(nearest, mod6(i), mod6(j));
      if (!family)
        throw VerificationError("brute_force_scan: unclassified critical point (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")/" + std::to_string(n));
      out.push_back(make_point(d, i, j, nearest, *family));
    }
  }
  return out;
}

double min_rejected_gradient(int d, const ScanTolerances& tol) {
  require_multiple_of_three(d, "min_rejected_gradient");
  const int n = 6 * d;
  const double grad_tol = tol.grad_per_degree * d;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      if (!FundamentalTriangle::contains_lattice(i, j, d)) continue;
      const auto g = trig_H_gradient(d, {static_cast<double>(i) / n, static_cast<double>(j) / n});
      if (std::abs(g[0]) < grad_tol && std::abs(g[1]) < grad_tol) continue;
      best = std::min(best, std::hypot(g[0], g[1]));
    }
  }
  return best;
}

std::vector<CriticalPoint> family_points(int d) {
  require_multiple_of_three(d, "family_points");
  const int n = 6 * d;
  std::vector<CriticalPoint> out;
  // Fine-lattice index as a function of the family parameters:
  //   a : u = (3k-2)/3d,  v = (3l+1)/3d
  //   b1: u = k/d,        v = (l+1)/d
  //   b2: u = (3k-1)/3d,  v = (3l+2)/3d
  //   c1: u = (6k-1)/6d,  v = (3l+2)/6d
  //   c2: u = (6k-4)/6d,  v = (6l+5)/6d
  struct Param {
    Family family;
    int i_step, i_offset, j_step, j_offset;
  };
  static constexpr std::array<Param, 5> params{{
      {Family::A, 6, -4, 6, 2},
      {Family::B1, 6, 0, 6, 6},
      {Family::B2, 6, -2, 6, 4},
      {Family::C1, 6, -1, 3, 2},
      {Family::C2, 6, -4, 6, 5},
  }};
  for (const auto& p : params) {
    for (int k = -n; k <= n; ++k) {
      const int i = p.i_step * k + p.i_offset;
      if (i <= 0 || i >= n) continue;
      for (int l = -2 * n; l <= 2 * n; ++l) {
        const int j = p.j_step * l + p.j_offset;
        if (j <= -n || j >= n) continue;
        if (FundamentalTriangle::contains_lattice(i, j, d))
          out.push_back(make_point(d, i, j, family_value(p.family), p.family));
      }
    }
  }
  std::sort(out.begin(), out.end(), index_less);
  return out;
}

std::vector<CriticalPoint> family_enumerate(int d, const ScanTolerances& tol) {
  auto families = family_points(d);
  const auto scanned = brute_force_scan(d, tol);
  auto key = [](const CriticalPoint& p) { return std::tuple(p.i, p.j, p.value, p.family); };
  bool same = families.size() == scanned.size();
  for (std::size_t k = 0; same && k < families.size(); ++k) same = key(families[k]) == key(scanned[k]);
  if (!same)
    throw VerificationError("family_enumerate: closed-form families (" + std::to_string(families.size()) +
                            " points) disagree with the lattice scan (" + std::to_string(scanned.size()) +
                            " points) at d = " + std::to_string(d));
  return families;
}

std::int64_t lemma_count(int value, int d) {
  require_multiple_of_three(d, "lemma_count");
  const std::int64_t n = d;
  switch (value) {
    case 6: return n * (n - 3) / 6;
    case -3: return n * n / 3 - n + 1;
    case -2: return n * (n - 1) / 2;
    default: throw std::invalid_argument("lemma_count: value must be 6, -3 or -2");
  }
}

FamilyCensus image_census(const std::vector<CriticalPoint>& points, int d) {
  require_multiple_of_three(d, "image_census");
  FamilyCensus census;
  census.d = d;
  for (Family f : kAllFamilies) {
    const auto brute = std::count_if(points.begin(), points.end(), [f](const auto& p) { return p.family == f; });
    census.families.push_back({f, family_value(f), family_count_formula(f, d), static_cast<std::int64_t>(brute)});
  }
  for (int v : kCriticalValues) census.value_totals[v] = 0;
  for (const auto& p : points) ++census.value_totals[p.value];
  census.total = static_cast<std::int64_t>(points.size());

  constexpr double threshold = 1e-6;
  std::vector<std::pair<std::complex<double>, std::complex<double>>> images;
  for (const auto& p : points) {
    for (const auto& [x, y] : images) {
      if (std::abs(x - p.image_x) < threshold && std::abs(y - p.image_y) < threshold)
        throw VerificationError("image_census: two interior critical points share the image of (" +
                                std::to_string(p.i) + ", " + std::to_string(p.j) + ")");
    }
    images.emplace_back(p.image_x, p.image_y);
  }
  census.distinct_images = static_cast<std::int64_t>(images.size());
  const std::int64_t expected = static_cast<std::int64_t>(d - 1) * (d - 1);
  if (census.distinct_images != expected)
    throw VerificationError("image_census: " + std::to_string(census.distinct_images) +
                            " distinct images, expected " + std::to_string(expected));
  return census;
}

}  // namespace nodal
