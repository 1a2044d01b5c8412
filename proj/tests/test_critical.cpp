#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "nodal/critical.hpp"

using namespace nodal;

namespace {

double kappa(int d) { return 8.0 * std::numbers::pi * std::numbers::pi * d * d; }

std::map<int, int> totals(const std::vector<CriticalPoint>& pts) {
  std::map<int, int> t{{6, 0}, {-3, 0}, {-2, 0}};
  for (const auto& p : pts) ++t[p.value];
  return t;
}

int family_size(const std::vector<CriticalPoint>& pts, Family f) {
  return static_cast<int>(std::count_if(pts.begin(), pts.end(), [f](const auto& p) { return p.family == f; }));
}

// Central second differences of trig_H.
Mat2 hessian_fd(int d, TrigPoint pt, double h = 1e-5) {
  auto f = [&](double du, double dv) { return trig_H(d, {pt.u + du, pt.v + dv}); };
  Mat2 m;
  m[0][0] = (f(h, 0) - 2 * f(0, 0) + f(-h, 0)) / (h * h);
  m[1][1] = (f(0, h) - 2 * f(0, 0) + f(0, -h)) / (h * h);
  m[0][1] = m[1][0] = (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
  return m;
}

}  // namespace

TEST_CASE("fundamental triangle membership is exact") {
  CHECK(FundamentalTriangle::contains(Rational(1, 3), Rational(0)));
  CHECK_FALSE(FundamentalTriangle::contains(Rational(0), Rational(0)));
  CHECK(FundamentalTriangle::on_boundary(Rational(0), Rational(0)));
  CHECK(FundamentalTriangle::on_boundary(Rational(1, 6), Rational(1, 6)));
  CHECK(FundamentalTriangle::on_boundary(Rational(1, 2), Rational(0)));
  CHECK(FundamentalTriangle::on_boundary(Rational(2, 9), Rational(-1, 9)));
  CHECK_FALSE(FundamentalTriangle::contains(Rational(1, 1), Rational(0)));
  for (int d : {3, 6, 9})
    for (const auto& p : brute_force_scan(d)) {
      CHECK(FundamentalTriangle::contains(p.u, p.v));
      CHECK_FALSE(FundamentalTriangle::on_boundary(p.u, p.v));
      Rational expected(p.i, 6 * d);
      expected.canonicalize();
      CHECK(p.u == expected);
    }
}

TEST_CASE("lattice scan census") {
  const std::map<int, std::map<int, int>> expected{
      {3, {{6, 0}, {-3, 1}, {-2, 3}}},
      {6, {{6, 3}, {-3, 7}, {-2, 15}}},
      {9, {{6, 9}, {-3, 19}, {-2, 36}}},
  };
  for (const auto& [d, want] : expected) {
    const auto pts = brute_force_scan(d);
    CHECK(totals(pts) == want);
    CHECK(pts.size() == static_cast<std::size_t>((d - 1) * (d - 1)));
  }
  for (int d = 3; d <= 18; d += 3) {
    const auto t = totals(brute_force_scan(d));
    for (int v : {6, -3, -2}) CHECK(t.at(v) == lemma_count(v, d));
  }
}

TEST_CASE("family sizes") {
  const auto six = family_points(6);
  CHECK(family_size(six, Family::B1) == 4);
  CHECK(family_size(six, Family::B2) == 3);
  CHECK(family_size(six, Family::C1) == 10);
  CHECK(family_size(six, Family::C2) == 5);
  CHECK(family_size(six, Family::A) == 3);
  CHECK(family_size(family_points(3), Family::A) == 0);
  for (int d = 3; d <= 15; d += 3) {
    const auto pts = family_points(d);
    for (Family f : kAllFamilies) CHECK(family_size(pts, f) == family_count_formula(f, d));
  }
}

TEST_CASE("families reproduce the lattice scan") {
  for (int d : {3, 6, 9, 12, 15}) {
    const auto fam = family_enumerate(d);
    const auto scan = brute_force_scan(d);
    REQUIRE(fam.size() == scan.size());
    for (std::size_t k = 0; k < fam.size(); ++k) {
      CHECK(fam[k].i == scan[k].i);
      CHECK(fam[k].j == scan[k].j);
      CHECK(fam[k].family == scan[k].family);
      CHECK(std::abs(trig_H(d, fam[k].trig_point()) - fam[k].value) < 1e-8);
    }
  }
}

TEST_CASE("family (a) needs the 3d denominator") {
  // Printed parametrization u = (3k-2)/d, v = (3l+1)/d lands on value -3.
  const int d = 6;
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l) {
      const TrigPoint printed{(3.0 * k - 2) / d, (3.0 * l + 1) / d};
      CHECK(trig_H(d, printed) == doctest::Approx(-3.0));
      const TrigPoint corrected{(3.0 * k - 2) / (3 * d), (3.0 * l + 1) / (3 * d)};
      CHECK(trig_H(d, corrected) == doctest::Approx(6.0));
    }
}

TEST_CASE("residue table is derived from d = 6 and stable in d") {
  std::set<std::tuple<int, int, int>> at6;
  for (const auto& p : brute_force_scan(6)) at6.insert({p.value, ((p.i % 6) + 6) % 6, ((p.j % 6) + 6) % 6});
  const std::set<std::tuple<int, int, int>> table{{6, 2, 2}, {-3, 0, 0}, {-3, 4, 4}, {-2, 5, 2}, {-2, 5, 5}, {-2, 2, 5}};
  CHECK(at6 == table);
  for (int d = 3; d <= 18; d += 3) {
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& p : brute_force_scan(d)) seen.insert({p.value, ((p.i % 6) + 6) % 6, ((p.j % 6) + 6) % 6});
    for (const auto& r : seen) CHECK(table.count(r) == 1);
  }
  CHECK_FALSE(classify_residue(6, 0, 0));
  CHECK(classify_residue(-2, 2, 5) == Family::C2);
}

TEST_CASE("Hessian at the three kinds of critical points") {
  const int d = 6;
  const double k = kappa(d);
  // value 6: (1/18, 1/18)
  const auto hmax = hessian_H(d, {1.0 / 18, 1.0 / 18});
  CHECK(det(hmax) == doctest::Approx(3 * k * k).epsilon(1e-12));
  CHECK(morse_type(hmax) == Morse::Maximum);
  // value -3: (1/3, 0)
  const auto hmin = hessian_H(d, {1.0 / 3, 0.0});
  CHECK(det(hmin) == doctest::Approx(0.75 * k * k).epsilon(1e-12));
  CHECK(morse_type(hmin) == Morse::Minimum);
  // value -2: (5/36, 1/18)
  const auto hsad = hessian_H(d, {5.0 / 36, 1.0 / 18});
  CHECK(det(hsad) == doctest::Approx(-k * k).epsilon(1e-12));
  CHECK(morse_type(hsad) == Morse::Saddle);

  CHECK(morse_type(Mat2{{{1.0, 1.0}, {1.0, 1.0}}}) == Morse::Degenerate);

  for (TrigPoint pt : {TrigPoint{1.0 / 18, 1.0 / 18}, TrigPoint{1.0 / 3, 0.0}, TrigPoint{5.0 / 36, 1.0 / 18}, TrigPoint{0.21, 0.03}}) {
    const auto a = hessian_H(d, pt), f = hessian_fd(d, pt);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(std::abs(a[r][c] - f[r][c]) < 1e-4 * k);
  }
}

TEST_CASE("every critical point is non-degenerate with the matching Morse type") {
  for (int d : {3, 6, 9, 12}) {
    const double k = kappa(d);
    std::map<Morse, int> morse;
    for (const auto& p : brute_force_scan(d)) {
      CHECK(std::abs(p.hessian_det) >= 0.1 * k * k);
      const auto type = morse_type(hessian_H(d, p.trig_point()));
      ++morse[type];
      if (p.value == 6) CHECK(type == Morse::Maximum);
      if (p.value == -3) CHECK(type == Morse::Minimum);
      if (p.value == -2) CHECK(type == Morse::Saddle);
    }
    CHECK(morse[Morse::Maximum] == lemma_count(6, d));
    CHECK(morse[Morse::Minimum] == lemma_count(-3, d));
    CHECK(morse[Morse::Saddle] == lemma_count(-2, d));
  }
}

TEST_CASE("scan tolerances are separated") {
  const ScanTolerances tol;
  for (int d : {3, 6, 9, 12}) CHECK(min_rejected_gradient(d, tol) >= 10 * tol.grad_per_degree * d);
}

TEST_CASE("distinct images") {
  for (int d : {3, 6, 9, 12}) {
    const auto census = image_census(brute_force_scan(d), d);
    CHECK(census.distinct_images == static_cast<std::int64_t>(d - 1) * (d - 1));
    CHECK(census.total == census.distinct_images);
    for (const auto& f : census.families) CHECK(f.count_formula == f.count_bruteforce);
  }
  // the single value -3 point at d = 3 is (1/3, 0), mapped to the origin
  const auto three = brute_force_scan(3);
  const auto it = std::find_if(three.begin(), three.end(), [](const auto& p) { return p.value == -3; });
  REQUIRE(it != three.end());
  CHECK(it->u == Rational(1, 3));
  CHECK(it->v == 0);
  CHECK(std::abs(it->image_x) < 1e-12);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(brute_force_scan(4), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_scan(0), std::invalid_argument);
  CHECK_THROWS_AS(family_points(5), std::invalid_argument);

  auto pts = brute_force_scan(6);
  pts.push_back(pts.front());
  CHECK_THROWS_AS(image_census(pts, 6), VerificationError);

  auto missing = brute_force_scan(6);
  missing.pop_back();
  CHECK_THROWS_AS(image_census(missing, 6), VerificationError);

  // a gradient threshold this loose keeps regular points, whose values are not critical values
  ScanTolerances loose;
  loose.grad_per_degree = 100.0;
  CHECK_THROWS_AS(brute_force_scan(6, loose), VerificationError);
}
