#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nodal/folding.hpp"
#include "nodal/surfaces.hpp"

using namespace nodal;

namespace {

MultiPoly var3(int k) { return MultiPoly::variable(3, k); }
MultiPoly const3(const Rational& r) { return MultiPoly::constant(3, Cyclo12(r)); }

}  // namespace

TEST_CASE("surface assembly") {
  const auto x = var3(0), y = var3(1), w = var3(2);
  const auto u3 = build_surface(3, SurfaceKind::U).poly;
  CHECK(u3 == Cyclo12::omega() * x.pow(3) + Cyclo12::omega_sq() * y.pow(3) + Cyclo12(3L) * x * y +
                  Cyclo12(2L) * w.pow(3) - Cyclo12(Rational(3, 2)) * w + const3(Rational(-1, 2)));
  CHECK(build_surface(6, SurfaceKind::U).poly.degree() == 6);

  const auto diff = build_surface(3, SurfaceKind::V).poly - u3;
  for (const auto& [m, c] : diff.terms()) CHECK(m[2] == 0);

  CHECK_THROWS_AS(build_surface(4, SurfaceKind::U), std::invalid_argument);
  CHECK_THROWS_AS(build_surface(2, SurfaceKind::V), std::invalid_argument);
  CHECK_NOTHROW(build_surface(4, SurfaceKind::V));
}

TEST_CASE("node count formulas") {
  CHECK(count_singular_U(3) == 4);
  CHECK(count_singular_U(6) == 59);
  CHECK(count_singular_U(9) == 220);
  CHECK(count_singular_V(6) == 57);
  CHECK(count_singular_V(9) == 216);
  CHECK(count_singular_U(9) - count_singular_V(9) == 4);
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_singular_U(3 * n) - count_singular_V(3 * n) == (3 * n - 1) / 2);
    CHECK(mu_lower_bound(n) == count_singular_U(3 * n));
    // split by Lemma counts and Chebyshev multiplicities
    const int d = 3 * n;
    CHECK(count_singular_U(d) == lemma_count(-2, d) * (d / 2) + lemma_count(-3, d) * ((d - 1) / 2));
  }
  CHECK(mu_lower_bound(1) == 4);
  CHECK(mu_lower_bound(2) == 59);
  CHECK(mu_lower_bound(3) == 220);
  CHECK_THROWS_AS(count_singular_U(5), std::invalid_argument);
  CHECK_THROWS_AS(mu_lower_bound(0), std::invalid_argument);
}

TEST_CASE("singular points of U_d") {
  const auto three = enumerate_singular_U(3);
  CHECK(three.size() == 4);
  CHECK(std::count_if(three.begin(), three.end(), [](const auto& p) { return p.q_value == -2; }) == 3);
  CHECK(std::count_if(three.begin(), three.end(), [](const auto& p) { return p.q_value == -3; }) == 1);

  for (int d : {3, 6, 9}) {
    const auto pts = enumerate_singular_U(d);
    CHECK(static_cast<std::int64_t>(pts.size()) == count_singular_U(d));
    const double scale = max_coeff_abs(build_surface(d, SurfaceKind::U).poly);
    for (const auto& p : pts) {
      CHECK(p.q_value + p.t_value == 0);
      CHECK(p.q_value != 6);
      CHECK(p.residual_f < 1e-8 * scale);
      CHECK(p.residual_grad < 1e-8 * scale);
      CHECK(p.hessian3_det >= 1e-4 * scale * scale * scale);
    }
  }
  // the absolute Hessian bound is too strict from d = 12 on; the scale-free one certifies it
  CHECK_THROWS_AS(enumerate_singular_U(12), VerificationError);
  NodeTolerances relative;
  relative.hessian_relative = true;
  for (int d : {3, 6, 9, 12})
    CHECK(static_cast<std::int64_t>(enumerate_singular_U(d, relative).size()) == count_singular_U(d));

  const auto six = enumerate_singular_U(6);
  CHECK(std::count_if(six.begin(), six.end(), [](const auto& p) { return p.q_value == -2; }) == 15 * 3);
  CHECK(std::count_if(six.begin(), six.end(), [](const auto& p) { return p.q_value == -3; }) == 7 * 2);
}

TEST_CASE("a corrupted surface fails certification") {
  auto q = folding_Q(6);
  q.add_term(Monomial{}, Cyclo12(1L));
  CHECK_THROWS_AS(enumerate_singular(assemble_surface(q, 6), 6, brute_force_scan(6)), VerificationError);

  auto tilted = folding_Q(6);
  tilted.add_term({1, 0, 0, 0}, Cyclo12(Rational(1, 1000)));
  CHECK_THROWS_AS(enumerate_singular(assemble_surface(tilted, 6), 6, brute_force_scan(6)), VerificationError);
}

TEST_CASE("no singular points at infinity") {
  for (int d : {3, 6, 9, 12}) {
    const auto check = infinity_check(d);
    CHECK(check.ok);
    CHECK(check.form.size() == 3);
  }
  CHECK(infinity_check(3).form.coeff({0, 0, 3, 0}) == Cyclo12(2L));
  CHECK(infinity_check(6).form.coeff({0, 0, 6, 0}) == Cyclo12(16L));

  auto broken = build_surface(6, SurfaceKind::U).poly;
  broken.set_coeff({0, 0, 6, 0}, Cyclo12());
  const auto bad = check_degree_form(broken, 6);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.diagnostic.empty());
}

TEST_CASE("hypersurfaces") {
  CHECK(hypersurface_count(1) == 10);
  CHECK(hypersurface_count(2) == 283);
  CHECK(hypersurface_excess(2) == 6);
  for (int n = 1; n <= 6; ++n) {
    const int d = 3 * n;
    const std::int64_t a = 3 * n * (3 * n - 1) / 2, b = 3 * n * (n - 1) + 1, c = 3 * n * (n - 1) / 2;
    CHECK(hypersurface_count(n) == a * a + b * b + c * c);
    CHECK(hypersurface_count(n) - chmutov_hypersurface_count(n) == hypersurface_excess(n));
    CHECK(hypersurface_excess(n) == 3 * n * (n - 1));
    (void)d;
  }

  const auto h = hypersurface_build(1);
  CHECK(h.poly.arity() == 4);
  CHECK(h.poly.degree() == 3);

  const auto one = enumerate_singular_hyper(1);
  CHECK(one.size() == 10);
  CHECK(std::count_if(one.begin(), one.end(), [](const auto& p) { return p.value == -3; }) == 1);
  CHECK(std::count_if(one.begin(), one.end(), [](const auto& p) { return p.value == 6; }) == 0);
  for (const auto& p : one)
    if (p.value == -3)
      for (const auto& z : p.coords) CHECK(std::abs(z) < 1e-12);

  CHECK(enumerate_singular_hyper(2).size() == 283);
  CHECK(enumerate_singular_hyper(3).size() == static_cast<std::size_t>(hypersurface_count(3)));
  CHECK_THROWS_AS(enumerate_singular_hyper(4), std::invalid_argument);
  CHECK_THROWS_AS(hypersurface_count(0), std::invalid_argument);
}

TEST_CASE("real variants") {
  const auto X = var3(0), Y = var3(1), Z = var3(2);
  const auto r3 = Cyclo12::sqrt3();
  const auto expected = Cyclo12(-1L) * X.pow(3) + Cyclo12(3L) * X * Y * Y - Cyclo12(3L) * r3 * X * X * Y +
                        r3 * Y.pow(3) + Cyclo12(3L) * (X * X + Y * Y) + Cyclo12(2L) * Z.pow(3) -
                        Cyclo12(Rational(3, 2)) * Z + const3(Rational(-1, 2));
  CHECK(real_variant(3) == expected);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  for (int d : {3, 6, 9}) {
    const auto real = real_variant(d);
    for (const auto& [m, c] : real.terms()) CHECK(c.as_real_quadratic().has_value());
    const CompiledPoly fr(real), fc(build_surface(d, SurfaceKind::U).poly);
    for (int t = 0; t < 100; ++t) {
      const double x = coord(rng), y = coord(rng), z = coord(rng);
      const std::array<std::complex<double>, 3> rp{x, y, z};
      const std::array<std::complex<double>, 3> cp{{{x, y}, {x, -y}, {z, 0.0}}};
      const auto vr = fr(rp), vc = fc(cp);
      CHECK(std::abs(vr.imag()) < 1e-10 * std::max(1.0, std::abs(vr)));
      CHECK(std::abs(vr - vc) < 1e-9 * std::max(1.0, std::abs(vc)));
    }
    const std::array<std::complex<double>, 3> top{0.0, 0.0, 1.0};
    CHECK(std::abs(fr(top) - (eval_complex(folding_Q(d), std::array<std::complex<double>, 2>{0.0, 0.0}) + 3.0)) < 1e-9);
  }
  const std::array<std::complex<double>, 3> top{0.0, 0.0, 1.0};
  CHECK(std::abs(eval_complex(real_variant(3), top)) < 1e-14);

  // a surface without the conjugation symmetry has no real variant
  auto skew = build_surface(3, SurfaceKind::U).poly;
  skew.add_term({1, 0, 0, 0}, Cyclo12(1L));
  CHECK_THROWS_AS(real_variant_of(skew), VerificationError);
}

TEST_CASE("real nodes are reported") {
  for (int d : {3, 6}) {
    const auto nodes = real_nodes(d);
    CHECK(static_cast<std::int64_t>(nodes.size()) <= count_singular_U(d));
    for (const auto& n : nodes) CHECK(n.residual < 1e-6);
  }
}
