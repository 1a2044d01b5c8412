#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "nodal/numfield.hpp"
#include "test_support.hpp"

using namespace nodal;
using nodal::testing::random_cyclo;
using nodal::testing::random_nonzero_cyclo;

namespace {

const Cyclo12 w = Cyclo12::omega();
const Cyclo12 w2 = Cyclo12::omega_sq();
const Cyclo12 i = Cyclo12::imag_unit();
const Cyclo12 r3 = Cyclo12::sqrt3();

bool close(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("special constants") {
  CHECK(w * w2 == Cyclo12(1L));
  CHECK(w + w2 == Cyclo12(-1L));
  CHECK(r3 * r3 == Cyclo12(3L));
  CHECK(i * i == Cyclo12(-1L));
  CHECK(w * w * w == Cyclo12(1L));
  Cyclo12 z12(1L);
  for (int k = 0; k < 12; ++k) z12 *= Cyclo12::zeta();
  CHECK(z12 == Cyclo12(1L));
}

TEST_CASE("conjugation") {
  CHECK(conj(w) == w2);
  CHECK(conj(r3) == r3);
  CHECK(conj(i) == -i);
  CHECK(conj(Cyclo12(Rational(7, 3))) == Cyclo12(Rational(7, 3)));
}

TEST_CASE("embedding") {
  CHECK(close(w.embed(), {-0.5, std::sqrt(3.0) / 2}, 1e-15));
  CHECK(close(r3.embed(), {std::sqrt(3.0), 0.0}, 1e-15));
  CHECK(close(Cyclo12().embed(), {0.0, 0.0}, 0.0));
  CHECK(close(i.embed(), {0.0, 1.0}, 1e-15));
}

TEST_CASE("realness predicates") {
  CHECK(r3.is_real());
  CHECK_FALSE(w.is_real());
  CHECK(Cyclo12(-3L).is_rational());
  CHECK_FALSE(r3.is_rational());
  auto q = (Cyclo12(Rational(1, 2)) + Cyclo12(Rational(-5, 4)) * r3).as_real_quadratic();
  REQUIRE(q);
  CHECK(q->first == Rational(1, 2));
  CHECK(q->second == Rational(-5, 4));
  CHECK_FALSE(w.as_real_quadratic());
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(Cyclo12(1L) / Cyclo12(), std::domain_error);
  CHECK_THROWS_AS(Cyclo12().inverse(), std::domain_error);
}

TEST_CASE("text form") {
  auto a = Cyclo12(Cyclo12::Coeffs{Rational(1, 2), -3, 0, Rational(-7, 9)});
  CHECK(a.to_string() == "1/2 -3 0 -7/9");
  CHECK(Cyclo12::parse(a.to_string()) == a);
  CHECK(Cyclo12::parse("2/4 0 0 0") == Cyclo12(Rational(1, 2)));
  CHECK_THROWS_AS(Cyclo12::parse("1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS(Cyclo12::parse("1 2 3 4 5"), std::invalid_argument);
  CHECK_THROWS_AS(Cyclo12::parse("1 x 3 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
  for (int t = 0; t < 1000; ++t) {
    auto a = random_nonzero_cyclo(rng);
    CHECK(a * a.inverse() == Cyclo12(1L));
  }
}

TEST_CASE("norm is rational and multiplicative") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto a = random_nonzero_cyclo(rng), b = random_nonzero_cyclo(rng);
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(sgn(a.norm()) > 0);
  }
}

TEST_CASE("conjugation is an involutive automorphism") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    auto a = random_cyclo(rng), b = random_cyclo(rng);
    CHECK(conj(conj(a)) == a);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(a + b) == conj(a) + conj(b));
    CHECK((a * conj(a)).is_real());
    CHECK(close(conj(a).embed(), std::conj(a.embed()), 1e-9));
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 500; ++t) {
    auto a = random_cyclo(rng, 1000000, 7), b = random_cyclo(rng, 1000000, 7);
    const auto ea = a.embed(), eb = b.embed();
    const double scale = (std::abs(ea) + 1) * (std::abs(eb) + 1);
    CHECK(std::abs((a * b).embed() - ea * eb) < 1e-12 * scale);
    CHECK(std::abs((a + b).embed() - (ea + eb)) < 1e-12 * scale);
  }
}
