// Exact arithmetic in the cyclotomic field Q(zeta_12).
//
// Elements are stored in the power basis {1, z, z^2, z^3} where z = exp(i*pi/6)
// satisfies z^4 = z^2 - 1. Every constant the surface constructions need lives
// here: omega = z^4 = z^2 - 1, i = z^3, sqrt(3) = 2z - z^3, and all of Q.

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace nodal {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

class Cyclo12 {
 public:
  using Coeffs = std::array<Rational, 4>;

  Cyclo12() = default;
  Cyclo12(long value) : c_{Rational(value), 0, 0, 0} {}  // NOLINT(implicit)
  Cyclo12(const Rational& value) : c_{value, 0, 0, 0} {}  // NOLINT(implicit)
  explicit Cyclo12(Coeffs coeffs) : c_(std::move(coeffs)) { canonicalize(); }

  static Cyclo12 zeta();
  static Cyclo12 omega();        // exp(2*pi*i/3)
  static Cyclo12 omega_sq();     // exp(4*pi*i/3) = conj(omega)
  static Cyclo12 imag_unit();
  static Cyclo12 sqrt3();

  const Coeffs& coeffs() const { return c_; }
  const Rational& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  bool is_real() const;
  bool is_rational() const;

  /// For a real element returns (r, s) with value r + s*sqrt(3).
  std::optional<std::pair<Rational, Rational>> as_real_quadratic() const;

  /// Image under the automorphism z -> z^k, k in {1, 5, 7, 11}.
  Cyclo12 galois(int k) const;
  Cyclo12 conj() const { return galois(11); }

  /// Field norm down to Q: product of the four Galois conjugates.
  Rational norm() const;

  /// Throws std::domain_error when *this is zero.
  Cyclo12 inverse() const;

  std::complex<double> embed() const;

  /// "a0 a1 a2 a3", each a rational "p" or "p/q".
  std::string to_string() const;
  static Cyclo12 parse(const std::string& text);

  Cyclo12& operator+=(const Cyclo12& o);
  Cyclo12& operator-=(const Cyclo12& o);
  Cyclo12& operator*=(const Cyclo12& o);
  Cyclo12& operator/=(const Cyclo12& o);

  friend Cyclo12 operator+(Cyclo12 a, const Cyclo12& b) { return a += b; }
  friend Cyclo12 operator-(Cyclo12 a, const Cyclo12& b) { return a -= b; }
  friend Cyclo12 operator*(Cyclo12 a, const Cyclo12& b) { return a *= b; }
  friend Cyclo12 operator/(Cyclo12 a, const Cyclo12& b) { return a /= b; }
  Cyclo12 operator-() const;

  friend bool operator==(const Cyclo12& a, const Cyclo12& b) { return a.c_ == b.c_; }

 private:
  void canonicalize();

  Coeffs c_{};
};

inline Cyclo12 conj(const Cyclo12& a) { return a.conj(); }

}  // namespace nodal
