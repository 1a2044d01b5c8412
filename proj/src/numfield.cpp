#include "nodal/numfield.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nodal {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

Cyclo12 Cyclo12::zeta() { return Cyclo12(Coeffs{0, 1, 0, 0}); }
Cyclo12 Cyclo12::omega() { return Cyclo12(Coeffs{-1, 0, 1, 0}); }
Cyclo12 Cyclo12::omega_sq() { return omega().conj(); }
Cyclo12 Cyclo12::imag_unit() { return Cyclo12(Coeffs{0, 0, 0, 1}); }
Cyclo12 Cyclo12::sqrt3() { return Cyclo12(Coeffs{0, 2, 0, -1}); }

void Cyclo12::canonicalize() {
  for (auto& c : c_) c.canonicalize();
}

bool Cyclo12::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Cyclo12::is_real() const { return *this == conj(); }

bool Cyclo12::is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

std::optional<std::pair<Rational, Rational>> Cyclo12::as_real_quadratic() const {
  // Real elements are exactly c0 - c3*(2z - z^3), i.e. c2 = 0 and c1 = -2 c3.
  if (sgn(c_[2]) != 0 || c_[1] != -2 * c_[3]) return std::nullopt;
  return std::make_pair(c_[0], Rational(-c_[3]));
}

Cyclo12 Cyclo12::galois(int k) const {
  k = ((k % 12) + 12) % 12;
  if (k != 1 && k != 5 && k != 7 && k != 11)
    throw std::invalid_argument("galois: exponent must be a unit mod 12");
  Cyclo12 w(1L);
  for (int e = 0; e < k; ++e) w *= zeta();
  Cyclo12 result = c_[0];
  Cyclo12 power = w;
  for (int e = 1; e < 4; ++e) {
    result += power * Cyclo12(c_[e]);
    power *= w;
  }
  return result;
}

Rational Cyclo12::norm() const {
  Cyclo12 n = *this * galois(5) * galois(7) * galois(11);
  return n.c_[0];
}

Cyclo12 Cyclo12::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo12: division by zero");
  Cyclo12 adj = galois(5) * galois(7) * galois(11);
  Rational n = (*this * adj).c_[0];
  return adj * Cyclo12(Rational(1 / n));
}

std::complex<double> Cyclo12::embed() const {
  const std::complex<double> z = std::polar(1.0, std::numbers::pi / 6.0);
  std::complex<double> acc = 0.0;
  std::complex<double> power = 1.0;
  for (const auto& c : c_) {
    acc += c.get_d() * power;
    power *= z;
  }
  return acc;
}

std::string Cyclo12::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) os << ' ';
    os << c_[k].get_str();
  }
  return os.str();
}

Cyclo12 Cyclo12::parse(const std::string& text) {
  std::istringstream is(text);
  Coeffs c;
  std::string token;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!(is >> token)) throw std::invalid_argument("Cyclo12: expected four rationals in '" + text + "'");
    c[k] = parse_rational(token);
  }
  if (is >> token) throw std::invalid_argument("Cyclo12: trailing input in '" + text + "'");
  return Cyclo12(std::move(c));
}

Cyclo12& Cyclo12::operator+=(const Cyclo12& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyclo12& Cyclo12::operator-=(const Cyclo12& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyclo12& Cyclo12::operator*=(const Cyclo12& o) {
  std::array<Rational, 7> d{};
  for (std::size_t a = 0; a < 4; ++a) {
    if (sgn(c_[a]) == 0) continue;
    for (std::size_t b = 0; b < 4; ++b) d[a + b] += c_[a] * o.c_[b];
  }
  // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
  c_[0] = d[0] - d[4] - d[6];
  c_[1] = d[1] - d[5];
  c_[2] = d[2] + d[4];
  c_[3] = d[3] + d[5];
  return *this;
}

Cyclo12& Cyclo12::operator/=(const Cyclo12& o) { return *this *= o.inverse(); }

Cyclo12 Cyclo12::operator-() const {
  Cyclo12 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

}  // namespace nodal
