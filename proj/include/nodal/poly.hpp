// Sparse multivariate polynomials (1 to 4 variables) over Q(zeta_12).

#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodal/numfield.hpp"

namespace nodal {

inline constexpr int kMaxArity = 4;

/// Exponent tuple; entries at positions >= arity are always zero.
using Monomial = std::array<int, kMaxArity>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2] + m[3]; }

/// Graded order, highest total degree first, ties broken lexicographically descending.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Cyclo12, GrlexDescending>;

  explicit MultiPoly(int arity = 1);

  static MultiPoly constant(int arity, const Cyclo12& c);
  /// The coordinate function x_index.
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, const Monomial& exps, const Cyclo12& c);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree; -1 for the zero polynomial.
  int degree() const;

  /// Coefficient of a monomial (zero when absent).
  Cyclo12 coeff(const Monomial& m) const;
  /// Sets a coefficient; a zero value removes the term.
  void set_coeff(const Monomial& m, const Cyclo12& c);
  void add_term(const Monomial& m, const Cyclo12& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Cyclo12& s);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Cyclo12& s) { return a *= s; }
  friend MultiPoly operator*(const Cyclo12& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int e) const;

  /// Reinterprets this polynomial in a larger ring: variable k becomes variable positions[k].
  MultiPoly lift(int new_arity, std::span<const int> positions) const;

 private:
  void check_same_arity(const MultiPoly& o) const;

  int arity_;
  Terms terms_;
};

MultiPoly partial_derivative(const MultiPoly& p, int var_index);

std::complex<double> eval_complex(const MultiPoly& p, std::span<const std::complex<double>> point);

/// Composition p(images[0], ..., images[arity-1]); all images must share one arity.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Homogeneous part of maximal total degree; throws on the zero polynomial.
MultiPoly degree_form(const MultiPoly& p);

MultiPoly conj_coeffs(const MultiPoly& p);

/// Largest modulus of any embedded coefficient.
double max_coeff_abs(const MultiPoly& p);

/// Double-precision snapshot of a polynomial for repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  int arity() const { return arity_; }
  std::complex<double> operator()(std::span<const std::complex<double>> point) const;
  /// Real evaluation; valid when all embedded coefficients are real.
  double eval_real(std::span<const double> point) const;

 private:
  struct Term {
    Monomial exps;
    std::complex<double> coeff;
  };
  int arity_ = 0;
  int max_exp_ = 0;
  std::vector<Term> terms_;
};

/// Polynomial text format:
///   arity <k> vars <name_1> ... <name_k>
///   <e_1> ... <e_k> : <a0> <a1> <a2> <a3>
/// one term per line in GrlexDescending order.
std::vector<std::string> default_var_names(int arity);
void write_poly(std::ostream& os, const MultiPoly& p, const std::vector<std::string>& vars = {});
std::string poly_to_text(const MultiPoly& p, const std::vector<std::string>& vars = {});
MultiPoly read_poly(std::istream& is, std::vector<std::string>* vars = nullptr);
MultiPoly poly_from_text(const std::string& text, std::vector<std::string>* vars = nullptr);

}  // namespace nodal
