// Random generators shared by the property tests.

#pragma once

#include <complex>
#include <random>

#include "nodal/numfield.hpp"
#include "nodal/poly.hpp"

namespace nodal::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 6) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Cyclo12 random_cyclo(std::mt19937_64& rng, long max_num = 20, long max_den = 6) {
  Cyclo12::Coeffs c;
  for (auto& x : c) x = random_rational(rng, max_num, max_den);
  return Cyclo12(c);
}

inline Cyclo12 random_nonzero_cyclo(std::mt19937_64& rng) {
  for (;;) {
    auto a = random_cyclo(rng);
    if (!a.is_zero()) return a;
  }
}

inline MultiPoly random_poly(std::mt19937_64& rng, int arity, int max_degree, int terms) {
  std::uniform_int_distribution<int> exp(0, max_degree);
  MultiPoly p(arity);
  for (int t = 0; t < terms; ++t) {
    Monomial m{};
    int budget = max_degree;
    for (int k = 0; k < arity; ++k) {
      m[k] = std::min(exp(rng), budget);
      budget -= m[k];
    }
    p.add_term(m, random_cyclo(rng, 5, 3));
  }
  return p;
}

inline std::complex<double> random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> c(-radius, radius);
  return {c(rng), c(rng)};
}

}  // namespace nodal::testing
