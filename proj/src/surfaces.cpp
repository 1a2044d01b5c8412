#include "nodal/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nodal/folding.hpp"

namespace nodal {

namespace {

// Exact partials of F up to order two, evaluated in double precision.
class NodeVerifier {
 public:
  explicit NodeVerifier(const MultiPoly& f) : dim_(f.arity()), f_(f), scale_(max_coeff_abs(f)) {
    for (int a = 0; a < dim_; ++a) {
      auto da = partial_derivative(f, a);
      grad_.emplace_back(da);
      std::vector<CompiledPoly> row;
      for (int b = 0; b < dim_; ++b) row.emplace_back(partial_derivative(da, b));
      hess_.push_back(std::move(row));
    }
  }

  double scale() const { return scale_; }

  struct Result {
    double residual_f, residual_grad, hessian_det;
    double hadamard_ratio;  // |det| / product of row norms, in [0, 1]
  };

  Result measure(std::span<const std::complex<double>> pt) const {
    Result r{};
    r.residual_f = std::abs(f_(pt));
    double g2 = 0.0;
    for (const auto& g : grad_) g2 += std::norm(g(pt));
    r.residual_grad = std::sqrt(g2);
    std::vector<std::vector<std::complex<double>>> h(dim_, std::vector<std::complex<double>>(dim_));
    double row_product = 1.0;
    for (int a = 0; a < dim_; ++a) {
      double row = 0.0;
      for (int b = 0; b < dim_; ++b) {
        h[a][b] = hess_[a][b](pt);
        row += std::norm(h[a][b]);
      }
      row_product *= std::sqrt(row);
    }
    r.hessian_det = det_abs(std::move(h));
    r.hadamard_ratio = row_product > 0.0 ? r.hessian_det / row_product : 0.0;
    return r;
  }

  // Throws when the point is not an ordinary double point at the given tolerances.
  Result certify(std::span<const std::complex<double>> pt, const NodeTolerances& tol, const std::string& where) const {
    auto r = measure(pt);
    const double lim = tol.residual * scale_;
    const double hess_lim = tol.hessian * std::pow(scale_, dim_);
    std::ostringstream msg;
    if (r.residual_f >= lim) msg << "|F| = " << r.residual_f << " >= " << lim;
    else if (r.residual_grad >= lim) msg << "|grad F| = " << r.residual_grad << " >= " << lim;
    else if (tol.hessian_relative && r.hadamard_ratio < tol.hessian)
      msg << "|det Hess| / row norms = " << r.hadamard_ratio << " < " << tol.hessian;
    else if (!tol.hessian_relative && r.hessian_det < hess_lim)
      msg << "|det Hess| = " << r.hessian_det << " < " << hess_lim;
    else return r;
    throw VerificationError("node certification failed at " + where + ": " + msg.str());
  }

 private:
  int dim_;
  CompiledPoly f_;
  double scale_;
  std::vector<CompiledPoly> grad_;
  std::vector<std::vector<CompiledPoly>> hess_;
};

std::int64_t binom2(std::int64_t d) { return d * (d - 1) / 2; }

}  // namespace

double det_abs(std::vector<std::vector<std::complex<double>>> m) {
  const std::size_t n = m.size();
  double result = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (std::abs(m[pivot][col]) == 0.0) return 0.0;
    std::swap(m[pivot], m[col]);
    result *= std::abs(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const auto f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

MultiPoly assemble_surface(const MultiPoly& planar, int d) {
  if (planar.arity() != 2) throw std::invalid_argument("assemble_surface: bivariate polynomial expected");
  const std::array<int, 2> xy{0, 1};
  const std::array<int, 1> w{2};
  return planar.lift(3, xy) + chebyshev_T(d).lift(3, w);
}

SurfaceSpec build_surface(int d, SurfaceKind kind) {
  if (kind == SurfaceKind::U) {
    require_multiple_of_three(d, "build_surface(U)");
    return {d, kind, assemble_surface(folding_Q(d), d)};
  }
  if (d < 3) throw std::invalid_argument("build_surface(V): degree must be >= 3");
  return {d, kind, assemble_surface(folding_P(d), d)};
}

std::int64_t count_singular_U(int d) {
  require_multiple_of_three(d, "count_singular_U");
  const std::int64_t n = d;
  return binom2(n) * (n / 2) + (n * n / 3 - n + 1) * ((n - 1) / 2);
}

std::int64_t count_singular_V(int d) {
  require_multiple_of_three(d, "count_singular_V");
  const std::int64_t n = d;
  return binom2(n) * (n / 2) + (n * n / 3 - n) * ((n - 1) / 2);
}

std::int64_t mu_lower_bound(int n) {
  if (n < 1) throw std::invalid_argument("mu_lower_bound: n must be >= 1");
  const std::int64_t m = n;
  return binom2(3 * m) * ((3 * m) / 2) + (3 * m * m - 3 * m + 1) * ((3 * m - 1) / 2);
}

std::vector<SingularPoint> enumerate_singular(const MultiPoly& surface, int d,
                                              const std::vector<CriticalPoint>& critical,
                                              const NodeTolerances& tol) {
  if (surface.arity() != 3) throw std::invalid_argument("enumerate_singular: trivariate surface expected");
  const NodeVerifier verifier(surface);
  const auto cheb = chebyshev_critical_points(d);
  std::vector<SingularPoint> out;
  for (const auto& cp : critical) {
    for (const auto& tc : cheb) {
      if (cp.value + tc.value != 0) continue;
      SingularPoint sp;
      sp.x = cp.image_x;
      sp.y = cp.image_y;
      sp.w = tc.w;
      sp.q_value = cp.value;
      sp.t_value = tc.value;
      sp.source_i = cp.i;
      sp.source_j = cp.j;
      sp.chebyshev_k = tc.k;
      const std::array<std::complex<double>, 3> pt{sp.x, sp.y, sp.w};
      const auto r = verifier.certify(pt, tol,
                                      "lattice (" + std::to_string(cp.i) + ", " + std::to_string(cp.j) +
                                          "), k = " + std::to_string(tc.k));
      sp.residual_f = r.residual_f;
      sp.residual_grad = r.residual_grad;
      sp.hessian3_det = r.hessian_det;
      out.push_back(sp);
    }
  }
  return out;
}

std::vector<SingularPoint> enumerate_singular_U(int d, const NodeTolerances& tol) {
  const auto surface = build_surface(d, SurfaceKind::U);
  auto points = enumerate_singular(surface.poly, d, brute_force_scan(d), tol);
  const auto expected = count_singular_U(d);
  if (static_cast<std::int64_t>(points.size()) != expected)
    throw VerificationError("enumerate_singular_U: " + std::to_string(points.size()) + " nodes, formula gives " +
                            std::to_string(expected));
  return points;
}

InfinityCheck check_degree_form(const MultiPoly& surface, int d) {
  InfinityCheck result;
  if (surface.is_zero()) {
    result.diagnostic = "zero polynomial";
    return result;
  }
  result.form = degree_form(surface);
  MultiPoly expected(3);
  expected.set_coeff({d, 0, 0, 0}, Cyclo12::omega());
  expected.set_coeff({0, d, 0, 0}, Cyclo12::omega_sq());
  expected.set_coeff({0, 0, d, 0}, Cyclo12(Rational(mpz_class(1) << (d - 2))));
  if (result.form == expected) {
    result.ok = true;
    return result;
  }
  std::ostringstream msg;
  msg << "degree form has " << result.form.size() << " terms of degree " << result.form.degree()
      << "; expected omega x^" << d << " + omega^2 y^" << d << " + 2^" << d - 2 << " w^" << d;
  result.diagnostic = msg.str();
  return result;
}

InfinityCheck infinity_check(int d) { return check_degree_form(build_surface(d, SurfaceKind::U).poly, d); }

HypersurfaceSpec hypersurface_build(int n) {
  if (n < 1) throw std::invalid_argument("hypersurface_build: n must be >= 1");
  const auto q = folding_Q(3 * n);
  const std::array<int, 2> first{0, 1}, second{2, 3};
  return {n, q.lift(4, first) - q.lift(4, second)};
}

std::int64_t hypersurface_count(int n) {
  if (n < 1) throw std::invalid_argument("hypersurface_count: n must be >= 1");
  std::int64_t total = 0;
  for (int value : {-2, -3, 6}) {
    const auto c = lemma_count(value, 3 * n);
    total += c * c;
  }
  return total;
}

std::int64_t chmutov_hypersurface_count(int n) {
  if (n < 1) throw std::invalid_argument("chmutov_hypersurface_count: n must be >= 1");
  const std::int64_t d = 3 * n;
  // critical values of P_d: -2, -3, 6 with the -3 and 6 multiplicities of Q_d exchanged
  const std::int64_t n_saddle = binom2(d), n_min = d * d / 3 - d, n_max = 1 + d * (d - 3) / 6;
  return n_saddle * n_saddle + n_min * n_min + n_max * n_max;
}

std::int64_t hypersurface_excess(int n) {
  if (n < 1) throw std::invalid_argument("hypersurface_excess: n must be >= 1");
  return 3 * static_cast<std::int64_t>(n) * (n - 1);
}

std::vector<HyperSingularPoint> enumerate_singular_hyper(int n, const NodeTolerances& tol) {
  if (n < 1 || 3 * n > 9) throw std::invalid_argument("enumerate_singular_hyper: need 1 <= n <= 3");
  const int d = 3 * n;
  const auto hyper = hypersurface_build(n);
  const NodeVerifier verifier(hyper.poly);
  const auto critical = brute_force_scan(d);
  std::vector<HyperSingularPoint> out;
  for (const auto& a : critical) {
    for (const auto& b : critical) {
      if (a.value != b.value) continue;
      HyperSingularPoint hp;
      hp.coords = {a.image_x, a.image_y, b.image_x, b.image_y};
      hp.value = a.value;
      const auto r = verifier.certify(hp.coords, tol,
                                      "pair (" + std::to_string(a.i) + ", " + std::to_string(a.j) + ") x (" +
                                          std::to_string(b.i) + ", " + std::to_string(b.j) + ")");
      hp.residual_f = r.residual_f;
      hp.residual_grad = r.residual_grad;
      hp.hessian4_det = r.hessian_det;
      out.push_back(hp);
    }
  }
  if (static_cast<std::int64_t>(out.size()) != hypersurface_count(n))
    throw VerificationError("enumerate_singular_hyper: " + std::to_string(out.size()) + " nodes, formula gives " +
                            std::to_string(hypersurface_count(n)));
  return out;
}

MultiPoly real_variant_of(const MultiPoly& surface) {
  if (surface.arity() != 3) throw std::invalid_argument("real_variant_of: trivariate surface expected");
  const auto X = MultiPoly::variable(3, 0);
  const auto Y = MultiPoly::variable(3, 1);
  const auto Z = MultiPoly::variable(3, 2);
  const auto iY = Cyclo12::imag_unit() * Y;
  const std::array<MultiPoly, 3> images{X + iY, X - iY, Z};
  auto result = substitute(surface, images);
  for (const auto& [m, c] : result.terms())
    if (!c.is_real())
      throw VerificationError("real_variant: coefficient " + c.to_string() + " of X^" + std::to_string(m[0]) + " Y^" +
                              std::to_string(m[1]) + " Z^" + std::to_string(m[2]) + " is not real");
  return result;
}

MultiPoly real_variant(int d) { return real_variant_of(build_surface(d, SurfaceKind::U).poly); }

std::vector<RealNode> real_nodes(int d, double tol) {
  const auto poly = real_variant(d);
  const NodeVerifier verifier(poly);
  std::vector<RealNode> out;
  for (const auto& sp : enumerate_singular_U(d)) {
    // a real point needs y = conj(x) and real w
    if (std::abs(sp.y - std::conj(sp.x)) > tol || std::abs(sp.w.imag()) > tol) continue;
    const std::array<std::complex<double>, 3> pt{sp.x.real(), sp.x.imag(), sp.w.real()};
    const auto r = verifier.measure(pt);
    if (r.residual_f < tol * verifier.scale() && r.residual_grad < tol * verifier.scale())
      out.push_back({sp.x.real(), sp.x.imag(), sp.w.real(), std::max(r.residual_f, r.residual_grad)});
  }
  return out;
}

}  // namespace nodal
