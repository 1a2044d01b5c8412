#include "nodal/poly.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nodal {

namespace {

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxArity)
    throw std::invalid_argument("MultiPoly: arity must be in 1..4, got " + std::to_string(arity));
}

// powers[k][e] = point[k]^e for e <= max_exp
template <typename T>
std::vector<std::vector<T>> power_table(std::span<const T> point, int max_exp) {
  std::vector<std::vector<T>> table(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) {
    auto& row = table[k];
    row.resize(static_cast<std::size_t>(max_exp) + 1);
    row[0] = T(1);
    for (int e = 1; e <= max_exp; ++e) row[e] = row[e - 1] * point[k];
  }
  return table;
}

int max_exponent(const MultiPoly& p) {
  int m = 0;
  for (const auto& [exps, c] : p.terms())
    for (int e : exps) m = std::max(m, e);
  return m;
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) { check_arity(arity); }

MultiPoly MultiPoly::constant(int arity, const Cyclo12& c) {
  MultiPoly p(arity);
  p.set_coeff(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) throw std::invalid_argument("MultiPoly::variable: index out of range");
  Monomial m{};
  m[index] = 1;
  return monomial(arity, m, Cyclo12(1L));
}

MultiPoly MultiPoly::monomial(int arity, const Monomial& exps, const Cyclo12& c) {
  MultiPoly p(arity);
  for (int k = 0; k < kMaxArity; ++k) {
    if (exps[k] < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    if (k >= arity && exps[k] != 0) throw std::invalid_argument("MultiPoly: exponent beyond arity");
  }
  p.set_coeff(exps, c);
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

Cyclo12 MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclo12() : it->second;
}

void MultiPoly::set_coeff(const Monomial& m, const Cyclo12& c) {
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_[m] = c;
}

void MultiPoly::add_term(const Monomial& m, const Cyclo12& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_arity(const MultiPoly& o) const {
  if (arity_ != o.arity_)
    throw std::invalid_argument("MultiPoly: arity mismatch (" + std::to_string(arity_) + " vs " +
                                std::to_string(o.arity_) + ")");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_arity(b);
  MultiPoly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int k = 0; k < kMaxArity; ++k) m[k] = ma[k] + mb[k];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Cyclo12& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly result = constant(arity_, Cyclo12(1L));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::lift(int new_arity, std::span<const int> positions) const {
  if (static_cast<int>(positions.size()) != arity_)
    throw std::invalid_argument("MultiPoly::lift: need one position per variable");
  for (int pos : positions)
    if (pos < 0 || pos >= new_arity) throw std::invalid_argument("MultiPoly::lift: position out of range");
  MultiPoly r(new_arity);
  for (const auto& [m, c] : terms_) {
    Monomial lifted{};
    for (int k = 0; k < arity_; ++k) lifted[positions[k]] += m[k];
    r.add_term(lifted, c);
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& p, int var_index) {
  if (var_index < 0 || var_index >= p.arity())
    throw std::invalid_argument("partial_derivative: variable index out of range");
  MultiPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (m[var_index] == 0) continue;
    Monomial dm = m;
    dm[var_index] -= 1;
    r.add_term(dm, c * Cyclo12(static_cast<long>(m[var_index])));
  }
  return r;
}

std::complex<double> eval_complex(const MultiPoly& p, std::span<const std::complex<double>> point) {
  return CompiledPoly(p)(point);
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  if (static_cast<int>(images.size()) != p.arity())
    throw std::invalid_argument("substitute: need one image per variable");
  const int target = images.front().arity();
  for (const auto& img : images)
    if (img.arity() != target) throw std::invalid_argument("substitute: images have mixed arity");

  const int max_exp = max_exponent(p);
  std::vector<std::vector<MultiPoly>> powers(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    powers[k].push_back(MultiPoly::constant(target, Cyclo12(1L)));
    for (int e = 1; e <= max_exp; ++e) powers[k].push_back(powers[k].back() * images[k]);
  }

  MultiPoly result(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (int k = 0; k < p.arity(); ++k)
      if (m[k] > 0) term *= powers[k][m[k]];
    result += term;
  }
  return result;
}

MultiPoly degree_form(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("degree_form: zero polynomial");
  const int top = p.degree();
  MultiPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) != top) break;
    r.set_coeff(m, c);
  }
  return r;
}

MultiPoly conj_coeffs(const MultiPoly& p) {
  MultiPoly r(p.arity());
  for (const auto& [m, c] : p.terms()) r.set_coeff(m, c.conj());
  return r;
}

double max_coeff_abs(const MultiPoly& p) {
  double best = 0.0;
  for (const auto& [m, c] : p.terms()) best = std::max(best, std::abs(c.embed()));
  return best;
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : arity_(p.arity()), max_exp_(max_exponent(p)) {
  terms_.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms_.push_back({m, c.embed()});
}

std::complex<double> CompiledPoly::operator()(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("eval: point dimension does not match arity");
  auto table = power_table(point, max_exp_);
  std::complex<double> acc = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coeff;
    for (int k = 0; k < arity_; ++k) v *= table[k][t.exps[k]];
    acc += v;
  }
  return acc;
}

double CompiledPoly::eval_real(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != arity_)
    throw std::invalid_argument("eval: point dimension does not match arity");
  auto table = power_table(point, max_exp_);
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.real();
    for (int k = 0; k < arity_; ++k) v *= table[k][t.exps[k]];
    acc += v;
  }
  return acc;
}

std::vector<std::string> default_var_names(int arity) {
  static const std::array<std::string, kMaxArity> names{"x", "y", "w", "t"};
  check_arity(arity);
  return {names.begin(), names.begin() + arity};
}

void write_poly(std::ostream& os, const MultiPoly& p, const std::vector<std::string>& vars) {
  const auto names = vars.empty() ? default_var_names(p.arity()) : vars;
  if (static_cast<int>(names.size()) != p.arity())
    throw std::invalid_argument("write_poly: variable name count does not match arity");
  os << "arity " << p.arity() << " vars";
  for (const auto& n : names) os << ' ' << n;
  os << '\n';
  for (const auto& [m, c] : p.terms()) {
    for (int k = 0; k < p.arity(); ++k) os << m[k] << ' ';
    os << ": " << c.to_string() << '\n';
  }
}

std::string poly_to_text(const MultiPoly& p, const std::vector<std::string>& vars) {
  std::ostringstream os;
  write_poly(os, p, vars);
  return os.str();
}

MultiPoly read_poly(std::istream& is, std::vector<std::string>* vars) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("read_poly: missing header");
  std::istringstream header(line);
  std::string kw_arity, kw_vars;
  int arity = 0;
  if (!(header >> kw_arity >> arity >> kw_vars) || kw_arity != "arity" || kw_vars != "vars")
    throw std::invalid_argument("read_poly: malformed header '" + line + "'");
  check_arity(arity);
  std::vector<std::string> names;
  for (std::string n; header >> n;) names.push_back(n);
  if (static_cast<int>(names.size()) != arity)
    throw std::invalid_argument("read_poly: header lists " + std::to_string(names.size()) + " variables");
  if (vars) *vars = names;

  MultiPoly p(arity);
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("read_poly: missing ':' in '" + line + "'");
    std::istringstream lhs(line.substr(0, colon));
    Monomial m{};
    for (int k = 0; k < arity; ++k)
      if (!(lhs >> m[k]) || m[k] < 0) throw std::invalid_argument("read_poly: bad exponents in '" + line + "'");
    std::string extra;
    if (lhs >> extra) throw std::invalid_argument("read_poly: too many exponents in '" + line + "'");
    p.add_term(m, Cyclo12::parse(line.substr(colon + 1)));
  }
  return p;
}

MultiPoly poly_from_text(const std::string& text, std::vector<std::string>* vars) {
  std::istringstream is(text);
  return read_poly(is, vars);
}

}  // namespace nodal
