#include "nodal/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace nodal {

using nlohmann::json;

namespace {

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

}  // namespace

double round_significant(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return std::strtod(buf, nullptr);
}

json census_to_json(const FamilyCensus& census) {
  json families = json::array();
  for (const auto& f : census.families)
    families.push_back({{"tag", family_tag(f.family)},
                        {"value", f.value},
                        {"count_formula", f.count_formula},
                        {"count_bruteforce", f.count_bruteforce}});
  json totals = json::object();
  for (const auto& [value, count] : census.value_totals) totals[std::to_string(value)] = count;
  return {{"d", census.d},
          {"families", families},
          {"totals", totals},
          {"total", census.total},
          {"distinct_images", census.distinct_images}};
}

json singular_report_to_json(int d, const std::vector<SingularPoint>& points) {
  json pts = json::array();
  for (const auto& p : points)
    pts.push_back({{"x", complex_pair(p.x)},
                   {"y", complex_pair(p.y)},
                   {"w", complex_pair(p.w)},
                   {"q_value", p.q_value},
                   {"t_value", p.t_value},
                   {"residual_f", round_significant(p.residual_f)},
                   {"residual_grad", round_significant(p.residual_grad)},
                   {"hess_det_abs", round_significant(p.hessian3_det)}});
  return {{"d", d},
          {"kind", "U"},
          {"count_formula", count_singular_U(d)},
          {"count_enumerated", static_cast<std::int64_t>(points.size())},
          {"points", pts}};
}

json hyper_report_to_json(int n, const std::vector<HyperSingularPoint>* points) {
  json report = {{"n", n},
                 {"d", 3 * n},
                 {"count_formula", hypersurface_count(n)},
                 {"chmutov_count", chmutov_hypersurface_count(n)},
                 {"excess_over_chmutov", hypersurface_excess(n)}};
  if (points) {
    json pts = json::array();
    for (const auto& p : *points) {
      json coords = json::array();
      for (const auto& z : p.coords) coords.push_back(complex_pair(z));
      pts.push_back({{"coords", coords},
                     {"value", p.value},
                     {"residual_f", round_significant(p.residual_f)},
                     {"residual_grad", round_significant(p.residual_grad)},
                     {"hess_det_abs", round_significant(p.hessian4_det)}});
    }
    report["count_enumerated"] = static_cast<std::int64_t>(points->size());
    report["points"] = pts;
  }
  return report;
}

json real_report_to_json(int d, const std::vector<RealNode>& nodes) {
  json pts = json::array();
  for (const auto& r : nodes)
    pts.push_back({{"X", r.X}, {"Y", r.Y}, {"Z", r.Z}, {"residual", round_significant(r.residual)}});
  return {{"d", d},
          {"complex_node_count", count_singular_U(d)},
          {"real_nodes_detected", static_cast<std::int64_t>(nodes.size())},
          {"real_nodes", pts}};
}

}  // namespace nodal
