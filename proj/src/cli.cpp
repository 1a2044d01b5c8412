#include "nodal/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nodal/acceptance.hpp"
#include "nodal/critical.hpp"
#include "nodal/folding.hpp"
#include "nodal/mesh.hpp"
#include "nodal/report.hpp"
#include "nodal/surfaces.hpp"

namespace nodal {

namespace {

struct CommandConfig {
  int d = 0;
  int n = 0;
  std::vector<int> degrees;
  std::string kind;
  std::string format;
  std::string out_path;
  double box = 2.0;
  int resolution = 64;
  ScanTolerances scan;
  int corrupt_q = 0;
  NodeTolerances nodes;
};

void emit(const CommandConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.out_path);
  file << payload;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void require_format(const CommandConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw std::invalid_argument("unsupported --format " + cfg.format + " for this command");
}

int cmd_poly(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text"});
  MultiPoly p;
  std::vector<std::string> vars;
  if (cfg.kind == "P") {
    p = folding_P(cfg.d);
  } else if (cfg.kind == "Q") {
    p = folding_Q(cfg.d);
  } else if (cfg.kind == "T") {
    p = chebyshev_T(cfg.d);
    vars = {"w"};
  } else {
    throw std::invalid_argument("poly: --kind must be P, Q or T");
  }
  emit(cfg, out, poly_to_text(p, vars));
  return 0;
}

int cmd_lemma(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json", "text"});
  const auto points = family_enumerate(cfg.d, cfg.scan);
  const auto census = image_census(points, cfg.d);
  if (cfg.format == "json") {
    emit(cfg, out, dump(census_to_json(census)));
    return 0;
  }
  std::ostringstream os;
  os << "d = " << census.d << "\n";
  for (const auto& f : census.families)
    os << "  " << family_tag(f.family) << "  value " << f.value << "  formula " << f.count_formula << "  scan "
       << f.count_bruteforce << "\n";
  os << "total " << census.total << ", distinct images " << census.distinct_images << "\n";
  emit(cfg, out, os.str());
  return 0;
}

int cmd_surface(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text"});
  if (cfg.kind.empty()) cfg.kind = "U";
  SurfaceKind kind;
  if (cfg.kind == "U")
    kind = SurfaceKind::U;
  else if (cfg.kind == "V")
    kind = SurfaceKind::V;
  else
    throw std::invalid_argument("surface: --kind must be U or V");
  emit(cfg, out, poly_to_text(build_surface(cfg.d, kind).poly));
  return 0;
}

int cmd_singular(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json"});
  emit(cfg, out, dump(singular_report_to_json(cfg.d, enumerate_singular_U(cfg.d, cfg.nodes))));
  return 0;
}

int cmd_hyper(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "json";
  require_format(cfg, {"json", "text"});
  if (cfg.format == "text") {
    emit(cfg, out, poly_to_text(hypersurface_build(cfg.n).poly, {"x1", "y1", "x2", "y2"}));
    return 0;
  }
  nlohmann::json report;
  if (3 * cfg.n <= 9) {
    const auto points = enumerate_singular_hyper(cfg.n);
    report = hyper_report_to_json(cfg.n, &points);
  } else {
    report = hyper_report_to_json(cfg.n, nullptr);
  }
  report["polynomial"] = poly_to_text(hypersurface_build(cfg.n).poly, {"x1", "y1", "x2", "y2"});
  emit(cfg, out, dump(report));
  return 0;
}

int cmd_real(CommandConfig cfg, std::ostream& out) {
  if (cfg.format.empty()) cfg.format = "text";
  require_format(cfg, {"text", "json"});
  if (cfg.format == "text")
    emit(cfg, out, poly_to_text(real_variant(cfg.d), kRealVariantVars));
  else
    emit(cfg, out, dump(real_report_to_json(cfg.d, real_nodes(cfg.d))));
  return 0;
}

int cmd_mesh(CommandConfig cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format.empty()) cfg.format = "obj";
  require_format(cfg, {"obj"});
  const auto mesh = mesh_real_variant(cfg.d, cfg.box, cfg.resolution);
  for (const auto& w : mesh.warnings) err << "warning: " << w << "\n";
  std::ostringstream os;
  write_obj(os, mesh);
  emit(cfg, out, os.str());
  return 0;
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  AcceptanceOptions opts = cfg.degrees.empty() ? AcceptanceOptions{} : options_for_degrees(cfg.degrees);
  if (cfg.corrupt_q > 0) opts.corrupt_q_degree = cfg.corrupt_q;
  const auto results = run_acceptance(opts);
  std::ostringstream os;
  for (const auto& r : results) os << format_result(r) << "\n";
  const bool ok = all_passed(results);
  os << (ok ? "all criteria passed" : "FAILED") << "\n";
  emit(cfg, out, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nodal surfaces from shifted A2 folding polynomials", "nodal"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "obj"}));
    sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  };

  auto* poly = app.add_subcommand("poly", "Write P_d, Q_d or T_d in polynomial text format");
  poly->add_option("--d", cfg.d, "Degree")->required();
  poly->add_option("--kind", cfg.kind, "P, Q or T")->required()->check(CLI::IsMember({"P", "Q", "T"}));
  add_format(poly);

  auto* lemma = app.add_subcommand("lemma", "Critical point census of H_d inside the fundamental triangle");
  lemma->add_option("--d", cfg.d, "Degree (multiple of 3)")->required();
  lemma->add_option("--tol-grad", cfg.scan.grad_per_degree, "Gradient threshold per unit degree");
  lemma->add_option("--tol-value", cfg.scan.value, "Critical value tolerance");
  add_format(lemma);

  auto* surface = app.add_subcommand("surface", "Write the U_d or V_d surface polynomial");
  surface->add_option("--d", cfg.d, "Degree")->required();
  surface->add_option("--kind", cfg.kind, "U or V")->check(CLI::IsMember({"U", "V"}));
  add_format(surface);

  auto* singular = app.add_subcommand("singular", "Enumerate and certify the nodes of U_d");
  singular->add_option("--d", cfg.d, "Degree (multiple of 3)")->required();
  singular->add_flag("--hessian-relative", cfg.nodes.hessian_relative,
                     "Scale-free Hessian test (needed from d = 12 on)");
  add_format(singular);

  auto* hyper = app.add_subcommand("hyper", "Hypersurface Q_3n(x1, y1) - Q_3n(x2, y2) and its node count");
  hyper->add_option("--n", cfg.n, "n >= 1")->required();
  add_format(hyper);

  auto* real = app.add_subcommand("real", "Real variant of U_d under x = X + iY, y = X - iY");
  real->add_option("--d", cfg.d, "Degree (multiple of 3)")->required();
  add_format(real);

  auto* mesh = app.add_subcommand("mesh", "Marching-cubes OBJ of the real variant");
  mesh->add_option("--d", cfg.d, "Degree (multiple of 3)")->required();
  mesh->add_option("--box", cfg.box, "Half-width of the sampling cube");
  mesh->add_option("--res", cfg.resolution, "Cells per axis (>= 16)");
  add_format(mesh);

  auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
  verify->add_option("--d", cfg.degrees, "Comma-separated degree list")->delimiter(',');
  verify->add_option("--corrupt-q", cfg.corrupt_q, "Negative control: add 1 to the constant term of Q_d");
  verify->add_option("--out", cfg.out_path, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (poly->parsed()) return cmd_poly(cfg, out);
    if (lemma->parsed()) return cmd_lemma(cfg, out);
    if (surface->parsed()) return cmd_surface(cfg, out);
    if (singular->parsed()) return cmd_singular(cfg, out);
    if (hyper->parsed()) return cmd_hyper(cfg, out);
    if (real->parsed()) return cmd_real(cfg, out);
    if (mesh->parsed()) return cmd_mesh(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace nodal
