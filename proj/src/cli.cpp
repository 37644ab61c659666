#include "minsurf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "minsurf/errors.hpp"
#include "minsurf/mesh.hpp"
#include "minsurf/report.hpp"
#include "minsurf/solver.hpp"

namespace minsurf::cli {

namespace {

namespace fs = std::filesystem;

struct FamilyOptions {
  std::string family;
  std::optional<double> c;
  std::string branch = "+";
  std::string variant = "corrected";
  double kappa = 0.25;
  double tau = 0.0;
  double theta = 0.0;
  double ode_t_max = 0.0;
  double ode_step = 1e-3;
};

struct GridOptions {
  std::optional<double> s_min, s_max, t_min, t_max;
  std::optional<int> n_s, n_t;
};

void add_family_options(CLI::App& cmd, FamilyOptions& f) {
  cmd.add_option("--family", f.family, "circle | helix | ode")
      ->required()
      ->check(CLI::IsMember({"circle", "helix", "ode"}));
  cmd.add_option("--c", f.c, "family parameter (circle: |c| <= 1, default 1; helix: default 0)");
  cmd.add_option("--branch", f.branch, "circle square-root branch: + or -")
      ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
  cmd.add_option("--variant", f.variant, "helix coefficients: printed | corrected")
      ->check(CLI::IsMember({"printed", "corrected"}));
  cmd.add_option("--kappa", f.kappa, "ode family curvature");
  cmd.add_option("--tau", f.tau, "ode family torsion");
  cmd.add_option("--theta", f.theta, "ode family angle: (u_t, v_t, w_t)(0) = (0, sin, cos)");
  cmd.add_option("--ode-t-max", f.ode_t_max, "ode integration half-range (default: grid range)");
  cmd.add_option("--ode-step", f.ode_step, "ode integration step");
}

void add_grid_options(CLI::App& cmd, GridOptions& g) {
  cmd.add_option("--s-min", g.s_min);
  cmd.add_option("--s-max", g.s_max);
  cmd.add_option("--t-min", g.t_min);
  cmd.add_option("--t-max", g.t_max);
  cmd.add_option("--ns", g.n_s, "nodes along s");
  cmd.add_option("--nt", g.n_t, "nodes along t");
}

FamilyDescriptor make_descriptor(const FamilyOptions& f) {
  FamilyDescriptor d;
  if (f.family == "circle") {
    d.kind = FamilyKind::circle;
    d.c = f.c.value_or(1.0);
  } else if (f.family == "helix") {
    d.kind = FamilyKind::helix;
    d.c = f.c.value_or(0.0);
  } else {
    d.kind = FamilyKind::ode;
    d.c = f.c.value_or(0.0);
  }
  d.branch = (f.branch == "-" || f.branch == "minus") ? Branch::minus : Branch::plus;
  d.variant = f.variant == "printed" ? HelixVariant::printed : HelixVariant::corrected;
  d.kappa = f.kappa;
  d.tau = f.tau;
  d.theta = f.theta;
  d.ode_t_max = f.ode_t_max;
  d.ode_step = f.ode_step;
  return d;
}

GridSpec make_grid(const FamilyDescriptor& d, const GridOptions& g) {
  GridSpec grid = default_grid(d);
  if (g.s_min) grid.s_min = *g.s_min;
  if (g.s_max) grid.s_max = *g.s_max;
  if (g.t_min) grid.t_min = *g.t_min;
  if (g.t_max) grid.t_max = *g.t_max;
  if (g.n_s) grid.n_s = *g.n_s;
  if (g.n_t) grid.n_t = *g.n_t;
  grid.validate();
  return grid;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error("write failed for " + path);
}

// key=value lines ('#' comments) become "--key value" pairs unless the same
// flag already appears on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string config_path;
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == "--config") {
      if (std::next(it) == args.end()) throw UsageError("--config needs a path");
      config_path = *std::next(it);
      args.erase(it, it + 2);
      break;
    }
    if (it->rfind("--config=", 0) == 0) {
      config_path = it->substr(9);
      args.erase(it);
      break;
    }
  }
  if (config_path.empty()) return args;

  std::ifstream in(config_path);
  if (!in) throw UsageError("cannot read config file " + config_path);
  auto present = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    if (!present(flag)) extra.push_back(flag + "=" + value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

struct FigureMember {
  FamilyDescriptor desc;
  std::string tag;
};

std::vector<FigureMember> figure_members(int figure) {
  const double sqrt3_2 = std::sqrt(3.0) / 2.0;
  const double sqrt5_3 = std::sqrt(5.0) / 3.0;
  const double pi = std::numbers::pi;
  auto circle = [](double c, std::string tag) {
    FamilyDescriptor d;
    d.kind = FamilyKind::circle;
    d.c = c;
    return FigureMember{d, "circle_c_" + tag};
  };
  auto helix = [](double c, std::string tag) {
    FamilyDescriptor d;
    d.kind = FamilyKind::helix;
    d.c = c;
    return FigureMember{d, "helix_c_" + tag};
  };
  switch (figure) {
    case 1:
      return {circle(0.0, "0")};
    case 2:
      return {circle(sqrt3_2, "sqrt3_2")};
    case 3:
      return {circle(sqrt5_3, "sqrt5_3")};
    case 4:
      return {circle(sqrt3_2, "sqrt3_2"), circle(sqrt5_3, "sqrt5_3"), circle(1.0, "1")};
    case 5:
      return {helix(0.0, "0")};
    case 6:
      return {helix(pi / 4.0, "pi_4")};
    case 7:
      return {helix(pi / 2.0, "pi_2")};
    case 8:
      return {helix(0.0, "0"), helix(pi / 4.0, "pi_4"), helix(pi / 2.0, "pi_2")};
    default:
      throw UsageError(fmt::format("figure must be 1..8, got {}", figure));
  }
}

int run_verify(const FamilyOptions& f, const GridOptions& g, const std::string& tier_name,
               const std::string& out_path, std::ostream& out) {
  const FamilyDescriptor d = make_descriptor(f);
  const GridSpec grid = make_grid(d, g);
  std::optional<Tier> tier;
  if (!tier_name.empty()) tier = parse_tier(tier_name);
  const ReportDocument doc = build_report(d, grid, tier);
  write_text(out_path, to_json(doc).dump(2) + "\n", out);
  return doc.pass ? kExitPass : kExitResidualFailure;
}

int run_mesh(const FamilyOptions& f, const GridOptions& g, const std::string& out_path,
             std::ostream& out) {
  const FamilyDescriptor d = make_descriptor(f);
  const GridSpec grid = make_grid(d, g);
  const MeshGrid m = mesh(build_family(d, grid), grid);
  export_obj(m, out_path);
  out << fmt::format("wrote {} vertices, {} faces to {}\n", m.vertices.size(), m.faces.size(),
                     out_path);
  return kExitPass;
}

int run_solve(double kappa, double tau, double theta, double t_max, double step,
              const std::string& out_path, std::ostream& out) {
  const OdeSolution sol = integrate(reduce(kappa, tau), theta, t_max, step);
  std::ostringstream csv;
  write_csv(sol, csv);
  write_text(out_path, csv.str(), out);
  const double drift = sol.max_abs_first_integral();
  if (!out_path.empty()) {
    out << fmt::format("wrote {} nodes to {}; max |P|,|Q| = {:.3e}\n", sol.t.size(), out_path, drift);
  }
  return drift <= 1e-9 ? kExitPass : kExitResidualFailure;
}

int run_reproduce(const std::vector<int>& figures, const std::string& outdir, std::ostream& out) {
  fs::create_directories(outdir);
  bool all_pass = true;
  for (int figure : figures) {
    for (const FigureMember& m : figure_members(figure)) {
      const GridSpec grid = default_grid(m.desc);
      const SurfaceFamily family = build_family(m.desc, grid);
      const fs::path path = fs::path(outdir) / fmt::format("fig{}_{}.obj", figure, m.tag);
      const MeshGrid mg = mesh(family, grid);
      export_obj(mg, path);
      const ReportDocument doc = build_report(m.desc, grid);
      all_pass = all_pass && doc.pass;
      out << fmt::format("{} {} vertices={} faces={} verdict={}\n", path.string(), family.label(),
                         mg.vertices.size(), mg.faces.size(), doc.pass ? "pass" : "fail");
    }
  }
  return all_pass ? kExitPass : kExitResidualFailure;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal surface families through arclength curves", "minsurf"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", kToolVersion);

  FamilyOptions verify_family, mesh_family;
  GridOptions verify_grid, mesh_grid;
  std::string verify_tier, verify_out, mesh_out;

  auto* verify = app.add_subcommand("verify", "verify a family and print a JSON residual report");
  add_family_options(*verify, verify_family);
  add_grid_options(*verify, verify_grid);
  verify->add_option("--tier", verify_tier, "tolerance tier: analytic | ode | fd")
      ->check(CLI::IsMember({"analytic", "ode", "fd"}));
  verify->add_option("--out", verify_out, "write the report here instead of stdout");

  auto* mesh_cmd = app.add_subcommand("mesh", "export a family as an OBJ mesh");
  add_family_options(*mesh_cmd, mesh_family);
  add_grid_options(*mesh_cmd, mesh_grid);
  mesh_cmd->add_option("--out", mesh_out, "OBJ path")->required();

  double kappa = 0.25, tau = 0.0, theta = 0.0, t_max = 5.0, step = 1e-3;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "integrate the reduced ODE system and write CSV");
  solve->add_option("--kappa", kappa, "curvature (> 0)");
  solve->add_option("--tau", tau, "torsion");
  solve->add_option("--theta", theta, "family angle");
  solve->add_option("--t-max", t_max, "half-range of t");
  solve->add_option("--step", step, "RK4 step");
  solve->add_option("--out", solve_out, "CSV path (default stdout)");

  std::vector<int> figures;
  std::string outdir;
  auto* reproduce = app.add_subcommand("reproduce", "write the figure meshes as OBJ files");
  reproduce->add_option("--figure", figures, "figure number(s), 1..8")
      ->required()
      ->check(CLI::Range(1, 8));
  reproduce->add_option("--outdir", outdir, "output directory")->required();

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(verify_family, verify_grid, verify_tier, verify_out, out);
    if (mesh_cmd->parsed()) return run_mesh(mesh_family, mesh_grid, mesh_out, out);
    if (solve->parsed()) return run_solve(kappa, tau, theta, t_max, step, solve_out, out);
    if (reproduce->parsed()) return run_reproduce(figures, outdir, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitResidualFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace minsurf::cli
