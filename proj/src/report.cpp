#include "minsurf/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "minsurf/errors.hpp"
#include "minsurf/solver.hpp"

namespace minsurf {

using nlohmann::json;

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::circle:
      return "circle";
    case FamilyKind::helix:
      return "helix";
    case FamilyKind::ode:
      return "ode";
  }
  return "circle";
}

namespace {

FamilyKind parse_kind(const std::string& s) {
  if (s == "circle") return FamilyKind::circle;
  if (s == "helix") return FamilyKind::helix;
  if (s == "ode") return FamilyKind::ode;
  throw UsageError("unknown family kind '" + s + "'");
}

Branch parse_branch(const std::string& s) {
  if (s == "+") return Branch::plus;
  if (s == "-") return Branch::minus;
  throw UsageError("unknown branch '" + s + "'");
}

HelixVariant parse_variant(const std::string& s) {
  if (s == "printed") return HelixVariant::printed;
  if (s == "corrected") return HelixVariant::corrected;
  throw UsageError("unknown helix variant '" + s + "'");
}

ErratumEntry w_amplitude_erratum(const FamilyDescriptor& desc, const GridSpec& grid,
                                 const ResidualReport& used) {
  const Tolerances tol = Tolerances::for_tier(Tier::analytic);
  const double printed =
      verify_minimal(builtin_helix_family(desc.c, HelixVariant::printed), grid, tol).max_harmonic();
  const double corrected =
      verify_minimal(builtin_helix_family(desc.c, HelixVariant::corrected), grid, tol).max_harmonic();
  ErratumEntry e;
  e.name = "helix_w_amplitude";
  e.note =
      "published w(t) = -1/4 cos c (t + sinh t) breaks the harmonic conditions; "
      "amplitude -1/2 satisfies them";
  e.values = {{"printed_harmonic_max", printed}, {"corrected_harmonic_max", corrected}};
  const bool harmonic_ok = used.max_harmonic() <= used.tolerances.harmonic;
  e.flag = desc.variant == HelixVariant::printed && !harmonic_ok;
  return e;
}

ErratumEntry h2_erratum(const SurfaceFamily& family, const GridSpec& grid) {
  const H2Comparison h2 = compare_h2_readings(family, grid);
  ErratumEntry e;
  e.name = "h2_coefficient";
  e.note =
      "published h2 has 1/2 on (u - w) v_t; the general orthogonality condition gives sqrt(2)/2, "
      "which is the reading used for verdicts";
  e.values = {{"printed_reading_max", h2.printed_reading_max},
              {"derived_reading_max", h2.derived_reading_max}};
  return e;
}

ErratumEntry printed_surface_erratum(double c, const GridSpec& grid) {
  double max_metric = 0.0, max_orth = 0.0;
  double min_det = std::numeric_limits<double>::infinity();
  double min_det_t0 = std::numeric_limits<double>::infinity();
  for (int j = 0; j < grid.n_t; ++j) {
    for (int i = 0; i < grid.n_s; ++i) {
      const SurfacePatch p = printed_helix_surface(c, grid.s_at(i), grid.t_at(j));
      const double E = p.x_s.squaredNorm(), F = p.x_s.dot(p.x_t), G = p.x_t.squaredNorm();
      max_metric = std::max(max_metric, std::abs(E - G));
      max_orth = std::max(max_orth, std::abs(F));
      min_det = std::min(min_det, E * G - F * F);
    }
  }
  for (int i = 0; i < grid.n_s; ++i) {
    const SurfacePatch p = printed_helix_surface(c, grid.s_at(i), 0.0);
    const double E = p.x_s.squaredNorm(), F = p.x_s.dot(p.x_t), G = p.x_t.squaredNorm();
    min_det_t0 = std::min(min_det_t0, E * G - F * F);
  }
  ErratumEntry e;
  e.name = "helix_printed_surface";
  e.note =
      "published closed form has z = sqrt(2)/2 (s + t cos c); the pencil gives "
      "sqrt(2)/2 (s - t cos c). Verdicts use the pencil form";
  e.values = {{"printed_surface_max_metric", max_metric},
              {"printed_surface_max_orthogonality", max_orth},
              {"printed_surface_min_det", min_det},
              {"printed_surface_min_det_t0", min_det_t0}};
  return e;
}

}  // namespace

GridSpec default_grid(const FamilyDescriptor& desc) {
  switch (desc.kind) {
    case FamilyKind::circle:
      return circle_figure_grid();
    case FamilyKind::helix:
      return helix_figure_grid();
    case FamilyKind::ode:
      return desc.tau == 0.0 ? circle_figure_grid() : helix_figure_grid();
  }
  return circle_figure_grid();
}

Tier default_tier(const FamilyDescriptor& desc) {
  return desc.kind == FamilyKind::ode ? Tier::ode : Tier::analytic;
}

SurfaceFamily build_family(const FamilyDescriptor& desc, const GridSpec& grid) {
  switch (desc.kind) {
    case FamilyKind::circle:
      return builtin_circle_family(desc.c, desc.branch);
    case FamilyKind::helix:
      return builtin_helix_family(desc.c, desc.variant);
    case FamilyKind::ode: {
      const double t_max = desc.ode_t_max > 0.0
                               ? desc.ode_t_max
                               : std::max(std::abs(grid.t_min), std::abs(grid.t_max));
      const OdeSolution sol = integrate(reduce(desc.kappa, desc.tau), desc.theta, t_max, desc.ode_step);
      return family_from_ode(Curve::const_frenet(desc.kappa, desc.tau), sol);
    }
  }
  throw UsageError("unknown family kind");
}

ReportDocument build_report(const FamilyDescriptor& desc, const GridSpec& grid,
                            std::optional<Tier> tier) {
  const SurfaceFamily family = build_family(desc, grid);
  Tier used_tier = tier.value_or(default_tier(desc));
  if (!tier && family.coeffs().uses_finite_differences()) used_tier = Tier::finite_difference;
  const ResidualReport rr = verify_minimal(family, grid, Tolerances::for_tier(used_tier));

  ReportDocument doc;
  doc.family = desc;
  doc.label = family.label();
  doc.grid = grid;
  doc.tier = to_string(used_tier);
  doc.residuals = rr.entries;
  doc.pass = rr.pass;
  doc.singular_nodes = rr.singular_nodes;
  doc.first_singular = rr.first_singular;
  if (desc.kind == FamilyKind::helix) {
    doc.errata.push_back(w_amplitude_erratum(desc, grid, rr));
    doc.errata.push_back(h2_erratum(family, grid));
    doc.errata.push_back(printed_surface_erratum(desc.c, grid));
  }
  doc.errata_flagged = std::any_of(doc.errata.begin(), doc.errata.end(),
                                   [](const ErratumEntry& e) { return e.flag; });
  return doc;
}

json to_json(const ReportDocument& doc) {
  const FamilyDescriptor& f = doc.family;
  json family = {{"kind", to_string(f.kind)},
                 {"label", doc.label},
                 {"c", f.c},
                 {"branch", to_string(f.branch)},
                 {"variant", to_string(f.variant)},
                 {"kappa", f.kappa},
                 {"tau", f.tau},
                 {"theta", f.theta},
                 {"ode_t_max", f.ode_t_max},
                 {"ode_step", f.ode_step}};
  const GridSpec& g = doc.grid;
  json grid = {{"s_min", g.s_min}, {"s_max", g.s_max}, {"t_min", g.t_min},
               {"t_max", g.t_max}, {"n_s", g.n_s},     {"n_t", g.n_t}};
  json residuals = json::array();
  for (const auto& e : doc.residuals) {
    residuals.push_back({{"name", e.name},
                         {"max_abs", e.max_abs},
                         {"rms", e.rms},
                         {"argmax", {{"s", e.argmax_s}, {"t", e.argmax_t}}},
                         {"tolerance", e.tolerance},
                         {"pass", e.pass}});
  }
  json entries = json::array();
  for (const auto& e : doc.errata) {
    entries.push_back({{"name", e.name}, {"flag", e.flag}, {"note", e.note}, {"values", e.values}});
  }
  return {{"version", doc.version},
          {"family", family},
          {"grid", grid},
          {"tier", doc.tier},
          {"residuals", residuals},
          {"verdict",
           {{"status", doc.pass ? "pass" : "fail"},
            {"singular_nodes", doc.singular_nodes},
            {"first_singular", doc.first_singular}}},
          {"errata", {{"flagged", doc.errata_flagged}, {"entries", entries}}}};
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.version = j.at("version").get<std::string>();
    const json& f = j.at("family");
    doc.family.kind = parse_kind(f.at("kind").get<std::string>());
    doc.label = f.at("label").get<std::string>();
    doc.family.c = f.at("c").get<double>();
    doc.family.branch = parse_branch(f.at("branch").get<std::string>());
    doc.family.variant = parse_variant(f.at("variant").get<std::string>());
    doc.family.kappa = f.at("kappa").get<double>();
    doc.family.tau = f.at("tau").get<double>();
    doc.family.theta = f.at("theta").get<double>();
    doc.family.ode_t_max = f.at("ode_t_max").get<double>();
    doc.family.ode_step = f.at("ode_step").get<double>();
    const json& g = j.at("grid");
    doc.grid = {g.at("s_min").get<double>(), g.at("s_max").get<double>(),
                g.at("t_min").get<double>(), g.at("t_max").get<double>(),
                g.at("n_s").get<int>(),      g.at("n_t").get<int>()};
    doc.tier = j.at("tier").get<std::string>();
    for (const json& r : j.at("residuals")) {
      ResidualEntry e;
      e.name = r.at("name").get<std::string>();
      e.max_abs = r.at("max_abs").get<double>();
      e.rms = r.at("rms").get<double>();
      e.argmax_s = r.at("argmax").at("s").get<double>();
      e.argmax_t = r.at("argmax").at("t").get<double>();
      e.tolerance = r.at("tolerance").get<double>();
      e.pass = r.at("pass").get<bool>();
      doc.residuals.push_back(std::move(e));
    }
    const json& v = j.at("verdict");
    doc.pass = v.at("status").get<std::string>() == "pass";
    doc.singular_nodes = v.at("singular_nodes").get<std::size_t>();
    doc.first_singular = v.at("first_singular").get<std::string>();
    const json& er = j.at("errata");
    doc.errata_flagged = er.at("flagged").get<bool>();
    for (const json& x : er.at("entries")) {
      ErratumEntry e;
      e.name = x.at("name").get<std::string>();
      e.flag = x.at("flag").get<bool>();
      e.note = x.at("note").get<std::string>();
      e.values = x.at("values").get<std::map<std::string, double>>();
      doc.errata.push_back(std::move(e));
    }
    return doc;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace minsurf
