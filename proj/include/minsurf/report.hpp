#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minsurf/conditions.hpp"
#include "minsurf/family.hpp"

namespace minsurf {

inline constexpr const char* kToolVersion = "0.1.0";

enum class FamilyKind { circle, helix, ode };

const char* to_string(FamilyKind kind);

/// Everything needed to rebuild a family from the command line or a report.
struct FamilyDescriptor {
  FamilyKind kind = FamilyKind::circle;
  double c = 1.0;
  Branch branch = Branch::plus;
  HelixVariant variant = HelixVariant::corrected;
  double kappa = 0.25;
  double tau = 0.0;
  double theta = 0.0;
  double ode_t_max = 0.0;  // 0: cover the grid's t-range
  double ode_step = 1e-3;

  bool operator==(const FamilyDescriptor&) const = default;
};

/// Default grid for a family: the circle figure grid for the circle family and
/// for torsion-free ODE families, the helix figure grid otherwise.
GridSpec default_grid(const FamilyDescriptor& desc);

/// Default tolerance tier: analytic for closed forms, ode for ODE families.
Tier default_tier(const FamilyDescriptor& desc);

/// Builds the family. For ODE families the integration range is ode_t_max, or
/// max(|t_min|, |t_max|) of the grid when ode_t_max is 0.
SurfaceFamily build_family(const FamilyDescriptor& desc, const GridSpec& grid);

struct ErratumEntry {
  std::string name;
  bool flag = false;
  std::string note;
  std::map<std::string, double> values;

  bool operator==(const ErratumEntry&) const = default;
};

struct ReportDocument {
  std::string version = kToolVersion;
  FamilyDescriptor family;
  std::string label;
  GridSpec grid;
  std::string tier;
  std::vector<ResidualEntry> residuals;
  bool pass = false;
  std::size_t singular_nodes = 0;
  std::string first_singular;
  bool errata_flagged = false;
  std::vector<ErratumEntry> errata;

  bool operator==(const ReportDocument&) const = default;
};

/// Runs verify_minimal and, for the helix family, the published-vs-corrected
/// comparisons.
ReportDocument build_report(const FamilyDescriptor& desc, const GridSpec& grid,
                            std::optional<Tier> tier = std::nullopt);

/// Top-level keys: version, family, grid, tier, residuals, verdict, errata.
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);

}  // namespace minsurf
