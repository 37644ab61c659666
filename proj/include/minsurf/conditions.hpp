#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minsurf/family.hpp"

namespace minsurf {

/// Rectangular (s, t) sampling grid; node i runs over s, node j over t.
struct GridSpec {
  double s_min = 0.0, s_max = 1.0;
  double t_min = 0.0, t_max = 1.0;
  int n_s = 2, n_t = 2;

  /// Throws ParameterError unless s_min < s_max, t_min < t_max, n_s, n_t >= 2.
  void validate() const;
  double s_at(int i) const;
  double t_at(int j) const;
  std::vector<double> s_nodes() const;

  bool operator==(const GridSpec&) const = default;
};

/// 0 <= s <= 8 pi, -5 <= t <= 5 at 129 x 65 nodes.
GridSpec circle_figure_grid();
/// 0 <= s <= 2 pi, -2 <= t <= 2 at 65 x 33 nodes.
GridSpec helix_figure_grid();

/// |E - G| and |F|, computed once from the ambient jet and once from the
/// Frenet-basis expressions of the coefficients.
struct IsothermalResiduals {
  double metric = 0.0;
  double orthogonality = 0.0;
  double metric_frenet = 0.0;
  double orthogonality_frenet = 0.0;

  double dual_path_gap() const;
};

IsothermalResiduals isothermal_residuals(const SurfaceFamily& family, double s, double t);

/// Absolute Frenet-component residuals of the three harmonic conditions, and
/// the ambient norm |x_ss + x_tt| for the dual-path comparison.
struct HarmonicResiduals {
  double tangent = 0.0;
  double normal = 0.0;
  double binormal = 0.0;
  double laplacian_norm = 0.0;

  double max() const;
  double dual_path_gap() const;
};

HarmonicResiduals harmonic_residuals(const SurfaceFamily& family, double s, double t);

/// |x(s, t0) - r(s)|
double interpolation_residual(const SurfaceFamily& family, double s);

struct GeodesicThresholds {
  double zero = 1e-10;     // |phi1|, |phi3| at most this
  double nonzero = 1e-8;   // |phi2| at least this
};

struct GeodesicCheck {
  bool is_geodesic = false;
  double max_phi1 = 0.0;
  double max_phi3 = 0.0;
  double min_phi2 = 0.0;
};

GeodesicCheck geodesic_check(const SurfaceFamily& family, std::span<const double> s_grid,
                             GeodesicThresholds thresholds = {});

struct AsymptoticCheck {
  bool is_asymptotic = false;
  double max_residual = 0.0;
};

/// d phi1/ds (s, t0) - kappa phi2(s, t0), with the s-derivative by central
/// differences of step h_s.
AsymptoticCheck asymptotic_check(const SurfaceFamily& family, std::span<const double> s_grid,
                                 double h_s = 1e-4, double tolerance = 1e-8);

enum class Tier { analytic, ode, finite_difference };

const char* to_string(Tier tier);
std::optional<Tier> parse_tier(const std::string& name);

struct Tolerances {
  double interpolation = 1e-12;
  double isothermal = 1e-10;
  double harmonic = 1e-10;
  double mean_curvature = 1e-8;
  double dual_path = 1e-10;

  static Tolerances for_tier(Tier tier);
};

struct ResidualEntry {
  std::string name;
  double max_abs = 0.0;
  double rms = 0.0;
  double argmax_s = 0.0;
  double argmax_t = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  bool operator==(const ResidualEntry&) const = default;
};

struct ResidualReport {
  GridSpec grid;
  Tolerances tolerances;
  std::vector<ResidualEntry> entries;
  std::size_t singular_nodes = 0;
  std::string first_singular;  // message and location of the first singular node
  bool pass = false;

  const ResidualEntry* find(const std::string& name) const;
  /// Largest max_abs over the three harmonic entries.
  double max_harmonic() const;
};

/// Sweeps interpolation (over the s nodes at t0), both isothermal residuals,
/// the three harmonic residuals and |H| over every grid node. Singular nodes
/// are counted and fail the report without aborting the sweep.
ResidualReport verify_minimal(const SurfaceFamily& family, const GridSpec& grid,
                              const Tolerances& tolerances);

/// Two readings of the isothermal orthogonality condition for t-only
/// coefficients along the helix kappa = tau = sqrt(2)/2:
///   printed: (1 - r v) u_t + 1/2 (u - w) v_t + r v w_t
///   derived: (1 - r v) u_t + r (u - w) v_t + r v w_t,   r = sqrt(2)/2.
struct H2Comparison {
  double printed_reading_max = 0.0;
  double derived_reading_max = 0.0;
};

/// Throws ConsistencyError unless the family's curve has kappa = tau = sqrt(2)/2.
H2Comparison compare_h2_readings(const SurfaceFamily& family, const GridSpec& grid);

}  // namespace minsurf
