#pragma once

#include "minsurf/curves.hpp"
#include "minsurf/family.hpp"
#include "minsurf/vec.hpp"

namespace minsurf {

/// Metric determinant EG - F^2 at or below this is treated as singular.
inline constexpr double kRegularityEpsilon = 1e-14;

/// First and second fundamental forms, unit normal n = x_s x x_t / |x_s x x_t|
/// and H = (Eg - 2Ff + Ge) / (EG - F^2).
///
/// H is the formula above exactly, without the customary factor 1/2, so it is
/// twice the textbook mean curvature. Minimality (H = 0) is unaffected.
struct FundamentalForms {
  double E = 0.0, F = 0.0, G = 0.0;
  double e = 0.0, f = 0.0, g = 0.0;
  Vec3 n = Vec3::Zero();
  double H = 0.0;
};

/// Throws SingularPointError when EG - F^2 <= eps_reg.
FundamentalForms fundamental_forms(const SurfaceJet& jet, double eps_reg = kRegularityEpsilon);

/// Frenet-basis components of x_s x x_t.
struct PhiComponents {
  double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;

  double norm() const;
};

PhiComponents phi_components(const CoefficientSample& k, const FrenetData& fd);
PhiComponents phi_components(const SurfaceFamily& family, double s, double t);

/// |n_cross - (phi1 T + phi2 N + phi3 B) / |phi||. Throws SingularPointError
/// for a zero phi or cross product.
double normal_consistency(const SurfaceJet& jet, const PhiComponents& phis, const FrenetData& frame);

}  // namespace minsurf
