#pragma once

#include <functional>
#include <string>

#include "minsurf/curves.hpp"
#include "minsurf/profiles.hpp"
#include "minsurf/solver.hpp"
#include "minsurf/vec.hpp"

namespace minsurf {

/// Value and first/second partials of one scalar coefficient at (s, t).
struct CoefficientJet {
  double value = 0.0;
  double ds = 0.0;
  double dt = 0.0;
  double dss = 0.0;
  double dst = 0.0;
  double dtt = 0.0;
};

struct CoefficientSample {
  CoefficientJet u;
  CoefficientJet v;
  CoefficientJet w;
};

/// The coefficient functions u, v, w of the pencil
///   x(s, t) = r(s) + u T(s) + v N(s) + w B(s),
/// which must vanish on t = t0.
class CoefficientField {
 public:
  using Evaluator = std::function<CoefficientSample(double s, double t)>;
  using ValueEvaluator = std::function<Triple(double s, double t)>;

  CoefficientField(Evaluator eval, double t0, bool t_only);

  /// t-only field from a closed-form profile; s-partials are zero.
  static CoefficientField from_profile(Profile profile, double t0 = 0.0);

  /// Value-only field whose partials come from central differences
  /// (step 1e-4 for first derivatives, 1e-3 for second).
  static CoefficientField from_values(ValueEvaluator values, double t0 = 0.0);

  CoefficientSample operator()(double s, double t) const { return eval_(s, t); }
  double t0() const { return t0_; }
  bool t_only() const { return t_only_; }
  bool uses_finite_differences() const { return finite_differences_; }

 private:
  Evaluator eval_;
  double t0_;
  bool t_only_;
  bool finite_differences_ = false;
};

struct SurfaceJet {
  Vec3 x;
  Vec3 x_s;
  Vec3 x_t;
  Vec3 x_ss;
  Vec3 x_st;
  Vec3 x_tt;
};

/// Frenet-basis components of x_s and their partials:
///   x_s = a T + b N + c B,  a = 1 + u_s - kappa v,  b = v_s + kappa u - tau w,
///   c = w_s + tau v.
struct PencilTerms {
  double a = 0.0, b = 0.0, c = 0.0;
  double a_s = 0.0, b_s = 0.0, c_s = 0.0;
  double a_t = 0.0, b_t = 0.0, c_t = 0.0;
};

PencilTerms pencil_terms(const CoefficientSample& k, const FrenetData& fd);

class SurfaceFamily {
 public:
  SurfaceFamily(Curve curve, CoefficientField coeffs, std::string label, double parameter);

  const Curve& curve() const { return curve_; }
  const CoefficientField& coeffs() const { return coeffs_; }
  const std::string& label() const { return label_; }
  double parameter() const { return parameter_; }
  double t0() const { return coeffs_.t0(); }

  Vec3 evaluate(double s, double t) const;
  SurfaceJet jet(double s, double t) const;

 private:
  Curve curve_;
  CoefficientField coeffs_;
  std::string label_;
  double parameter_;
};

inline Vec3 evaluate(const SurfaceFamily& family, double s, double t) {
  return family.evaluate(s, t);
}
inline SurfaceJet jet(const SurfaceFamily& family, double s, double t) {
  return family.jet(s, t);
}

/// The catenoid/plane family through the circle of radius 4. Throws
/// ParameterError for |c| > 1.
SurfaceFamily builtin_circle_family(double c, Branch branch = Branch::plus);

/// The family through the helix (sqrt(2)/2 cos s, sqrt(2)/2 sin s, sqrt(2)/2 s).
SurfaceFamily builtin_helix_family(double c, HelixVariant variant = HelixVariant::corrected);

/// Pencil whose coefficients Hermite-interpolate an ODE solution in t.
/// Throws ConsistencyError if the curve's kappa, tau differ from the solution's.
SurfaceFamily family_from_ode(const Curve& curve, OdeSolution solution);

/// Closed-form helix surface y(s, t; c) exactly as published, with analytic
/// first partials. Its z-component carries +t cos c where the pencil form
/// gives -t cos c.
struct SurfacePatch {
  Vec3 x;
  Vec3 x_s;
  Vec3 x_t;
};

SurfacePatch printed_helix_surface(double c, double s, double t);

}  // namespace minsurf
