#pragma once

#include <string>

#include "minsurf/vec.hpp"

namespace minsurf {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double s) const { return s >= lo && s <= hi; }
};

/// Frenet apparatus at one curve parameter. dkappa and dtau are the
/// arclength derivatives of curvature and torsion (zero for every built-in).
struct FrenetData {
  Vec3 T;
  Vec3 N;
  Vec3 B;
  double kappa = 0.0;
  double tau = 0.0;
  double dkappa = 0.0;
  double dtau = 0.0;
};

enum class CurveKind { circle, helix, const_frenet };

/// Arclength-parametrized circular helix
///   r(s) = (a cos(s/L), a sin(s/L), b s/L),  L = sqrt(a^2 + b^2),
/// with kappa = a/L^2 and tau = b/L^2. The circle is the b = 0 case and the
/// const-frenet curve picks (a, b) from a prescribed (kappa, tau).
class Curve {
 public:
  static Curve circle(double radius);
  static Curve circle(double radius, Interval domain);
  /// a = 0 gives a straight line whose Frenet frame is undefined.
  static Curve helix(double radius, double pitch);
  static Curve helix(double radius, double pitch, Interval domain);
  static Curve const_frenet(double kappa, double tau);
  static Curve const_frenet(double kappa, double tau, Interval domain);

  CurveKind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  double radius() const { return radius_; }
  double pitch() const { return pitch_; }
  double kappa() const;
  double tau() const;
  /// True for every kind this class can represent.
  bool constant_curvature() const { return true; }

  Vec3 point(double s) const;
  FrenetData frenet(double s) const;
  std::string describe() const;

 private:
  Curve(CurveKind kind, double radius, double pitch, Interval domain);
  static Interval default_domain(double radius, double pitch);
  void check_domain(double s) const;

  CurveKind kind_;
  double radius_;
  double pitch_;
  double length_scale_;
  Interval domain_;
};

Vec3 curve_point(const Curve& curve, double s);
FrenetData frenet(const Curve& curve, double s);

/// Central-difference residuals of the three Frenet-Serret equations.
struct FrenetSerretResidual {
  double tangent = 0.0;   // |T' - kappa N|
  double normal = 0.0;    // |N' + kappa T - tau B|
  double binormal = 0.0;  // |B' + tau N|
};

FrenetSerretResidual frenet_serret_residual(const Curve& curve, double s, double h = 1e-4);

/// Central-difference norm of r'(s); equals 1 up to O(h^2) on arclength curves.
double speed_fd(const Curve& curve, double s, double h = 1e-4);

}  // namespace minsurf
