#include "minsurf/curves.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Curve::Curve(CurveKind kind, double radius, double pitch, Interval domain)
    : kind_(kind),
      radius_(radius),
      pitch_(pitch),
      length_scale_(std::hypot(radius, pitch)),
      domain_(domain) {
  if (!std::isfinite(radius) || !std::isfinite(pitch) || radius < 0.0) {
    throw ParameterError("curve radius must be finite and non-negative");
  }
  if (length_scale_ == 0.0) {
    throw ParameterError("curve radius and pitch cannot both vanish");
  }
  if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
    throw ParameterError("curve domain must be a finite interval with lo < hi");
  }
}

Interval Curve::default_domain(double radius, double pitch) {
  const double period = kTwoPi * std::hypot(radius, pitch);
  return {-period, 2.0 * period};
}

Curve Curve::circle(double radius) {
  if (!(radius > 0.0)) throw ParameterError("circle radius must be positive");
  return circle(radius, default_domain(radius, 0.0));
}

Curve Curve::circle(double radius, Interval domain) {
  if (!(radius > 0.0)) throw ParameterError("circle radius must be positive");
  return Curve(CurveKind::circle, radius, 0.0, domain);
}

Curve Curve::helix(double radius, double pitch) {
  if (!(radius >= 0.0) || !std::isfinite(pitch)) throw ParameterError("helix needs radius >= 0");
  return helix(radius, pitch, default_domain(radius, pitch));
}

Curve Curve::helix(double radius, double pitch, Interval domain) {
  return Curve(CurveKind::helix, radius, pitch, domain);
}

Curve Curve::const_frenet(double kappa, double tau) {
  if (!(kappa >= 0.0) || !std::isfinite(tau) || (kappa == 0.0 && tau == 0.0)) {
    throw ParameterError("const-frenet curve needs kappa >= 0 and (kappa, tau) != 0");
  }
  const double k2 = kappa * kappa + tau * tau;
  return const_frenet(kappa, tau, default_domain(kappa / k2, tau / k2));
}

Curve Curve::const_frenet(double kappa, double tau, Interval domain) {
  if (!(kappa >= 0.0) || !std::isfinite(tau) || (kappa == 0.0 && tau == 0.0)) {
    throw ParameterError("const-frenet curve needs kappa >= 0 and (kappa, tau) != 0");
  }
  const double k2 = kappa * kappa + tau * tau;
  return Curve(CurveKind::const_frenet, kappa / k2, tau / k2, domain);
}

double Curve::kappa() const { return radius_ / (length_scale_ * length_scale_); }

double Curve::tau() const { return pitch_ / (length_scale_ * length_scale_); }

void Curve::check_domain(double s) const {
  if (!std::isfinite(s) || !domain_.contains(s)) {
    std::ostringstream msg;
    msg << "s = " << s << " outside curve domain [" << domain_.lo << ", " << domain_.hi << "]";
    throw DomainError(msg.str());
  }
}

Vec3 Curve::point(double s) const {
  check_domain(s);
  const double phase = s / length_scale_;
  return {radius_ * std::cos(phase), radius_ * std::sin(phase), pitch_ * phase};
}

FrenetData Curve::frenet(double s) const {
  check_domain(s);
  const double k = kappa();
  if (k == 0.0) throw DegenerateFrameError("zero curvature: Frenet frame undefined");
  const double phase = s / length_scale_;
  const double c = std::cos(phase);
  const double sn = std::sin(phase);
  FrenetData fd;
  fd.T = Vec3(-radius_ * sn, radius_ * c, pitch_) / length_scale_;
  fd.N = Vec3(-c, -sn, 0.0);
  fd.B = fd.T.cross(fd.N);
  fd.kappa = k;
  fd.tau = tau();
  return fd;
}

std::string Curve::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case CurveKind::circle:
      os << "circle(R=" << radius_ << ")";
      break;
    case CurveKind::helix:
      os << "helix(a=" << radius_ << ", b=" << pitch_ << ")";
      break;
    case CurveKind::const_frenet:
      os << "const-frenet(kappa=" << kappa() << ", tau=" << tau() << ")";
      break;
  }
  return os.str();
}

Vec3 curve_point(const Curve& curve, double s) { return curve.point(s); }

FrenetData frenet(const Curve& curve, double s) { return curve.frenet(s); }

FrenetSerretResidual frenet_serret_residual(const Curve& curve, double s, double h) {
  if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
  const FrenetData lo = curve.frenet(s - h);
  const FrenetData hi = curve.frenet(s + h);
  const FrenetData mid = curve.frenet(s);
  const double inv = 1.0 / (2.0 * h);
  const Vec3 dT = (hi.T - lo.T) * inv;
  const Vec3 dN = (hi.N - lo.N) * inv;
  const Vec3 dB = (hi.B - lo.B) * inv;
  return {(dT - mid.kappa * mid.N).norm(),
          (dN + mid.kappa * mid.T - mid.tau * mid.B).norm(),
          (dB + mid.tau * mid.N).norm()};
}

double speed_fd(const Curve& curve, double s, double h) {
  if (!(h > 0.0)) throw ParameterError("finite-difference step must be positive");
  return ((curve.point(s + h) - curve.point(s - h)) / (2.0 * h)).norm();
}

}  // namespace minsurf
