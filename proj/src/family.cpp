#include "minsurf/family.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

// Cubic Hermite basis on [0, 1] and its derivative.
struct HermiteBasis {
  double h00, h10, h01, h11;
};

HermiteBasis hermite(double x) {
  const double x2 = x * x;
  const double x3 = x2 * x;
  return {2 * x3 - 3 * x2 + 1, x3 - 2 * x2 + x, -2 * x3 + 3 * x2, x3 - x2};
}

}  // namespace

CoefficientField::CoefficientField(Evaluator eval, double t0, bool t_only)
    : eval_(std::move(eval)), t0_(t0), t_only_(t_only) {
  if (!eval_) throw ParameterError("coefficient field needs an evaluator");
  if (!std::isfinite(t0)) throw ParameterError("t0 must be finite");
}

CoefficientField CoefficientField::from_profile(Profile profile, double t0) {
  if (!profile) throw ParameterError("coefficient profile is empty");
  auto eval = [profile = std::move(profile)](double, double t) {
    const TripleJet j = profile(t);
    CoefficientSample k;
    CoefficientJet* parts[3] = {&k.u, &k.v, &k.w};
    for (int i = 0; i < 3; ++i) {
      parts[i]->value = j.value[i];
      parts[i]->dt = j.dt[i];
      parts[i]->dtt = j.dtt[i];
    }
    return k;
  };
  return CoefficientField(std::move(eval), t0, true);
}

CoefficientField CoefficientField::from_values(ValueEvaluator values, double t0) {
  if (!values) throw ParameterError("coefficient value evaluator is empty");
  constexpr double h1 = 1e-4;
  constexpr double h2 = 1e-3;
  auto eval = [values = std::move(values)](double s, double t) {
    const Triple c = values(s, t);
    const Triple sp = values(s + h1, t), sm = values(s - h1, t);
    const Triple tp = values(s, t + h1), tm = values(s, t - h1);
    const Triple ssp = values(s + h2, t), ssm = values(s - h2, t);
    const Triple ttp = values(s, t + h2), ttm = values(s, t - h2);
    const Triple pp = values(s + h2, t + h2), pm = values(s + h2, t - h2);
    const Triple mp = values(s - h2, t + h2), mm = values(s - h2, t - h2);
    CoefficientSample k;
    CoefficientJet* parts[3] = {&k.u, &k.v, &k.w};
    for (int i = 0; i < 3; ++i) {
      parts[i]->value = c[i];
      parts[i]->ds = (sp[i] - sm[i]) / (2 * h1);
      parts[i]->dt = (tp[i] - tm[i]) / (2 * h1);
      parts[i]->dss = (ssp[i] - 2 * c[i] + ssm[i]) / (h2 * h2);
      parts[i]->dtt = (ttp[i] - 2 * c[i] + ttm[i]) / (h2 * h2);
      parts[i]->dst = (pp[i] - pm[i] - mp[i] + mm[i]) / (4 * h2 * h2);
    }
    return k;
  };
  CoefficientField field(std::move(eval), t0, false);
  field.finite_differences_ = true;
  return field;
}

PencilTerms pencil_terms(const CoefficientSample& k, const FrenetData& fd) {
  const double kap = fd.kappa;
  const double tau = fd.tau;
  const auto& [u, v, w] = k;
  PencilTerms p;
  p.a = 1.0 + u.ds - kap * v.value;
  p.b = v.ds + kap * u.value - tau * w.value;
  p.c = w.ds + tau * v.value;
  p.a_s = u.dss - fd.dkappa * v.value - kap * v.ds;
  p.b_s = v.dss + fd.dkappa * u.value + kap * u.ds - fd.dtau * w.value - tau * w.ds;
  p.c_s = w.dss + fd.dtau * v.value + tau * v.ds;
  p.a_t = u.dst - kap * v.dt;
  p.b_t = v.dst + kap * u.dt - tau * w.dt;
  p.c_t = w.dst + tau * v.dt;
  return p;
}

SurfaceFamily::SurfaceFamily(Curve curve, CoefficientField coeffs, std::string label,
                             double parameter)
    : curve_(std::move(curve)),
      coeffs_(std::move(coeffs)),
      label_(std::move(label)),
      parameter_(parameter) {}

Vec3 SurfaceFamily::evaluate(double s, double t) const {
  const Vec3 r = curve_.point(s);
  const FrenetData fd = curve_.frenet(s);
  const CoefficientSample k = coeffs_(s, t);
  return r + k.u.value * fd.T + k.v.value * fd.N + k.w.value * fd.B;
}

SurfaceJet SurfaceFamily::jet(double s, double t) const {
  const Vec3 r = curve_.point(s);
  const FrenetData fd = curve_.frenet(s);
  const CoefficientSample k = coeffs_(s, t);
  const PencilTerms p = pencil_terms(k, fd);
  const double kap = fd.kappa;
  const double tau = fd.tau;
  auto frame = [&](double a, double b, double c) -> Vec3 { return a * fd.T + b * fd.N + c * fd.B; };

  SurfaceJet j;
  j.x = r + frame(k.u.value, k.v.value, k.w.value);
  j.x_s = frame(p.a, p.b, p.c);
  j.x_t = frame(k.u.dt, k.v.dt, k.w.dt);
  j.x_ss = frame(p.a_s - kap * p.b, p.b_s + kap * p.a - tau * p.c, p.c_s + tau * p.b);
  j.x_st = frame(p.a_t, p.b_t, p.c_t);
  j.x_tt = frame(k.u.dtt, k.v.dtt, k.w.dtt);
  return j;
}

SurfaceFamily builtin_circle_family(double c, Branch branch) {
  std::ostringstream label;
  label.precision(17);
  label << "circle(c=" << c << ", branch=" << to_string(branch) << ")";
  return SurfaceFamily(Curve::circle(4.0), CoefficientField::from_profile(circle_profile(c, branch)),
                       label.str(), c);
}

SurfaceFamily builtin_helix_family(double c, HelixVariant variant) {
  std::ostringstream label;
  label.precision(17);
  label << "helix(c=" << c << ", variant=" << to_string(variant) << ")";
  return SurfaceFamily(Curve::helix(kHalfSqrt2, kHalfSqrt2),
                       CoefficientField::from_profile(helix_profile(c, variant)), label.str(), c);
}

SurfaceFamily family_from_ode(const Curve& curve, OdeSolution solution) {
  constexpr double tol = 1e-12;
  if (std::abs(curve.kappa() - solution.kappa) > tol || std::abs(curve.tau() - solution.tau) > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "curve (kappa=" << curve.kappa() << ", tau=" << curve.tau()
        << ") does not match ODE solution (kappa=" << solution.kappa << ", tau=" << solution.tau
        << ")";
    throw ConsistencyError(msg.str());
  }
  if (solution.t.size() < 2 || solution.t.size() != solution.state.size()) {
    throw ParameterError("ODE solution needs at least two nodes");
  }

  const ReducedSystem system(solution.kappa, solution.tau);
  std::vector<OdeState> slopes;
  slopes.reserve(solution.state.size());
  for (const auto& y : solution.state) slopes.push_back(system.rhs(y));

  const double theta = solution.theta;
  auto eval = [system, sol = std::move(solution), slopes = std::move(slopes)](double, double t) {
    const double t_lo = sol.t.front();
    const double t_hi = sol.t.back();
    if (!(t >= t_lo && t <= t_hi)) {
      std::ostringstream msg;
      msg << "t = " << t << " outside ODE solution range [" << t_lo << ", " << t_hi << "]";
      throw DomainError(msg.str());
    }
    const std::size_t last = sol.t.size() - 1;
    auto k = static_cast<std::size_t>(std::floor((t - t_lo) / sol.step));
    if (k >= last) k = last - 1;
    const double h = sol.t[k + 1] - sol.t[k];
    const double x = (t - sol.t[k]) / h;
    const HermiteBasis hb = hermite(x);

    OdeState y;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = hb.h00 * sol.state[k][i] + hb.h10 * h * slopes[k][i] + hb.h01 * sol.state[k + 1][i] +
             hb.h11 * h * slopes[k + 1][i];
    }
    const Triple acc = system.accelerations({y[0], y[1], y[2]});
    CoefficientSample out;
    CoefficientJet* parts[3] = {&out.u, &out.v, &out.w};
    for (int i = 0; i < 3; ++i) {
      parts[i]->value = y[i];
      parts[i]->dt = y[i + 3];
      parts[i]->dtt = acc[i];
    }
    return out;
  };

  std::ostringstream label;
  label.precision(17);
  label << "ode(kappa=" << curve.kappa() << ", tau=" << curve.tau() << ", theta=" << theta << ")";
  return SurfaceFamily(curve, CoefficientField(std::move(eval), 0.0, true), label.str(), theta);
}

SurfacePatch printed_helix_surface(double c, double s, double t) {
  const double cc = std::cos(c), sc = std::sin(c);
  const double cs = std::cos(s), ss = std::sin(s);
  const double ch = std::cosh(t), sh = std::sinh(t);
  const double r = kHalfSqrt2;
  SurfacePatch p;
  p.x = {r * ch * cs - sh * (r * cc * ss - sc * cs), r * ch * ss + sh * (r * cc * cs - sc * ss),
         r * t * cc + r * s};
  p.x_s = {-r * ch * ss - sh * (r * cc * cs + sc * ss), r * ch * cs + sh * (-r * cc * ss - sc * cs),
           r};
  p.x_t = {r * sh * cs - ch * (r * cc * ss - sc * cs), r * sh * ss + ch * (r * cc * cs - sc * ss),
           r * cc};
  return p;
}

}  // namespace minsurf
