#include "minsurf/solver.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "minsurf/errors.hpp"

namespace minsurf {

ReducedSystem::ReducedSystem(double kappa, double tau) : kappa_(kappa), tau_(tau) {
  if (!(kappa > 0.0) || !std::isfinite(kappa) || !std::isfinite(tau)) {
    throw ParameterError("reduced system needs finite kappa > 0 and finite tau");
  }
}

Triple ReducedSystem::accelerations(const Triple& uvw) const {
  const auto [u, v, w] = uvw;
  const double normal_mix = kappa_ * u - tau_ * w;
  return {kappa_ * normal_mix, (kappa_ * kappa_ + tau_ * tau_) * v - kappa_, -tau_ * normal_mix};
}

OdeState ReducedSystem::rhs(const OdeState& y) const {
  const Triple acc = accelerations({y[0], y[1], y[2]});
  return {y[3], y[4], y[5], acc[0], acc[1], acc[2]};
}

double ReducedSystem::first_integral_p(const OdeState& y) const {
  const auto [u, v, w, ut, vt, wt] = y;
  const double a = 1.0 - kappa_ * v;
  const double b = kappa_ * u - tau_ * w;
  const double c = tau_ * v;
  return a * a + b * b + c * c - (ut * ut + vt * vt + wt * wt);
}

double ReducedSystem::first_integral_q(const OdeState& y) const {
  const auto [u, v, w, ut, vt, wt] = y;
  return (1.0 - kappa_ * v) * ut + (kappa_ * u - tau_ * w) * vt + tau_ * v * wt;
}

ReducedSystem reduce(double kappa, double tau) { return ReducedSystem(kappa, tau); }

double OdeSolution::max_abs_first_integral() const {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max({m, std::abs(p[i]), std::abs(q[i])});
  return m;
}

OdeState initial_state(double theta) {
  return {0.0, 0.0, 0.0, 0.0, std::sin(theta), std::cos(theta)};
}

OdeState rk4_step(const ReducedSystem& system, const OdeState& y, double h) {
  auto axpy = [](const OdeState& base, double a, const OdeState& d) {
    OdeState r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = base[i] + a * d[i];
    return r;
  };
  const OdeState k1 = system.rhs(y);
  const OdeState k2 = system.rhs(axpy(y, 0.5 * h, k1));
  const OdeState k3 = system.rhs(axpy(y, 0.5 * h, k2));
  const OdeState k4 = system.rhs(axpy(y, h, k3));
  OdeState next;
  for (std::size_t i = 0; i < next.size(); ++i) {
    next[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return next;
}

OdeSolution integrate(const ReducedSystem& system, double theta, double t_max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw ParameterError("step must be positive");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ParameterError("t_max must be positive");
  if (!std::isfinite(theta)) throw ParameterError("theta must be finite");

  const auto n = static_cast<std::size_t>(std::ceil(t_max / step - 1e-9));
  OdeSolution sol;
  sol.kappa = system.kappa();
  sol.tau = system.tau();
  sol.theta = theta;
  sol.step = step;
  sol.t.resize(2 * n + 1);
  sol.state.resize(2 * n + 1);

  const OdeState y0 = initial_state(theta);
  sol.state[n] = y0;
  sol.t[n] = 0.0;
  for (int dir : {1, -1}) {
    OdeState y = y0;
    const double h = dir * step;
    for (std::size_t k = 1; k <= n; ++k) {
      y = rk4_step(system, y, h);
      const std::size_t idx = dir > 0 ? n + k : n - k;
      const double t = h * static_cast<double>(k);
      if (!std::all_of(y.begin(), y.end(), [](double x) { return std::isfinite(x); })) {
        std::ostringstream msg;
        msg << "integration diverged at node " << idx << " (t = " << t << ")";
        throw DivergenceError(msg.str());
      }
      sol.state[idx] = y;
      sol.t[idx] = t;
    }
  }
  sol.p.reserve(sol.state.size());
  sol.q.reserve(sol.state.size());
  for (const auto& y : sol.state) {
    sol.p.push_back(system.first_integral_p(y));
    sol.q.push_back(system.first_integral_q(y));
  }
  return sol;
}

Profile closed_form_circle(double c, Branch branch) { return circle_profile(c, branch); }

Profile closed_form_helix(double c, HelixVariant variant) { return helix_profile(c, variant); }

double theta_for_circle(double c, Branch branch) {
  if (!std::isfinite(c) || std::abs(c) > 1.0) {
    throw ParameterError("circle family parameter must satisfy |c| <= 1");
  }
  const double q = std::sqrt(1.0 - c * c);
  return std::atan2(branch == Branch::plus ? q : -q, c);
}

double theta_for_helix(double c) { return std::atan2(std::sin(c), -std::cos(c)); }

void write_csv(const OdeSolution& solution, std::ostream& out) {
  out << "t,u,v,w,ut,vt,wt,P,Q\n";
  for (std::size_t i = 0; i < solution.t.size(); ++i) {
    const auto& y = solution.state[i];
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n",
                       solution.t[i], y[0], y[1], y[2], y[3], y[4], y[5], solution.p[i],
                       solution.q[i]);
  }
}

}  // namespace minsurf
