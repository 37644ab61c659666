#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "minsurf/profiles.hpp"

namespace minsurf {

/// (u, v, w, u_t, v_t, w_t)
using OdeState = std::array<double, 6>;

/// Minimality conditions for t-only coefficients along a curve with constant
/// curvature kappa and torsion tau. The harmonic conditions become the linear
/// system
///   u_tt = kappa (kappa u - tau w)
///   v_tt = (kappa^2 + tau^2) v - kappa
///   w_tt = -tau (kappa u - tau w)
/// and the isothermal conditions become the algebraic constraints P = 0 and
/// Q = 0, both of which are first integrals of the system above.
class ReducedSystem {
 public:
  ReducedSystem(double kappa, double tau);

  double kappa() const { return kappa_; }
  double tau() const { return tau_; }

  /// (u_tt, v_tt, w_tt) at the given (u, v, w).
  Triple accelerations(const Triple& uvw) const;
  OdeState rhs(const OdeState& y) const;

  /// |x_s|^2 - |x_t|^2
  double first_integral_p(const OdeState& y) const;
  /// <x_s, x_t>
  double first_integral_q(const OdeState& y) const;

 private:
  double kappa_;
  double tau_;
};

/// Throws ParameterError for kappa <= 0.
ReducedSystem reduce(double kappa, double tau);

/// Symmetric fixed-step sample of one trajectory. Nodes are t_k = k * step for
/// k = -n..n, stored in increasing t; node n sits at t = 0.
struct OdeSolution {
  double kappa = 0.0;
  double tau = 0.0;
  double theta = 0.0;
  double step = 0.0;
  std::vector<double> t;
  std::vector<OdeState> state;
  std::vector<double> p;
  std::vector<double> q;

  std::size_t origin_index() const { return t.size() / 2; }
  double max_abs_first_integral() const;
};

/// Initial data (0, 0, 0, 0, sin theta, cos theta) at t = 0.
OdeState initial_state(double theta);

/// One classical fourth-order Runge-Kutta step.
OdeState rk4_step(const ReducedSystem& system, const OdeState& y, double h);

/// Integrates from t = 0 forward to t_max and backward to -t_max.
/// Throws DivergenceError naming the first non-finite node.
OdeSolution integrate(const ReducedSystem& system, double theta, double t_max, double step = 1e-3);

/// Closed-form coefficient triples for oracle comparisons.
Profile closed_form_circle(double c, Branch branch);
Profile closed_form_helix(double c, HelixVariant variant = HelixVariant::corrected);

/// Family angle for the circle parameter: cos theta = c, sign(sin theta) = branch.
double theta_for_circle(double c, Branch branch);
/// Family angle for the helix parameter: sin theta = sin c, cos theta = -cos c.
double theta_for_helix(double c);

/// CSV with header t,u,v,w,ut,vt,wt,P,Q and 17 significant digits.
void write_csv(const OdeSolution& solution, std::ostream& out);

}  // namespace minsurf
