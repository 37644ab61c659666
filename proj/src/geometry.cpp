#include "minsurf/geometry.hpp"

#include <cmath>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

FundamentalForms fundamental_forms(const SurfaceJet& jet, double eps_reg) {
  FundamentalForms ff;
  ff.E = jet.x_s.dot(jet.x_s);
  ff.F = jet.x_s.dot(jet.x_t);
  ff.G = jet.x_t.dot(jet.x_t);
  const double det = ff.E * ff.G - ff.F * ff.F;
  if (!(det > eps_reg)) {
    std::ostringstream msg;
    msg << "singular point: EG - F^2 = " << det;
    throw SingularPointError(msg.str());
  }
  const Vec3 cross = jet.x_s.cross(jet.x_t);
  ff.n = cross / cross.norm();
  ff.e = ff.n.dot(jet.x_ss);
  ff.f = ff.n.dot(jet.x_st);
  ff.g = ff.n.dot(jet.x_tt);
  ff.H = (ff.E * ff.g - 2.0 * ff.F * ff.f + ff.G * ff.e) / det;
  return ff;
}

double PhiComponents::norm() const { return std::sqrt(phi1 * phi1 + phi2 * phi2 + phi3 * phi3); }

PhiComponents phi_components(const CoefficientSample& k, const FrenetData& fd) {
  const PencilTerms p = pencil_terms(k, fd);
  const double ut = k.u.dt, vt = k.v.dt, wt = k.w.dt;
  return {wt * p.b - vt * p.c, ut * p.c - wt * p.a, vt * p.a - ut * p.b};
}

PhiComponents phi_components(const SurfaceFamily& family, double s, double t) {
  return phi_components(family.coeffs()(s, t), family.curve().frenet(s));
}

double normal_consistency(const SurfaceJet& jet, const PhiComponents& phis, const FrenetData& frame) {
  const double phi_norm = phis.norm();
  const Vec3 cross = jet.x_s.cross(jet.x_t);
  const double cross_norm = cross.norm();
  if (!(phi_norm > 0.0) || !(cross_norm > 0.0)) {
    throw SingularPointError("normal undefined: zero phi norm or x_s x x_t");
  }
  const Vec3 from_phi = (phis.phi1 * frame.T + phis.phi2 * frame.N + phis.phi3 * frame.B) / phi_norm;
  return (cross / cross_norm - from_phi).norm();
}

}  // namespace minsurf
