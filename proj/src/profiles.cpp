#include "minsurf/profiles.hpp"

#include <cmath>
#include <numbers>

#include "minsurf/errors.hpp"

namespace minsurf {

Profile circle_profile(double c, Branch branch) {
  if (!std::isfinite(c) || std::abs(c) > 1.0) {
    throw ParameterError("circle family parameter must satisfy |c| <= 1");
  }
  const double q = std::sqrt(1.0 - c * c) * (branch == Branch::plus ? 1.0 : -1.0);
  const double grow = 2.0 * (-1.0 + q);
  const double decay = 2.0 * (-1.0 - q);
  return [=](double t) {
    const double ep = std::exp(t / 4.0);
    const double em = std::exp(-t / 4.0);
    TripleJet j;
    j.value = {0.0, grow * ep + decay * em + 4.0, c * t};
    j.dt = {0.0, (grow * ep - decay * em) / 4.0, c};
    j.dtt = {0.0, (grow * ep + decay * em) / 16.0, 0.0};
    return j;
  };
}

Profile helix_profile(double c, HelixVariant variant) {
  if (!std::isfinite(c)) throw ParameterError("helix family parameter must be finite");
  const double cc = std::cos(c);
  const double sc = std::sin(c);
  const double w_amp = variant == HelixVariant::printed ? -0.25 : -0.5;
  constexpr double r = std::numbers::sqrt2 / 2.0;
  return [=](double t) {
    const double sh = std::sinh(t);
    const double ch = std::cosh(t);
    TripleJet j;
    j.value = {0.5 * cc * (sh - t), sc * sh - r * (ch - 1.0), w_amp * cc * (t + sh)};
    j.dt = {0.5 * cc * (ch - 1.0), sc * ch - r * sh, w_amp * cc * (1.0 + ch)};
    j.dtt = {0.5 * cc * sh, sc * sh - r * ch, w_amp * cc * sh};
    return j;
  };
}

const char* to_string(Branch branch) { return branch == Branch::plus ? "+" : "-"; }

const char* to_string(HelixVariant variant) {
  return variant == HelixVariant::printed ? "printed" : "corrected";
}

}  // namespace minsurf
