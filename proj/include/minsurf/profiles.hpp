#pragma once

#include <array>
#include <functional>

namespace minsurf {

/// (u, v, w) triple.
using Triple = std::array<double, 3>;

/// Values and t-derivatives of a t-only coefficient triple at one t.
struct TripleJet {
  Triple value{};
  Triple dt{};
  Triple dtt{};
};

using Profile = std::function<TripleJet(double t)>;

/// Sign choice for the square root in the circle family.
enum class Branch { plus, minus };

/// Which helix coefficients to use: the amplitudes exactly as published, or
/// the w amplitude -1/2 that makes u + w linear in t.
enum class HelixVariant { printed, corrected };

/// Circle (kappa = 1/4, tau = 0) family:
///   u = 0,
///   v = 2(-1 +- q) e^{t/4} + 2(-1 -+ q) e^{-t/4} + 4,  q = sqrt(1 - c^2),
///   w = c t.
/// Throws ParameterError for |c| > 1.
Profile circle_profile(double c, Branch branch);

/// Helix (kappa = tau = sqrt(2)/2) family:
///   u = 1/2 cos c (sinh t - t),
///   v = sin c sinh t - sqrt(2)/2 (cosh t - 1),
///   w = k cos c (t + sinh t),  k = -1/4 (printed) or -1/2 (corrected).
Profile helix_profile(double c, HelixVariant variant);

const char* to_string(Branch branch);
const char* to_string(HelixVariant variant);

}  // namespace minsurf
