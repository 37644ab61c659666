#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minsurf/conditions.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/solver.hpp"
#include "test_support.hpp"

using namespace minsurf;
using minsurf::testing::uniform;

namespace {

const double kR = std::numbers::sqrt2 / 2;
const double kPi = std::numbers::pi;

std::vector<double> s_grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

// Radius-4 cylinder over the circle: isothermal, not minimal.
SurfaceFamily cylinder() {
  return SurfaceFamily(Curve::circle(4.0), CoefficientField::from_profile([](double t) {
                         TripleJet j;
                         j.value = {0, 0, t};
                         j.dt = {0, 0, 1};
                         return j;
                       }),
                       "cylinder", 0.0);
}

}  // namespace

TEST(Conditions, CircleFamilyIsothermal) {
  const SurfaceFamily f = builtin_circle_family(std::sqrt(3.0) / 2);
  for (int i = 0; i < 100; ++i) {
    const IsothermalResiduals r = isothermal_residuals(f, uniform(0, 8 * kPi), uniform(-5, 5));
    EXPECT_LE(r.metric, 1e-10);
    EXPECT_LE(r.orthogonality, 1e-10);
    EXPECT_LE(r.dual_path_gap(), 1e-10);
  }
}

TEST(Conditions, PrintedHelixIsothermalResidualsFrozen) {
  // mpmath oracle at 30 digits: E - G = 0.72139570657432190, F = 0.14690014920547518.
  const IsothermalResiduals r =
      isothermal_residuals(builtin_helix_family(0.0, HelixVariant::printed), 0.0, 1.0);
  EXPECT_GT(r.metric, 1e-3);
  EXPECT_NEAR(r.metric, 0.7213957065743219, 1e-12);
  EXPECT_NEAR(r.orthogonality, 0.1469001492054752, 1e-12);
  EXPECT_LE(r.dual_path_gap(), 1e-10);
}

TEST(Conditions, OrthogonalityAtCurveIsTangentialSpeed) {
  for (double a : {0.0, 0.3, -1.7}) {
    const SurfaceFamily f(Curve::helix(kR, kR), CoefficientField::from_profile([a](double t) {
                            TripleJet j;
                            j.value = {a * t, 0.5 * t, -t};
                            j.dt = {a, 0.5, -1};
                            return j;
                          }),
                          "linear", 0.0);
    for (double s : {0.0, 1.0, 2.5}) {
      EXPECT_NEAR(isothermal_residuals(f, s, 0.0).orthogonality, std::abs(a), 1e-15);
    }
  }
}

TEST(Conditions, HarmonicResidualsVanishOnClosedForms) {
  const SurfaceFamily families[] = {builtin_circle_family(0.0), builtin_circle_family(0.8, Branch::minus),
                                    builtin_circle_family(1.0), builtin_helix_family(0.0),
                                    builtin_helix_family(kPi / 4), builtin_helix_family(2.2)};
  for (const SurfaceFamily& f : families) {
    for (int i = 0; i < 100; ++i) {
      const HarmonicResiduals r = harmonic_residuals(f, uniform(0, 6), uniform(-2, 2));
      EXPECT_LE(r.max(), 1e-10) << f.label();
      EXPECT_LE(r.dual_path_gap(), 1e-10);
      EXPECT_LE(r.laplacian_norm, 1e-10);
    }
  }
}

TEST(Conditions, PrintedHelixHarmonicResidualFrozen) {
  // mpmath oracle: u_tt - (u - w)/2 = 0.27190014920547518, w_tt + (u - w)/2 = 0.02190014920547518.
  const HarmonicResiduals r = harmonic_residuals(builtin_helix_family(0.0, HelixVariant::printed), 0.0, 1.0);
  EXPECT_NEAR(r.tangent, 0.2719001492054752, 1e-12);
  EXPECT_NEAR(r.normal, 0.0, 1e-14);
  EXPECT_NEAR(r.binormal, 0.0219001492054752, 1e-12);
  EXPECT_LE(r.dual_path_gap(), 1e-10);
}

TEST(Conditions, DualPathsAgreeOnArbitraryFields) {
  // A genuinely (s, t)-dependent field exercises every s-partial of the expansion.
  const CoefficientField field(
      [](double s, double t) {
        CoefficientSample k;
        k.u = {std::sin(s) * t * t, std::cos(s) * t * t, 2 * std::sin(s) * t, -std::sin(s) * t * t,
               2 * std::cos(s) * t, 2 * std::sin(s)};
        k.v = {s * t, t, s, 0, 1, 0};
        k.w = {std::exp(0.1 * s) * t, 0.1 * std::exp(0.1 * s) * t, std::exp(0.1 * s),
               0.01 * std::exp(0.1 * s) * t, 0.1 * std::exp(0.1 * s), 0};
        return k;
      },
      0.0, false);
  const SurfaceFamily f(Curve::const_frenet(0.6, -0.4), field, "mixed", 0.0);
  for (int i = 0; i < 200; ++i) {
    const double s = uniform(0, 5), t = uniform(-1.5, 1.5);
    EXPECT_LE(isothermal_residuals(f, s, t).dual_path_gap(), 1e-10);
    EXPECT_LE(harmonic_residuals(f, s, t).dual_path_gap(), 1e-10);
    const SurfaceJet a = f.jet(s, t), b = minsurf::testing::fd_jet(f, s, t);
    EXPECT_LE((a.x_ss - b.x_ss).norm(), 1e-5);
    EXPECT_LE((a.x_st - b.x_st).norm(), 1e-5);
  }
}

TEST(Conditions, InterpolationResidual) {
  const SurfaceFamily families[] = {builtin_circle_family(0.5), builtin_helix_family(1.0),
                                    family_from_ode(Curve::circle(4.0), integrate(reduce(0.25, 0), 0.3, 1, 1e-3))};
  for (const SurfaceFamily& f : families) {
    for (double s : s_grid(0, 2 * kPi, 64)) EXPECT_LE(interpolation_residual(f, s), 1e-12);
  }
  const double eps = 1e-3;
  const SurfaceFamily corrupted(Curve::circle(4.0), CoefficientField([eps](double, double) {
                                  CoefficientSample k;
                                  k.v.value = eps;
                                  return k;
                                }, 0.0, true),
                                "corrupted", 0.0);
  EXPECT_NEAR(interpolation_residual(corrupted, 1.0), eps, 1e-15);
}

TEST(Conditions, GeodesicChecks) {
  const auto grid = s_grid(0, 8 * kPi, 64);
  EXPECT_TRUE(geodesic_check(builtin_circle_family(1.0), grid).is_geodesic);
  EXPECT_TRUE(geodesic_check(builtin_circle_family(-1.0), grid).is_geodesic);
  const GeodesicCheck off = geodesic_check(builtin_circle_family(std::sqrt(3.0) / 2), grid);
  EXPECT_FALSE(off.is_geodesic);
  EXPECT_NEAR(off.max_phi3, 0.5, 1e-15);
  const GeodesicCheck helix = geodesic_check(builtin_helix_family(0.0), s_grid(0, 2 * kPi, 64));
  EXPECT_TRUE(helix.is_geodesic);
  EXPECT_NEAR(helix.min_phi2, 1.0, 1e-15);
}

TEST(Conditions, GeodesicScanSelectsUnitParameters) {
  const auto grid = s_grid(0, 8 * kPi, 32);
  for (int k = 0; k <= 40; ++k) {
    const double c = -1.0 + 2.0 * k / 40.0;
    const bool expected = k == 0 || k == 40;
    EXPECT_EQ(geodesic_check(builtin_circle_family(c), grid).is_geodesic, expected) << "c=" << c;
  }
}

TEST(Conditions, GeodesicCheckNeedsNonzeroPhi2) {
  // Tangent-only motion: phi1 = phi3 = phi2 = 0, so not a geodesic.
  const SurfaceFamily f(Curve::circle(4.0), CoefficientField::from_profile([](double t) {
                          TripleJet j;
                          j.value = {t, 0, 0};
                          j.dt = {1, 0, 0};
                          return j;
                        }),
                        "slide", 0.0);
  const GeodesicCheck g = geodesic_check(f, s_grid(0, 1, 8));
  EXPECT_FALSE(g.is_geodesic);
  EXPECT_EQ(g.min_phi2, 0.0);
}

TEST(Conditions, AsymptoticChecks) {
  const auto grid = s_grid(0, 2 * kPi, 64);
  const AsymptoticCheck quarter = asymptotic_check(builtin_helix_family(kPi / 2), grid, 1e-4);
  EXPECT_TRUE(quarter.is_asymptotic);
  EXPECT_LE(quarter.max_residual, 1e-8);
  const AsymptoticCheck zero = asymptotic_check(builtin_helix_family(0.0), grid, 1e-4);
  EXPECT_FALSE(zero.is_asymptotic);
  EXPECT_NEAR(zero.max_residual, kR, 1e-8);
  const AsymptoticCheck circle = asymptotic_check(builtin_circle_family(1.0), s_grid(0, 8 * kPi, 64), 1e-4);
  EXPECT_FALSE(circle.is_asymptotic);
  EXPECT_NEAR(circle.max_residual, 0.25, 1e-8);
}

TEST(Conditions, AsymptoticScanSelectsQuarterTurns) {
  const auto grid = s_grid(0, 2 * kPi, 16);
  for (int k = 0; k <= 16; ++k) {
    const bool expected = k == 4 || k == 12;
    EXPECT_EQ(asymptotic_check(builtin_helix_family(k * kPi / 8), grid, 1e-4).is_asymptotic, expected)
        << "k=" << k;
  }
}

TEST(Conditions, VerifyCircleOnFigureGrid) {
  const ResidualReport r = verify_minimal(builtin_circle_family(1.0), circle_figure_grid(),
                                          Tolerances::for_tier(Tier::analytic));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.singular_nodes, 0u);
  EXPECT_EQ(r.entries.size(), 9u);
  for (const auto& e : r.entries) {
    EXPECT_GE(e.max_abs, e.rms) << e.name;
    EXPECT_GE(e.rms, 0.0);
  }
}

TEST(Conditions, VerifyPrintedHelixFailsOnHarmonic) {
  const ResidualReport r = verify_minimal(builtin_helix_family(0.0, HelixVariant::printed),
                                          helix_figure_grid(), Tolerances::for_tier(Tier::analytic));
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.find("harmonic_tangent")->pass);
  EXPECT_GT(r.max_harmonic(), 1e-2);
  // argmax points back at a node where the residual is reproducible.
  const ResidualEntry* e = r.find("harmonic_tangent");
  EXPECT_NEAR(harmonic_residuals(builtin_helix_family(0.0, HelixVariant::printed), e->argmax_s,
                                 e->argmax_t).tangent,
              e->max_abs, 0.0);
}

TEST(Conditions, VerifyCorrectedHelixPasses) {
  const ResidualReport r = verify_minimal(builtin_helix_family(kPi / 4), helix_figure_grid(),
                                          Tolerances::for_tier(Tier::analytic));
  EXPECT_TRUE(r.pass);
}

TEST(Conditions, OverallVerdictIsConjunction) {
  const SurfaceFamily families[] = {builtin_circle_family(0.2), builtin_helix_family(1.0, HelixVariant::printed),
                                    cylinder()};
  for (const SurfaceFamily& f : families) {
    const ResidualReport r = verify_minimal(f, {0, 6, -2, 2, 9, 7}, Tolerances::for_tier(Tier::analytic));
    bool all = r.singular_nodes == 0;
    for (const auto& e : r.entries) all = all && e.pass;
    EXPECT_EQ(r.pass, all);
  }
}

TEST(Conditions, MinimalityEquivalentToHarmonicAtIsothermalPoints) {
  const SurfaceFamily families[] = {builtin_circle_family(0.4), builtin_helix_family(0.8), cylinder()};
  for (const SurfaceFamily& f : families) {
    for (int i = 0; i < 100; ++i) {
      const double s = uniform(0, 6), t = uniform(-2, 2);
      const IsothermalResiduals iso = isothermal_residuals(f, s, t);
      if (iso.metric > 1e-10 || iso.orthogonality > 1e-10) continue;
      const SurfaceJet j = f.jet(s, t);
      const FundamentalForms ff = fundamental_forms(j);
      EXPECT_EQ(std::abs(ff.H) <= 1e-8, (j.x_ss + j.x_tt).norm() <= 1e-7 * (1 + ff.E)) << f.label();
    }
  }
  const ResidualReport r = verify_minimal(cylinder(), {0, 6, -2, 2, 9, 9}, Tolerances::for_tier(Tier::analytic));
  EXPECT_TRUE(r.find("isothermal_metric")->pass);
  EXPECT_FALSE(r.find("harmonic_normal")->pass);
  EXPECT_FALSE(r.find("mean_curvature")->pass);
}

TEST(Conditions, SingularNodesFailWithoutAborting) {
  const SurfaceFamily still(Curve::circle(4.0), CoefficientField([](double, double) {
                              return CoefficientSample{};
                            }, 0.0, true),
                            "still", 0.0);
  const ResidualReport r = verify_minimal(still, {0, 1, -1, 1, 3, 4}, Tolerances{});
  EXPECT_EQ(r.singular_nodes, 12u);
  EXPECT_FALSE(r.first_singular.empty());
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.find("interpolation")->pass);
}

TEST(Conditions, FiniteDifferenceFieldPassesItsTier) {
  const Profile p = circle_profile(1.0, Branch::plus);
  const SurfaceFamily f(Curve::circle(4.0), CoefficientField::from_values([p](double, double t) {
                          return p(t).value;
                        }),
                        "fd circle", 1.0);
  const GridSpec g{0, 8 * kPi, -5, 5, 33, 17};
  EXPECT_TRUE(verify_minimal(f, g, Tolerances::for_tier(Tier::finite_difference)).pass);
  EXPECT_FALSE(verify_minimal(f, g, Tolerances::for_tier(Tier::analytic)).pass);
}

TEST(Conditions, H2ReadingsDiffer) {
  const H2Comparison h2 = compare_h2_readings(builtin_helix_family(kPi / 4), helix_figure_grid());
  EXPECT_LE(h2.derived_reading_max, 1e-10);
  EXPECT_GT(h2.printed_reading_max, 1e-2);
  EXPECT_THROW(compare_h2_readings(builtin_circle_family(1.0), helix_figure_grid()), ConsistencyError);
}

TEST(Conditions, GridValidation) {
  EXPECT_THROW(GridSpec({1, 0, 0, 1, 2, 2}).validate(), ParameterError);
  EXPECT_THROW(GridSpec({0, 1, 0, 1, 1, 2}).validate(), ParameterError);
  EXPECT_THROW(verify_minimal(builtin_circle_family(1), {0, 1, 2, 2, 2, 2}, Tolerances{}), ParameterError);
  const GridSpec g = circle_figure_grid();
  EXPECT_EQ(g.s_at(0), 0.0);
  EXPECT_EQ(g.s_at(g.n_s - 1), 8 * kPi);
  EXPECT_EQ(g.t_at(32), 0.0);
}
