#include <gtest/gtest.h>

#include <Eigen/Geometry>
#include <cmath>
#include <numbers>

#include "tga/congruence.hpp"
#include "tga/conformal.hpp"
#include "test_util.hpp"

namespace tga::congruence {
namespace {

namespace cga = tga::conformal;
using test::random_pauli;
using test::random_sta_vector;

constexpr double kTol = 1e-10;

Twistor random_null_twistor() {
  for (;;) {
    const Twistor t = null_twistor(random_pauli(), random_pauli());
    if (std::abs(ray_beta(t).real()) > 1e-2) return t;
  }
}

// -- null rays ------------------------------------------------------------------

TEST(NullRay, NullTwistorHasZeroHelicity) {
  for (int i = 0; i < 10; ++i) {
    const Twistor t = random_null_twistor();
    EXPECT_NEAR(twistor::helicity(t), 0.0, kTol);
    EXPECT_NEAR(ray_beta(t).imag(), 0.0, kTol);
  }
  EXPECT_THROW(null_twistor(PauliSpinor::from_coefficients(1, 0, 0, 0),
                            PauliSpinor::from_coefficients(1, 0, 0, 0)),
               std::domain_error);
}

TEST(NullRay, PrimaryPartVanishesAlongRay) {
  for (int i = 0; i < 10; ++i) {
    const Twistor t = random_null_twistor();
    const NullRay ray = null_ray(t);
    EXPECT_NEAR(scalar_product(ray.q, ray.q), 0.0, kTol);
    EXPECT_NEAR(scalar_product(ray.p, ray.p), 0.0, kTol);
    EXPECT_MV_NEAR(ray.p, twistor::momentum(t), kTol);
    for (double h : {-1.0, 0.0, 0.5, 2.0}) {
      EXPECT_LE(twistor::primary_part(Twistor(t.psi(), ray.point(h))).value().max_abs(), 1e-9);
    }
    // Off the ray it does not.
    EXPECT_GT(twistor::primary_part(Twistor(t.psi(), ray.q + sta::vector(0, 0.3, 0, 0)))
                  .value()
                  .max_abs(),
              1e-6);
  }
}

TEST(NullRay, RescalingKeepsRay) {
  const Twistor t = random_null_twistor();
  const NullRay a = null_ray(t);
  const NullRay b = null_ray(Twistor(3.0 * t.psi(), t.position()));
  EXPECT_MV_NEAR(a.q, b.q, 1e-9);
  EXPECT_MV_NEAR(9.0 * a.p, b.p, 1e-9);
}

TEST(NullRay, BasePointChangesBetaOnly) {
  const Twistor t = random_null_twistor();
  const NullRay ray = null_ray(t);
  const NullRay moved = null_ray_from(t, ray.q + sta::vector(0.1, 0.5, -0.4, 0.2));
  EXPECT_LE(twistor::primary_part(Twistor(t.psi(), moved.q)).value().max_abs(), 1e-9);
  EXPECT_GT(std::abs(moved.beta - ray.beta), 1e-6);
}

TEST(NullRay, RejectsNonNull) {
  const Twistor t = example_twistor(0.5, sta::vector(0, 0, 0, 0));
  EXPECT_THROW(null_ray(t), std::invalid_argument);
}

// -- tangent field ----------------------------------------------------------------

TEST(Tangent, UnitAndSpatial) {
  const TangentSample sample = tangent_sample(0.5, 0.0, Vec3(0.3, -0.2, 0.4));
  EXPECT_NEAR(sample.unit.norm(), 1.0, 1e-14);
  EXPECT_NEAR(sta::vector_components(sample.direction)[0], 0.0, kTol);
  EXPECT_NEAR(scalar_product(sample.flagpole, sample.flagpole), 0.0, kTol);
  EXPECT_TRUE(cga::line_passes_through(sample.projected, sta::vector(0, 0.3, -0.2, 0.4), 1e-9));
}

TEST(Tangent, MatchesSpatialFlagpoleDirection) {
  // At tau = 0 the projected line keeps the spatial part of K.
  const Vec3 x(0.7, 0.1, -0.5);
  const TangentSample sample = tangent_sample(0.5, 0.0, x);
  const auto k = sta::vector_components(sample.flagpole);
  const Vec3 spatial = Vec3(k[1], k[2], k[3]).normalized();
  EXPECT_NEAR(std::abs(spatial.dot(sample.unit)), 1.0, 1e-9);
}

TEST(Tangent, TwistFollowsHelicity) {
  const Vec3 x(3.0, 1.0, 2.0);
  EXPECT_LT(field_twist(10.0, 0.0, x), 0.0);
  EXPECT_GT(field_twist(-10.0, 0.0, x), 0.0);
  EXPECT_NEAR(field_twist(10.0, 0.0, x), -field_twist(-10.0, 0.0, x), 1e-6);
}

// -- circles ----------------------------------------------------------------------

TEST(Circle, FrozenHalfHelicityCircle) {
  const CongruenceCircle c = congruence_circle(Vec3(1, 0, 0), 0.5, 0.0);
  EXPECT_NEAR(c.radius, 0.625, 1e-8);
  EXPECT_NEAR(c.center.x(), 0.375, 1e-8);
  EXPECT_NEAR(c.center.y(), 0.0, 1e-8);
  EXPECT_NEAR(c.center.z(), 0.0, 1e-8);
  EXPECT_LE(c.diagnostics.max_radial_error, 1e-6);
  EXPECT_LE(c.diagnostics.accel_variation, 1e-6);
  EXPECT_GT(c.diagnostics.steps, 0);
}

TEST(Circle, GeometryIsConsistent) {
  const CongruenceCircle c = congruence_circle(Vec3(0.4, 0.8, 0.3), 0.5, 0.0);
  EXPECT_MV_NEAR(c.plane * c.plane, sta::scalar(-1.0), 1e-12);
  EXPECT_NEAR(c.normal().norm(), 1.0, 1e-12);
  EXPECT_NEAR((c.point(0.0) - c.seed).norm(), 0.0, 1e-8);
  EXPECT_NEAR((c.point(2 * std::numbers::pi) - c.seed).norm(), 0.0, 1e-8);
  for (double th : {0.5, 1.7, 4.0}) {
    const Vec3 p = c.point(th);
    EXPECT_NEAR((p - c.center).norm(), c.radius, 1e-9);
    EXPECT_NEAR((p - c.center).dot(c.normal()), 0.0, 1e-9);
  }
  EXPECT_NEAR(c.tangent.dot(c.inward), 0.0, 1e-6);
  EXPECT_NEAR((c.center - c.seed).normalized().dot(c.inward), 1.0, 1e-6);
}

TEST(Circle, ChiralityFlipsWithHelicity) {
  const Vec3 x(1.0, 0.5, 0.2);
  const CongruenceCircle plus = congruence_circle(x, 2.0, 0.0);
  const CongruenceCircle minus = congruence_circle(x, -2.0, 0.0);
  EXPECT_LT(plus.tangent.cross(plus.inward).z() * minus.tangent.cross(minus.inward).z(), 0.0);
}

TEST(Circle, RejectsZeroHelicity) {
  EXPECT_THROW(congruence_circle(Vec3(1, 0, 0), 0.0, 0.0), std::invalid_argument);
}

TEST(Scene, ConfigValidation) {
  SceneConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.helicity = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.samples_per_circle = 2;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.family_count = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.grid_extent = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.family_count = 0;
  cfg.grid_x = 0;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(Scene, SeedsAndGrid) {
  SceneConfig cfg;
  cfg.family_count = 4;
  cfg.torus_x = 2.0;
  cfg.torus_z = 0.5;
  const auto seeds = torus_seeds(cfg);
  ASSERT_EQ(seeds.size(), 4u);
  EXPECT_NEAR((seeds[0] - Vec3(2.0, 0.0, 0.5)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((seeds[1] - Vec3(0.0, 1.0, 0.5)).norm(), 0.0, 1e-15);

  cfg.grid_x = 3;
  cfg.grid_y = 2;
  cfg.grid_z = 1;
  const auto grid = grid_points(cfg);
  ASSERT_EQ(grid.size(), 6u);
  EXPECT_NEAR(grid.front().x(), -1.0, 0.0);
  EXPECT_NEAR(grid.back().x(), 1.0, 0.0);
}

TEST(Scene, FamilyIsOrderedAndDisjoint) {
  SceneConfig cfg;
  cfg.family_count = 6;
  const auto family = torus_family(cfg);
  const auto seeds = torus_seeds(cfg);
  ASSERT_EQ(family.size(), seeds.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    EXPECT_NEAR((family[j].seed - seeds[j]).norm(), 0.0, 0.0);
    EXPECT_NEAR(family[j].radius, 0.625, 1e-8);
    for (std::size_t k = j + 1; k < family.size(); ++k) {
      EXPECT_GT(min_sampled_distance(family[j], family[k], 256), 1e-3);
    }
  }
  // Concurrent evaluation gives the serial result.
  EXPECT_NEAR((family[2].center - congruence_circle(seeds[2], 0.5, 0.0).center).norm(), 0.0, 0.0);
}

// -- d-lines ----------------------------------------------------------------------

TEST(DLines, CircleThroughOriginBecomesLine) {
  const CongruenceCircle c = congruence_circle(Vec3(1, 0, 0), 0.5, 0.0);
  const DLine line = to_dlines(c, 0.5, 64);
  // The antipode of the seed lies on the boundary sphere and is dropped.
  EXPECT_LE(line.at_infinity, 1);
  EXPECT_EQ(line.points.size(), line.indices.size());
  EXPECT_EQ(static_cast<int>(line.points.size()) + line.at_infinity, 64);
  EXPECT_GT(line.extent, 0.0);
  EXPECT_LE(line.max_deviation / line.extent, 1e-9);
  EXPECT_LE(line.max_angle, 1e-6);
  EXPECT_NEAR(line.direction.norm(), 1.0, 1e-12);
  EXPECT_THROW(to_dlines(c, 0.5, 2), std::invalid_argument);
  EXPECT_THROW(translate_to_origin({Vec3(0, 0, 0)}, Vec3(0, 0, 0), 0.0), std::invalid_argument);
}

// -- observables ------------------------------------------------------------------

TEST(Observable, ExpansionAndNullLine) {
  const FourSpinor psi = test::random_spinor();
  EXPECT_MV_NEAR(ray_observable(psi), ray_observable_expansion(psi), kTol);
  const Twistor t = random_null_twistor();
  const NullRay ray = null_ray(t);
  EXPECT_MV_NEAR(ray_line(ray).L, 2.0 * ray_observable(t.psi()), kTol);
}

TEST(Observable, TranslationAndInversion) {
  const Twistor t = random_null_twistor();
  const NullRay ray = null_ray(t);
  const Multivector a = random_sta_vector();
  const Multivector moved = 2.0 * transform_observable(t.psi(), Translate{a});
  EXPECT_MV_NEAR(moved, cga::line_through(ray.q + a, ray.p).L, 1e-9);
  EXPECT_MV_NEAR(moved, 2.0 * translate_observable(ray_observable(t.psi()), a), 1e-9);

  const Multivector inv = 2.0 * transform_observable(t.psi(), Invert{});
  EXPECT_MV_NEAR(inv, cga::line_through(inverted_ray_point(ray), ray.flagpole).L, 1e-9);
  EXPECT_MV_NEAR(inv, 2.0 * inverted_observable(t.psi()), 1e-9);
}

}  // namespace
}  // namespace tga::congruence
