#include <gtest/gtest.h>

#include <cmath>

#include "tga/conformal.hpp"
#include "test_util.hpp"

namespace tga::conformal {
namespace {

using test::random_sta_vector;
using test::uniform;

constexpr double kTol = 1e-10;

Multivector F(const Multivector& x, double lambda = 1.0) { return embed_euclidean(x, lambda).X; }

TEST(Conformal, NullBasis) {
  EXPECT_NEAR(scalar_product(n(), n()), 0.0, 0.0);
  EXPECT_NEAR(scalar_product(nbar(), nbar()), 0.0, 0.0);
  EXPECT_NEAR(scalar_product(n(), nbar()), 2.0, 0.0);
  EXPECT_MV_NEAR(bivector_n() * bivector_n(), Multivector::scalar(signature(), 1.0), 0.0);
  EXPECT_MV_NEAR(pseudoscalar() * pseudoscalar(), Multivector::scalar(signature(), -1.0), 0.0);
  EXPECT_MV_NEAR(gamma(2), lift(sta::gamma(2)), 0.0);
}

TEST(Conformal, LiftLowerRoundTrip) {
  const Multivector m = test::random_mv(sta::signature());
  EXPECT_MV_NEAR(lower(lift(m)), m, 0.0);
  EXPECT_THROW(lower(e()), std::invalid_argument);
}

TEST(Conformal, EmbeddingIsNullAndNormalised) {
  for (double lambda : {1.0, 2.5}) {
    for (int i = 0; i < 20; ++i) {
      const Multivector x = random_sta_vector();
      const Multivector X = F(x, lambda);
      EXPECT_NEAR(scalar_product(X, X), 0.0, kTol);
      EXPECT_MV_NEAR(extract_euclidean({X, lambda}), x, kTol);
      EXPECT_MV_NEAR(extract_euclidean({-3.0 * X, lambda}), x, kTol);
    }
  }
  EXPECT_MV_NEAR(F(sta::vector(0, 0, 0, 0)), -0.5 * nbar(), 0.0);
  EXPECT_THROW(embed_euclidean(sta::vector(0, 1, 0, 0), 0.0), std::invalid_argument);
  EXPECT_THROW(extract_euclidean({n(), 1.0}), std::domain_error);
}

TEST(Conformal, HyperbolicEmbedding) {
  const Multivector u = sta::vector(0, 0.3, -0.2, 0.4);
  const ConformalPoint P = embed_hyperbolic(u);
  EXPECT_NEAR(scalar_product(P.X, P.X), 0.0, kTol);
  EXPECT_MV_NEAR(extract_hyperbolic(P), u, kTol);
  EXPECT_THROW(embed_hyperbolic(sta::vector(1, 0, 0, 0)), std::domain_error);
  EXPECT_THROW(hyperbolic_translation_rotor(sta::vector(1.2, 0, 0, 0)), std::domain_error);
}

TEST(Conformal, HomogeneousEquality) {
  const Multivector X = F(random_sta_vector());
  EXPECT_TRUE(homogeneous_equal(X, -4.0 * X, kTol));
  EXPECT_FALSE(homogeneous_equal(X, F(random_sta_vector()), kTol));
}

TEST(Conformal, TranslationCovariance) {
  for (int i = 0; i < 20; ++i) {
    const Multivector x = random_sta_vector();
    const Multivector a = random_sta_vector();
    const Rotor t = translation_rotor(a);
    EXPECT_MV_NEAR(t.apply(F(x)), F(x + a), kTol);
    EXPECT_MV_NEAR(t.apply(n()), n(), 0.0);
    EXPECT_MV_NEAR(translation_rotor(a, 2.0).apply(F(x, 2.0)), F(x + a, 2.0), kTol);
  }
}

TEST(Conformal, DilationCovariance) {
  const double alpha = 0.6;
  const Rotor d = dilation_rotor(alpha);
  for (int i = 0; i < 20; ++i) {
    const Multivector x = random_sta_vector();
    EXPECT_MV_NEAR(std::exp(-alpha) * d.apply(F(x)), F(std::exp(-alpha) * x), kTol);
  }
  // Dilation about a fixes a.
  const Multivector a = random_sta_vector();
  EXPECT_TRUE(homogeneous_equal(dilation_about(a, alpha).apply(F(a)), F(a), kTol));
}

TEST(Conformal, RotationAboutFixesCentre) {
  const Rotor r = rotor_exp(sta::gamma(1) * sta::gamma(2), 0.8);
  const Multivector a = random_sta_vector();
  const Multivector x = random_sta_vector();
  const Rotor ra = rotation_about(a, r);
  EXPECT_MV_NEAR(ra.apply(F(a)), F(a), kTol);
  EXPECT_MV_NEAR(ra.apply(F(x)), F(a + r.apply(x - a)), kTol);
}

TEST(Conformal, SpecialConformalCovariance) {
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const Multivector x = random_sta_vector();
    const Multivector a = 0.5 * random_sta_vector();
    const double factor = special_conformal_factor(x, a);
    if (std::abs(factor) < 0.05) continue;
    ++checked;
    EXPECT_MV_NEAR(special_conformal_rotor(a).apply(F(x)),
                   factor * F(special_conformal_map(x, a)), 1e-9);
  }
  EXPECT_GT(checked, 30);
  // K_a = e T_a e.
  const Multivector a = random_sta_vector();
  EXPECT_MV_NEAR(e() * translation_rotor(a).value() * e(), special_conformal_rotor(a).value(), kTol);
}

TEST(Conformal, SpecialConformalSingularity) {
  // a = -x / x^2 sends x to infinity.
  const Multivector x = sta::vector(0, 1, 0, 0);
  const Multivector a = sta::vector(0, 1, 0, 0);
  EXPECT_NEAR(special_conformal_factor(x, a), 0.0, 1e-15);
  EXPECT_THROW(special_conformal_map(x, a), std::domain_error);
}

TEST(Conformal, Inversion) {
  const Multivector x = sta::vector(0.2, 1.0, -0.5, 0.3);
  const double x2 = scalar_product(x, x);
  EXPECT_MV_NEAR(invert_point({F(x), 1.0}).X, x2 * F(x / x2), kTol);
}

TEST(Conformal, LineThroughPoints) {
  const Multivector r = random_sta_vector();
  const Multivector k = random_sta_vector();
  const ConformalLine line = line_through(r, k);
  EXPECT_TRUE(line.L.is_homogeneous(3, kTol));
  EXPECT_MV_NEAR(line_direction(line), k, kTol);
  EXPECT_MV_NEAR(line_moment(line), outer_product(r, k), kTol);
  for (double h : {-2.0, 0.0, 0.7, 3.0}) EXPECT_TRUE(line_passes_through(line, r + h * k, 1e-9));
  EXPECT_FALSE(line_passes_through(line, r + sta::vector(0, 0.1, 0.2, 0.3), 1e-9));
  EXPECT_THROW(line_through(r, sta::vector(0, 0, 0, 0)), std::invalid_argument);
}

TEST(Conformal, LineTranslatesWithRotor) {
  const Multivector r = random_sta_vector();
  const Multivector k = random_sta_vector();
  const Multivector a = random_sta_vector();
  EXPECT_MV_NEAR(translation_rotor(a).apply(line_through(r, k).L), line_through(r + a, k).L, kTol);
}

TEST(Conformal, ProjectionOfSpatialLineDoubles) {
  const Multivector r = sta::vector(0.0, 0.4, -1.0, 2.0);
  const Multivector k = sta::vector(0.0, 1.0, 0.5, -0.3);
  const ConformalLine line = line_through(r, k);
  EXPECT_MV_NEAR(project_line(line, 0.0).L, 2.0 * line.L, kTol);
  // A line in t = tau doubles under the projection at tau.
  const ConformalLine later = line_through(r + sta::vector(1.5, 0, 0, 0), k);
  EXPECT_MV_NEAR(project_line(later, 1.5).L, 2.0 * later.L, kTol);
}

TEST(Conformal, ProjectionOfNullLineIsSpatial) {
  const Multivector r = sta::vector(0.0, 0.0, 1.0, 0.0);
  const Multivector k = sta::vector(1.0, 1.0, 0.0, 0.0);
  const ConformalLine projected = project_line(line_through(r, k), 0.0);
  const auto dir = sta::vector_components(line_direction(projected));
  EXPECT_NEAR(dir[0], 0.0, kTol);
  EXPECT_GT(std::abs(dir[1]), 0.1);
  EXPECT_TRUE(line_passes_through(projected, r, 1e-9));
}

TEST(Conformal, ProjectionOfTimeAxisVanishes) {
  const ConformalLine axis = line_through(sta::vector(0, 0, 0, 0), sta::vector(1, 0, 0, 0));
  EXPECT_THROW(project_line(axis, 0.0), std::domain_error);
}

}  // namespace
}  // namespace tga::conformal
