#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tga/multivector.hpp"
#include "tga/verify/oracle.hpp"
#include "test_util.hpp"

namespace tga {
namespace {

using test::random_mv;

const Signature kSta = Signature::spacetime();
const Signature kCga = Signature::conformal();

Multivector e(const Signature& sig, int i) { return Multivector::basis_vector(sig, i); }

TEST(Signature, CanonicalPutsPositiveFirst) {
  const Signature s = Signature::canonical(2, 3);
  EXPECT_EQ(s.dim(), 5);
  EXPECT_EQ(s.square(0), 1);
  EXPECT_EQ(s.square(1), 1);
  EXPECT_EQ(s.square(2), -1);
  EXPECT_EQ(s.square(4), -1);
  EXPECT_EQ(s.blade_count(), 32u);
}

TEST(Signature, NamedOrderings) {
  EXPECT_EQ(kSta.negative_mask(), 0b1110u);
  EXPECT_EQ(kCga.negative_mask(), 0b101110u);
  EXPECT_EQ(kCga.p(), 2);
  EXPECT_EQ(kCga.q(), 4);
  EXPECT_EQ(Signature::from_squares({1, -1, -1, -1}), kSta);
  EXPECT_FALSE(kSta == Signature::canonical(3, 1));
}

TEST(Signature, RejectsBadDimensions) {
  EXPECT_THROW(Signature::canonical(4, 3), std::invalid_argument);
  EXPECT_THROW(Signature::canonical(0, 0), std::invalid_argument);
  EXPECT_THROW(Signature::from_squares({1, 0}), std::invalid_argument);
}

TEST(Multivector, BasisSquaresFollowMetric) {
  for (int i = 0; i < 6; ++i) {
    const Multivector v = e(kCga, i);
    EXPECT_EQ((v * v).scalar_part(), kCga.square(i));
  }
}

TEST(Multivector, VectorsAnticommute) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      EXPECT_MV_NEAR(e(kSta, i) * e(kSta, j), -(e(kSta, j) * e(kSta, i)), 0.0);
    }
  }
}

TEST(Multivector, KnownBladeProducts) {
  const Signature euclid = Signature::canonical(3, 0);
  const Multivector e12 = e(euclid, 0) * e(euclid, 1);
  EXPECT_MV_NEAR(e12 * e12, Multivector::scalar(euclid, -1.0), 0.0);
  EXPECT_MV_NEAR(e12, Multivector::blade(euclid, 0b011), 0.0);
  EXPECT_MV_NEAR(e(euclid, 1) * e(euclid, 0), Multivector::blade(euclid, 0b011, -1.0), 0.0);
  // g0 g1 g0 = -g1 in the spacetime metric.
  EXPECT_MV_NEAR(e(kSta, 0) * e(kSta, 1) * e(kSta, 0), -e(kSta, 1), 0.0);
  // Pseudoscalars of both algebras square to -1.
  const Multivector i4 = Multivector::blade(kSta, 0b1111);
  const Multivector i6 = Multivector::blade(kCga, 0b111111);
  EXPECT_DOUBLE_EQ((i4 * i4).scalar_part(), -1.0);
  EXPECT_DOUBLE_EQ((i6 * i6).scalar_part(), -1.0);
}

TEST(Multivector, ProductSignMatchesDefinition) {
  EXPECT_EQ(blade_product_sign(kSta, 0b0010, 0b0010), -1);
  EXPECT_EQ(blade_product_sign(kSta, 0b0001, 0b0001), 1);
  EXPECT_EQ(blade_product_sign(kSta, 0b0010, 0b0001), -1);
  EXPECT_EQ(blade_product_sign(kSta, 0b0011, 0b0011), 1);  // (g0 g1)^2 = +1
}

TEST(Multivector, AssociativeAndDistributive) {
  for (const Signature& sig : {kSta, kCga, Signature::canonical(3, 0)}) {
    for (int i = 0; i < 50; ++i) {
      const Multivector a = random_mv(sig);
      const Multivector b = random_mv(sig);
      const Multivector c = random_mv(sig);
      EXPECT_MV_NEAR((a * b) * c, a * (b * c), 1e-12);
      EXPECT_MV_NEAR(a * (b + c), a * b + a * c, 1e-12);
    }
  }
}

TEST(Multivector, MatchesMatrixOracle) {
  for (const Signature& sig :
       {kSta, kCga, Signature::canonical(2, 1), Signature::canonical(0, 5)}) {
    const verify::MatrixOracle oracle(sig);
    for (int i = 0; i < 40; ++i) {
      const Multivector a = random_mv(sig);
      const Multivector b = random_mv(sig);
      const Eigen::MatrixXcd diff =
          oracle.represent(a * b) - oracle.represent(a) * oracle.represent(b);
      EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-12) << sig.to_string();
      EXPECT_NEAR(oracle.scalar_part(oracle.represent(a * b)), scalar_product(a, b), 1e-12);
    }
  }
}

TEST(Multivector, OracleIsFaithfulOnBlades) {
  // Distinct blades map to linearly independent matrices: a random element
  // is zero exactly when its representation is.
  const verify::MatrixOracle oracle(Signature::canonical(2, 1));
  const Multivector a = random_mv(oracle.signature());
  EXPECT_GT(oracle.represent(a).cwiseAbs().maxCoeff(), 0.0);
  for (Blade b = 1; b < 8; ++b) {
    EXPECT_NEAR(oracle.scalar_part(oracle.represent(Multivector::blade(oracle.signature(), b))),
                0.0, 1e-15);
  }
}

TEST(Multivector, GradeProjection) {
  const Multivector m = random_mv(kSta);
  Multivector sum(kSta);
  for (int k = 0; k <= 4; ++k) {
    const Multivector g = m.grade(k);
    EXPECT_TRUE(g.is_homogeneous(k, 0.0) || g.is_zero(0.0));
    sum += g;
  }
  EXPECT_MV_NEAR(sum, m, 0.0);
  EXPECT_MV_NEAR(m.even_part() + m.odd_part(), m, 0.0);
  EXPECT_TRUE(m.even_part().is_even(0.0));
  EXPECT_THROW(m.grade(5), std::invalid_argument);
  EXPECT_THROW(m.grade(-1), std::invalid_argument);
}

TEST(Multivector, ReverseAndInvolution) {
  const Multivector a = random_mv(kCga);
  const Multivector b = random_mv(kCga);
  EXPECT_MV_NEAR((a * b).reverse(), b.reverse() * a.reverse(), 1e-12);
  EXPECT_MV_NEAR((a * b).involute(), a.involute() * b.involute(), 1e-12);
  const Multivector biv = Multivector::blade(kSta, 0b0110, 2.0);
  EXPECT_MV_NEAR(biv.reverse(), -biv, 0.0);
}

TEST(Multivector, InnerAndOuterProducts) {
  const Multivector a = test::random_sta_vector();
  const Multivector b = test::random_sta_vector();
  EXPECT_MV_NEAR(a * b, inner_product(a, b) + outer_product(a, b), 1e-14);
  EXPECT_MV_NEAR(outer_product(a, a), Multivector(kSta), 1e-15);
  EXPECT_NEAR(inner_product(a, b).scalar_part(), scalar_product(a, b), 1e-15);
  const Multivector c = test::random_sta_vector();
  EXPECT_MV_NEAR(outer_product(outer_product(a, b), c), outer_product(a, outer_product(b, c)), 1e-14);
}

TEST(Multivector, SignatureMismatchThrows) {
  const Multivector a = random_mv(kSta);
  const Multivector b = random_mv(kCga);
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(outer_product(a, b), std::invalid_argument);
  EXPECT_THROW(inner_product(a, b), std::invalid_argument);
  EXPECT_THROW(scalar_product(a, b), std::invalid_argument);
  EXPECT_THROW(approx_equal(a, b, 1.0), std::invalid_argument);
  Multivector c = a;
  EXPECT_THROW(c += b, std::invalid_argument);
}

TEST(Multivector, ConstructionValidates) {
  const double three[3] = {1, 2, 3};
  EXPECT_THROW(Multivector(kSta, std::span<const double>(three, 3)), std::invalid_argument);
  double bad[16] = {};
  bad[3] = std::nan("");
  EXPECT_THROW(Multivector(kSta, std::span<const double>(bad, 16)), std::invalid_argument);
  EXPECT_THROW(Multivector::basis_vector(kSta, 4), std::invalid_argument);
}

TEST(Multivector, EmbedAndRestrict) {
  const Multivector a = random_mv(kSta);
  const Multivector lifted = embed(a, kCga);
  EXPECT_MV_NEAR(restrict_to(lifted, kSta, 0.0), a, 0.0);
  const Multivector b = random_mv(kSta);
  EXPECT_MV_NEAR(embed(a * b, kCga), embed(a, kCga) * embed(b, kCga), 1e-14);
  EXPECT_THROW(restrict_to(Multivector::basis_vector(kCga, 4), kSta, 1e-10), std::invalid_argument);
}

TEST(Rotor, ValidatesNormalization) {
  EXPECT_NO_THROW(Rotor(Multivector::scalar(kSta, 1.0)));
  EXPECT_THROW(Rotor(Multivector::scalar(kSta, 2.0)), std::invalid_argument);
  EXPECT_THROW(Rotor(Multivector::basis_vector(kSta, 1)), std::invalid_argument);
}

TEST(Rotor, ExponentialClosedForms) {
  const double t = 0.7;
  // Euclidean plane: B^2 = -1 gives the circular form.
  const Multivector g12 = Multivector::blade(kSta, 0b0110);
  const Rotor r = rotor_exp(g12, t);
  EXPECT_MV_NEAR(r.value(), std::cos(t / 2) - std::sin(t / 2) * g12, 1e-15);
  // Boost plane: B^2 = +1 gives the hyperbolic form.
  const Multivector g01 = Multivector::blade(kSta, 0b0011);
  EXPECT_MV_NEAR(rotor_exp(g01, t).value(), std::cosh(t / 2) - std::sinh(t / 2) * g01, 1e-15);
  // Null plane: B^2 = 0.
  const Multivector nb = outer_product(Multivector::basis_vector(kCga, 4) + Multivector::basis_vector(kCga, 5),
                                       Multivector::basis_vector(kCga, 1));
  EXPECT_MV_NEAR(rotor_exp(nb, t).value(), 1.0 - (t / 2) * nb, 1e-15);
  // Rotating g1 by pi/2 in the g1 g2 plane.
  const Rotor q = rotor_exp(g12, std::numbers::pi / 2);
  EXPECT_MV_NEAR(q.apply(Multivector::basis_vector(kSta, 1)), -Multivector::basis_vector(kSta, 2), 1e-15);
}

TEST(Rotor, ExponentialRejectsNonBlades) {
  EXPECT_THROW(rotor_exp(Multivector::basis_vector(kSta, 1), 1.0), std::invalid_argument);
  const Multivector sum = Multivector::blade(kSta, 0b0011) + Multivector::blade(kSta, 0b1100);
  EXPECT_THROW(rotor_exp(sum, 1.0), std::invalid_argument);
}

TEST(Rotor, SandwichPreservesGradeAndNorm) {
  for (int i = 0; i < 20; ++i) {
    const Rotor r = rotor_exp(outer_product(test::random_sta_vector(), test::random_sta_vector()),
                              test::uniform());
    const Multivector v = test::random_sta_vector();
    const Multivector w = r.apply(v);
    EXPECT_TRUE(w.is_homogeneous(1, 1e-12));
    EXPECT_NEAR(scalar_product(w, w), scalar_product(v, v), 1e-10);
    EXPECT_MV_NEAR((r * r.reverse()).value(), Multivector::scalar(kSta, 1.0), 1e-12);
  }
}

TEST(Tolerance, DefaultIsTenToMinusTen) {
  if (std::getenv("TWISTOR_GA_TOL") == nullptr) EXPECT_EQ(default_tolerance(), 1e-10);
}

}  // namespace
}  // namespace tga
