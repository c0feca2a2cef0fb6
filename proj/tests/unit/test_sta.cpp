#include <gtest/gtest.h>

#include <complex>

#include "tga/sta.hpp"
#include "test_util.hpp"

namespace tga::sta {
namespace {

using test::random_pauli;
using test::random_spinor;
using test::random_sta_vector;
using test::uniform;

constexpr double kTol = 1e-12;

void expect_complex_near(ComplexPair a, ComplexPair b, double tol) {
  EXPECT_LE(std::abs(a - b), tol) << a << " vs " << b;
}

TEST(Sta, GammaMetric) {
  const double eta[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Multivector anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      EXPECT_MV_NEAR(anti, scalar(mu == nu ? 2 * eta[mu] : 0.0), 0.0);
    }
    EXPECT_MV_NEAR(gamma_up(mu) * gamma(mu), scalar(1.0), 0.0);
  }
}

TEST(Sta, PauliAlgebra) {
  for (int k = 1; k <= 3; ++k) EXPECT_MV_NEAR(sigma(k) * sigma(k), scalar(1.0), 0.0);
  EXPECT_MV_NEAR(sigma(1) * sigma(2), i_sigma(3), 0.0);
  EXPECT_MV_NEAR(sigma(2) * sigma(3), i_sigma(1), 0.0);
  EXPECT_MV_NEAR(sigma(3) * sigma(1), i_sigma(2), 0.0);
  EXPECT_MV_NEAR(sigma(1) * sigma(2) * sigma(3), pseudoscalar(), 0.0);
  EXPECT_MV_NEAR(i_sigma(3), gamma(2) * gamma(1), 0.0);
  EXPECT_MV_NEAR(i_sigma(3) * i_sigma(3), scalar(-1.0), 0.0);
}

TEST(Sta, PseudoscalarAnticommutesWithVectors) {
  EXPECT_MV_NEAR(pseudoscalar() * pseudoscalar(), scalar(-1.0), 0.0);
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_MV_NEAR(pseudoscalar() * gamma(mu), -(gamma(mu) * pseudoscalar()), 0.0);
  }
}

TEST(Sta, VectorComponentsRoundTrip) {
  const Multivector v = vector(1.5, -2.0, 0.25, 3.0);
  const auto c = vector_components(v);
  EXPECT_DOUBLE_EQ(c[0], 1.5);
  EXPECT_DOUBLE_EQ(c[1], -2.0);
  EXPECT_DOUBLE_EQ(c[2], 0.25);
  EXPECT_DOUBLE_EQ(c[3], 3.0);
  EXPECT_DOUBLE_EQ(scalar_product(v, v), 1.5 * 1.5 - 4.0 - 0.0625 - 9.0);
}

TEST(Sta, Projectors) {
  const Multivector& pp = projector_plus();
  const Multivector& pm = projector_minus();
  EXPECT_MV_NEAR(pp * pp, pp, 0.0);
  EXPECT_MV_NEAR(pm * pm, pm, 0.0);
  EXPECT_MV_NEAR(pp * pm, Multivector(signature()), 0.0);
  EXPECT_MV_NEAR(pp + pm, scalar(1.0), 0.0);
}

TEST(Sta, ComplexProjection) {
  const ComplexPair c(0.3, -1.7);
  expect_complex_near(project_s(from_complex(c)), c, 0.0);
  expect_complex_near(project_s_conj(from_complex(c)), std::conj(c), 0.0);
  // Parts outside span{1, I s3} are discarded.
  expect_complex_near(project_s(from_complex(c) + sigma(1) + i_sigma(2)), c, 0.0);
  // Products of complex numbers match.
  const ComplexPair d(-0.4, 2.2);
  expect_complex_near(project_s(from_complex(c) * from_complex(d)), c * d, kTol);
}

TEST(PauliSpinor, ComponentsRoundTrip) {
  const PauliSpinor z = PauliSpinor::from_coefficients(1.0, 2.0, 3.0, 4.0);
  const auto [c0, c1] = pauli_components(z);
  expect_complex_near(c0, {1.0, 4.0}, kTol);
  expect_complex_near(c1, {-3.0, 2.0}, kTol);
  EXPECT_MV_NEAR(pauli_from_components(c0, c1).value(), z.value(), kTol);
  EXPECT_NEAR(z.rho(), 30.0, kTol);
}

TEST(PauliSpinor, RejectsForeignComponents) {
  EXPECT_THROW(PauliSpinor(sigma(1)), std::invalid_argument);
  EXPECT_THROW(PauliSpinor(gamma(0)), std::invalid_argument);
  EXPECT_NO_THROW(PauliSpinor(scalar(1.0) + i_sigma(2)));
}

TEST(FourSpinor, RejectsOddGrades) {
  EXPECT_THROW(FourSpinor(gamma(1)), std::invalid_argument);
  EXPECT_NO_THROW(FourSpinor(sigma(1) + pseudoscalar()));
  EXPECT_MV_NEAR(FourSpinor::zero().value(), Multivector(signature()), 0.0);
}

TEST(FourSpinor, WeylRoundTrip) {
  for (int i = 0; i < 20; ++i) {
    const PauliSpinor omega = random_pauli();
    const PauliSpinor pi = random_pauli();
    const auto [o2, p2] = weyl_parts(four_spinor(omega, pi));
    EXPECT_MV_NEAR(o2.value(), omega.value(), kTol);
    EXPECT_MV_NEAR(p2.value(), pi.value(), kTol);

    const FourSpinor psi = random_spinor();
    const auto [o3, p3] = weyl_parts(psi);
    EXPECT_MV_NEAR(four_spinor(o3, p3).value(), psi.value(), kTol);
  }
}

TEST(FourSpinor, TwoSpinorComponentsRoundTrip) {
  for (int i = 0; i < 20; ++i) {
    const FourSpinor psi = random_spinor();
    EXPECT_MV_NEAR(four_spinor_from_components(two_spinor_components(psi)).value(),
                   psi.value(), kTol);
  }
}

TEST(FourSpinor, ConjugateModuleExample) {
  // phi = I s2 (1 - s3)/2 has its only component in slot 3, equal to +1.
  const FourSpinor phi = weyl_right(PauliSpinor::from_coefficients(1, 0, 0, 0));
  EXPECT_MV_NEAR(phi.value(), i_sigma(2) * projector_minus(), 0.0);
  const auto c = two_spinor_components(phi);
  expect_complex_near(c[0], 0.0, kTol);
  expect_complex_near(c[1], 0.0, kTol);
  expect_complex_near(c[2], 0.0, kTol);
  expect_complex_near(c[3], 1.0, kTol);
}

TEST(FourSpinor, ConjugateSlotsMatchPi) {
  const PauliSpinor pi = random_pauli();
  const auto [p0, p1] = pauli_components(pi);
  const auto c = two_spinor_components(weyl_right(pi));
  expect_complex_near(c[2], -std::conj(p1), kTol);
  expect_complex_near(c[3], std::conj(p0), kTol);
}

TEST(SpinorInner, TwoSpinorBracket) {
  const PauliSpinor omega = random_pauli();
  const PauliSpinor pi = random_pauli();
  const auto [o0, o1] = pauli_components(omega);
  const auto [p0, p1] = pauli_components(pi);
  expect_complex_near(spinor_inner_2(omega, pi), o0 * p1 - o1 * p0, kTol);
  expect_complex_near(spinor_inner_2(pi, omega), -spinor_inner_2(omega, pi), kTol);
  expect_complex_near(spinor_inner_2(omega, omega), 0.0, kTol);
}

TEST(SpinorInner, FourSpinorInnerIsSesquilinear) {
  const FourSpinor psi = random_spinor();
  const FourSpinor phi = random_spinor();
  const ComplexPair base = inner_s(psi, phi);
  expect_complex_near(inner_s(psi, i_action(phi)), ComplexPair(0, 1) * base, kTol);
  expect_complex_near(inner_s(i_action(psi), phi), ComplexPair(0, -1) * base, kTol);
}

TEST(Actions, DiracAlgebra) {
  const double eta[4] = {1, -1, -1, -1};
  const FourSpinor psi = random_spinor();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const FourSpinor anti =
          gamma_action(mu, gamma_action(nu, psi)) + gamma_action(nu, gamma_action(mu, psi));
      const double expected = mu == nu ? 2 * eta[mu] : 0.0;
      EXPECT_MV_NEAR(anti.value(), expected * psi.value(), kTol);
    }
  }
  EXPECT_MV_NEAR(i_action(i_action(psi)).value(), -psi.value(), kTol);
  EXPECT_MV_NEAR(gamma5_action(gamma5_action(psi)).value(), psi.value(), kTol);
  EXPECT_THROW(gamma_action(4, psi), std::invalid_argument);
  EXPECT_THROW(gamma_action(-1, psi), std::invalid_argument);
}

TEST(Observables, DiracCurrentIsTimelike) {
  for (int i = 0; i < 20; ++i) {
    const FourSpinor psi = random_spinor();
    const Multivector j = dirac_current(psi);
    EXPECT_TRUE(j.is_homogeneous(1, kTol));
    const Multivector rho = psi.value() * psi.value().reverse();
    const double mag2 = rho.scalar_part() * rho.scalar_part() +
                        rho[0b1111] * rho[0b1111];
    EXPECT_NEAR(scalar_product(j, j), mag2, 1e-10);
    EXPECT_GE(vector_components(j)[0], 0.0);
  }
}

TEST(Observables, SpinBivectorIsBivector) {
  const FourSpinor psi = random_spinor();
  EXPECT_TRUE(spin_bivector(psi).is_homogeneous(2, kTol));
  const auto t = bivector_components(gamma(0) * gamma(1));
  EXPECT_NEAR(t[0][1], -t[1][0], 0.0);
  EXPECT_NE(t[0][1], 0.0);
  EXPECT_EQ(t[2][3], 0.0);
}

TEST(Observables, FlagpoleIsFutureNull) {
  for (int i = 0; i < 20; ++i) {
    const PauliSpinor omega = random_pauli();
    const Multivector k = flagpole(omega);
    EXPECT_NEAR(scalar_product(k, k), 0.0, 1e-12);
    EXPECT_NEAR(vector_components(k)[0], 0.5 * omega.rho(), 1e-12);
  }
  // omega = 1 gives (g0 + g3)/2.
  EXPECT_MV_NEAR(flagpole(PauliSpinor::from_coefficients(1, 0, 0, 0)),
                 vector(0.5, 0, 0, 0.5), kTol);
}

TEST(Observables, HermitianComponents) {
  const Multivector v = vector(2.0, 0.5, -1.0, 0.25);
  const ComplexMatrix2 h = hermitian_components(v);
  expect_complex_near(h[0][0], 2.25, 0.0);
  expect_complex_near(h[1][1], 1.75, 0.0);
  expect_complex_near(h[0][1], {0.5, 1.0}, 0.0);
  expect_complex_near(h[1][0], std::conj(h[0][1]), 0.0);
  const ComplexPair det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  expect_complex_near(det, scalar_product(v, v), 1e-14);
  // A flagpole has a singular matrix.
  const ComplexMatrix2 k = hermitian_components(flagpole(random_pauli()));
  expect_complex_near(k[0][0] * k[1][1] - k[0][1] * k[1][0], 0.0, 1e-12);
  EXPECT_THROW(hermitian_components(sigma(1)), std::invalid_argument);
}

TEST(Sta, IndexErrors) {
  EXPECT_THROW(gamma(4), std::invalid_argument);
  EXPECT_THROW(sigma(0), std::invalid_argument);
  EXPECT_THROW(sigma(4), std::invalid_argument);
  EXPECT_THROW(i_sigma(0), std::invalid_argument);
}

}  // namespace
}  // namespace tga::sta
