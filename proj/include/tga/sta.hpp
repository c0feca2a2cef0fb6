#pragma once

#include <array>
#include <complex>
#include <utility>

#include "tga/multivector.hpp"

// Spacetime algebra Cl(1,3): named basis, Pauli / Weyl / 4-d spinors,
// component extraction, inner products and the standard observables.
//
// The bivector I*sigma_3 plays the role of the unit imaginary throughout.
// Complex numbers appear only at the component boundary, as ComplexPair,
// with re + im * I*sigma_3.

namespace tga::sta {

using ComplexPair = std::complex<double>;

/// 2x2 matrix of complex components, [row][column].
using ComplexMatrix2 = std::array<std::array<ComplexPair, 2>, 2>;

// -- basis -----------------------------------------------------------------

const Signature& signature();

/// gamma_mu, mu = 0..3.
const Multivector& gamma(int mu);
/// Reciprocal vector gamma^mu (gamma^0 = gamma_0, gamma^k = -gamma_k).
Multivector gamma_up(int mu);
/// Relative vector sigma_k = gamma_k gamma_0, k = 1..3.
const Multivector& sigma(int k);
/// Pseudoscalar I = gamma_0 gamma_1 gamma_2 gamma_3.
const Multivector& pseudoscalar();
/// I sigma_k, k = 1..3.
const Multivector& i_sigma(int k);
Multivector scalar(double value);
/// Minkowski vector t gamma_0 + x gamma_1 + y gamma_2 + z gamma_3.
Multivector vector(double t, double x, double y, double z);
/// Contravariant components v^mu = v . gamma^mu.
std::array<double, 4> vector_components(const Multivector& v);

/// Chiral projectors (1 +- sigma_3) / 2.
const Multivector& projector_plus();
const Multivector& projector_minus();

// -- spinor types ----------------------------------------------------------

/// Pauli spinor a0 + a^k I sigma_k.
class PauliSpinor {
 public:
  /// Throws std::invalid_argument if components outside {1, I sigma_k} are present.
  explicit PauliSpinor(Multivector value, double tol = 1e-10);
  static PauliSpinor from_coefficients(double a0, double a1, double a2, double a3);

  const Multivector& value() const { return value_; }
  /// zeta reverse(zeta), a non-negative scalar.
  double rho() const;

 private:
  Multivector value_;
};

/// Even element of Cl(1,3): the 4-d (Dirac-type) spinor.
class FourSpinor {
 public:
  /// Throws std::invalid_argument if the value is not an even element of Cl(1,3).
  explicit FourSpinor(Multivector value, double tol = 1e-10);
  static FourSpinor zero();

  const Multivector& value() const { return value_; }

  friend FourSpinor operator+(const FourSpinor& a, const FourSpinor& b) {
    return FourSpinor(a.value_ + b.value_, Trusted{});
  }
  friend FourSpinor operator-(const FourSpinor& a, const FourSpinor& b) {
    return FourSpinor(a.value_ - b.value_, Trusted{});
  }
  friend FourSpinor operator*(double s, const FourSpinor& a) {
    return FourSpinor(s * a.value_, Trusted{});
  }

 private:
  struct Trusted {};
  FourSpinor(Multivector value, Trusted) : value_(std::move(value)) {}

  Multivector value_;
};

// -- complex projections ---------------------------------------------------

/// <m>_s = <m> - <m I sigma_3> I sigma_3, returned as (re, im).
ComplexPair project_s(const Multivector& m);
/// Conjugate projection <m>_s^* = (re, -im).
ComplexPair project_s_conj(const Multivector& m);
/// re + im * I sigma_3 as a multivector.
Multivector from_complex(ComplexPair c);

// -- Pauli spinors ---------------------------------------------------------

/// zeta^0 = a0 + i a3, zeta^1 = -a2 + i a1.
PauliSpinor pauli_from_components(ComplexPair c0, ComplexPair c1);
std::pair<ComplexPair, ComplexPair> pauli_components(const PauliSpinor& zeta);

// -- Weyl decomposition ----------------------------------------------------

/// omega (1 + sigma_3)/2.
FourSpinor weyl_left(const PauliSpinor& omega);
/// pi I sigma_2 (1 - sigma_3)/2, the conjugate module.
FourSpinor weyl_right(const PauliSpinor& pi);
/// omega (1 + sigma_3)/2 + pi I sigma_2 (1 - sigma_3)/2.
FourSpinor four_spinor(const PauliSpinor& omega, const PauliSpinor& pi);
/// Recovers (omega, pi) from a 4-d spinor; inverse of four_spinor.
std::pair<PauliSpinor, PauliSpinor> weyl_parts(const FourSpinor& psi);

/// Components (psi^0, psi^1, psi^2, psi^3):
///   psi^0 =  2 <psi P+>_s,        psi^1 =  2 <I s2 psi P+>_s,
///   psi^2 = -2 <psi P->_s,        psi^3 = -2 <I s2 psi P->_s.
/// The last two are already the conjugate-module components
/// (psi^2 = -conj(pi^1), psi^3 = conj(pi^0)).
std::array<ComplexPair, 4> two_spinor_components(const FourSpinor& phi);
/// Inverse of two_spinor_components.
FourSpinor four_spinor_from_components(const std::array<ComplexPair, 4>& c);
/// Components of the conjugate 2-spinor bar(omega)^{A'}:
///   2 <omega P->_s^*, 2 <I s2 omega P->_s^*.
std::pair<ComplexPair, ComplexPair> conjugate_components(const PauliSpinor& omega);

/// {omega, pi} = <I sigma_2 reverse(omega) pi>_s  (= omega^0 pi^1 - omega^1 pi^0).
ComplexPair spinor_inner_2(const PauliSpinor& omega, const PauliSpinor& pi);

/// (psi, phi)_s = <reverse(psi) phi>_s.
ComplexPair inner_s(const FourSpinor& psi, const FourSpinor& phi);

// -- operator actions ------------------------------------------------------

/// gamma_mu psi gamma_0.  Throws std::invalid_argument for mu outside 0..3.
FourSpinor gamma_action(int mu, const FourSpinor& psi);
/// psi I sigma_3.
FourSpinor i_action(const FourSpinor& psi);
/// psi sigma_3.
FourSpinor gamma5_action(const FourSpinor& psi);

// -- observables -----------------------------------------------------------

/// J = psi gamma_0 reverse(psi).
Multivector dirac_current(const FourSpinor& psi);
/// S = psi I sigma_3 reverse(psi) / 2; throws std::logic_error if the
/// grade-0/4 residue exceeds the default tolerance.
Multivector spin_bivector(const FourSpinor& psi);
/// Tensor components T^{mu nu} = -B . (gamma^mu ^ gamma^nu).
std::array<std::array<double, 4>, 4> bivector_components(const Multivector& bivector);

/// K = omega (gamma_0 + gamma_3) reverse(omega) / 2.
Multivector flagpole(const PauliSpinor& omega);

/// [[v0+v3, v1 - i v2], [v1 + i v2, v0 - v3]]. Throws std::invalid_argument
/// if v is not a grade-1 element of Cl(1,3).
ComplexMatrix2 hermitian_components(const Multivector& v);

}  // namespace tga::sta
