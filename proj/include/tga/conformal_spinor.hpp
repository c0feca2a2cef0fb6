#pragma once

#include "tga/multivector.hpp"
#include "tga/sta.hpp"

// The 6-d twistor Upsilon = Z W1 W2 in Cl(2,4) and the spinor representation
// of the restricted conformal group it induces on 4-d spinors.
//
// Conformal rotors act on Upsilon by left multiplication; each closed form
// below satisfies lift(f(Z)) = R lift(Z) for the corresponding rotor R
// (lambda = 1).

namespace tga::conformal_spinor {

using sta::FourSpinor;

/// W1 = (1 - I g3 e)/2.
const Multivector& projector_w1();
/// W2 = (1 - I g0 eb)/2.
const Multivector& projector_w2();

/// Element of the right ideal Cl(2,4) W1 W2.
class SixSpinor {
 public:
  /// Throws std::invalid_argument unless value W1 W2 = value.
  explicit SixSpinor(Multivector value, double tol = 1e-10);

  const Multivector& value() const { return value_; }

 private:
  Multivector value_;
};

/// Upsilon = Z W1 W2.
SixSpinor lift(const FourSpinor& z);
/// Recovers Z from Upsilon. The lifted even basis blades are mutually
/// orthogonal with squared norm 1/4 and each keeps its own blade with
/// coefficient 1/4, so Z is four times the even Cl(1,3) part of Upsilon.
/// Throws std::invalid_argument if Upsilon is not in the image of lift.
FourSpinor unlift(const SixSpinor& upsilon, double tol = 1e-10);

/// R Upsilon for a Cl(2,4) rotor (or any left multiplier that keeps the ideal).
SixSpinor act(const Multivector& left, const SixSpinor& upsilon);

/// T_a(Z) = Z - a Z I g3 (1 + s3)/2.
FourSpinor spin_translate(const FourSpinor& z, const Multivector& a);
/// R Z for a Cl(1,3) rotor.
FourSpinor spin_rotate(const FourSpinor& z, const Rotor& r);
/// D_alpha(Z) = Z exp(-alpha s3 / 2).
FourSpinor spin_dilate(const FourSpinor& z, double alpha);
/// Z I s2 (anti-unitary inversion representative).
FourSpinor spin_invert(const FourSpinor& z);
/// K_a(Z) = Z + a Z I g3 (1 - s3)/2.
FourSpinor spin_special_conformal(const FourSpinor& z, const Multivector& a);

/// -e Upsilon I g1, the 6-d inversion matching spin_invert.
SixSpinor invert(const SixSpinor& upsilon);

enum class BivectorKind { kE, kEbar };

/// Action of the generator e g_mu or eb g_mu on a 4-d spinor:
///   e g_mu  -> -g_mu psi I g3
///   eb g_mu -> -I g_mu psi g0
/// Throws std::invalid_argument for mu outside 0..3.
FourSpinor bivector_action(BivectorKind kind, int mu, const FourSpinor& psi);
/// The Cl(2,4) bivector e g_mu or eb g_mu itself.
Multivector generator(BivectorKind kind, int mu);

}  // namespace tga::conformal_spinor
