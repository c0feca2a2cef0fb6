#pragma once

#include "tga/multivector.hpp"
#include "tga/sta.hpp"

// 1-valence twistors as translated 4-d spinors:
//   Z = psi + r psi I gamma_3 (1 + sigma_3)/2
// together with the observables of the massless particle they encode.
// Units: hbar = c = 1, so helicity is a bare real number.

namespace tga::twistor {

using sta::ComplexPair;
using sta::FourSpinor;

class Twistor {
 public:
  /// Throws std::invalid_argument unless r is a Cl(1,3) vector.
  Twistor(FourSpinor psi, Multivector r);

  /// Spinor at the origin.
  const FourSpinor& psi() const { return psi_; }
  /// Minkowski position.
  const Multivector& position() const { return r_; }
  /// Translated spinor Z.
  const FourSpinor& z() const { return z_; }

 private:
  FourSpinor psi_;
  Multivector r_;
  FourSpinor z_;
};

/// Z = T_{-r}(psi).
FourSpinor translated_spinor(const FourSpinor& psi, const Multivector& r);

/// Z (1 + sigma_3)/2, the position-dependent 2-spinor omega^A.
FourSpinor primary_part(const Twistor& t);
/// Z (1 - sigma_3)/2 = pi I sigma_2 (1 - sigma_3)/2, independent of r.
FourSpinor projection_part(const Twistor& t);

/// s = -<reverse(Z) Z>_s, real part.
double helicity(const Twistor& t);
/// The full complex projection -<reverse(Z) Z>_s; its imaginary part is
/// reported rather than assumed to vanish.
ComplexPair helicity_projection(const Twistor& t);
/// -<reverse(psi) psi>, the origin form.
double helicity_at_origin(const FourSpinor& psi);

/// p = Z (gamma_0 - gamma_3) reverse(Z) / 2.
Multivector momentum(const Twistor& t);
/// p = pi (gamma_0 + gamma_3) reverse(pi) / 2 from the Weyl part pi of psi.
Multivector momentum_from_pi(const Twistor& t);
/// p = psi (gamma_0 - gamma_3) reverse(psi) / 2.
Multivector momentum_from_psi(const Twistor& t);

/// M = Z I sigma_3 reverse(Z) / 2.
Multivector angular_momentum(const Twistor& t);
/// Spin bivector of psi: the angular momentum at the origin.
Multivector angular_momentum_at_origin(const Twistor& t);
/// M_0 - r ^ p.
Multivector angular_momentum_decomposed(const Twistor& t);

/// S = -2 I (p ^ M).
Multivector pauli_lubanski(const Twistor& t);
/// S = 2 p . (I M).
Multivector pauli_lubanski_dual(const Twistor& t);

struct Observables {
  double helicity;
  Multivector momentum;
  Multivector angular_momentum;
  Multivector pauli_lubanski;
};

Observables observables(const Twistor& t);

/// Same position, spinor multiplied on the right by exp(I sigma_3 theta).
Twistor with_phase(const Twistor& t, double theta);

struct ReconstructionCheck {
  bool consistent;
  double momentum_residual;
  double angular_momentum_residual;
};

/// Compares (p, M) against the observables of t and of t's phase-rotated copy
/// by theta; p and M determine the twistor only up to that phase.
ReconstructionCheck reconstruct_check(const Multivector& p, const Multivector& m,
                                      const Twistor& t, double theta, double tol);

}  // namespace tga::twistor
