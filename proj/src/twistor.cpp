#include "tga/twistor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tga::twistor {

using sta::gamma;
using sta::i_sigma;
using sta::pseudoscalar;

namespace {

Multivector null_bilinear(const Multivector& spinor, const Multivector& direction) {
  return (0.5 * spinor * direction * spinor.reverse()).grade(1);
}

}  // namespace

FourSpinor translated_spinor(const FourSpinor& psi, const Multivector& r) {
  const Multivector& v = psi.value();
  return FourSpinor(v + r * v * pseudoscalar() * gamma(3) * sta::projector_plus());
}

Twistor::Twistor(FourSpinor psi, Multivector r)
    : psi_(std::move(psi)), r_(std::move(r)), z_(FourSpinor::zero()) {
  if (!(r_.signature() == sta::signature())) {
    throw std::invalid_argument("Twistor: position must be a Cl(1,3) vector");
  }
  if (!r_.is_homogeneous(1, default_tolerance() * std::max(1.0, r_.max_abs()))) {
    throw std::invalid_argument("Twistor: position is not a vector");
  }
  r_ = r_.grade(1);
  z_ = translated_spinor(psi_, r_);
}

FourSpinor primary_part(const Twistor& t) {
  return FourSpinor(t.z().value() * sta::projector_plus());
}

FourSpinor projection_part(const Twistor& t) {
  return FourSpinor(t.z().value() * sta::projector_minus());
}

ComplexPair helicity_projection(const Twistor& t) {
  return -sta::inner_s(t.z(), t.z());
}

double helicity(const Twistor& t) { return helicity_projection(t).real(); }

double helicity_at_origin(const FourSpinor& psi) {
  return -scalar_product(psi.value().reverse(), psi.value());
}

Multivector momentum(const Twistor& t) {
  return null_bilinear(t.z().value(), gamma(0) - gamma(3));
}

Multivector momentum_from_pi(const Twistor& t) {
  const auto [omega, pi] = sta::weyl_parts(t.psi());
  return null_bilinear(pi.value(), gamma(0) + gamma(3));
}

Multivector momentum_from_psi(const Twistor& t) {
  return null_bilinear(t.psi().value(), gamma(0) - gamma(3));
}

Multivector angular_momentum(const Twistor& t) {
  const Multivector& z = t.z().value();
  return (0.5 * z * i_sigma(3) * z.reverse()).grade(2);
}

Multivector angular_momentum_at_origin(const Twistor& t) {
  return sta::spin_bivector(t.psi());
}

Multivector angular_momentum_decomposed(const Twistor& t) {
  return angular_momentum_at_origin(t) - outer_product(t.position(), momentum(t));
}

Multivector pauli_lubanski(const Twistor& t) {
  return (-2.0 * pseudoscalar() * outer_product(momentum(t), angular_momentum(t))).grade(1);
}

Multivector pauli_lubanski_dual(const Twistor& t) {
  return (2.0 * inner_product(momentum(t), pseudoscalar() * angular_momentum(t))).grade(1);
}

Observables observables(const Twistor& t) {
  return {helicity(t), momentum(t), angular_momentum(t), pauli_lubanski(t)};
}

Twistor with_phase(const Twistor& t, double theta) {
  const Multivector phase = std::cos(theta) + std::sin(theta) * i_sigma(3);
  return Twistor(FourSpinor(t.psi().value() * phase), t.position());
}

ReconstructionCheck reconstruct_check(const Multivector& p, const Multivector& m,
                                      const Twistor& t, double theta, double tol) {
  const Twistor rotated = with_phase(t, theta);
  const double dp = std::max(max_abs_diff(p, momentum(t)), max_abs_diff(p, momentum(rotated)));
  const double dm = std::max(max_abs_diff(m, angular_momentum(t)),
                             max_abs_diff(m, angular_momentum(rotated)));
  return {dp <= tol && dm <= tol, dp, dm};
}

}  // namespace tga::twistor
