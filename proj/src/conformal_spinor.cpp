#include "tga/conformal_spinor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tga/conformal.hpp"

namespace tga::conformal_spinor {

namespace {

const Multivector& i4() {
  static const Multivector i = conformal::lift(sta::pseudoscalar());
  return i;
}

const Multivector& ideal_projector() {
  static const Multivector w = projector_w1() * projector_w2();
  return w;
}

Multivector require_minkowski(const Multivector& a, const char* what) {
  const Multivector v =
      a.signature() == sta::signature() ? a : conformal::lower(a);
  if (!v.is_homogeneous(1, default_tolerance() * std::max(1.0, v.max_abs()))) {
    throw std::invalid_argument(std::string(what) + ": expected a Minkowski vector");
  }
  return v.grade(1);
}

}  // namespace

const Multivector& projector_w1() {
  static const Multivector w =
      0.5 * (1.0 - i4() * conformal::gamma(3) * conformal::e());
  return w;
}

const Multivector& projector_w2() {
  static const Multivector w =
      0.5 * (1.0 - i4() * conformal::gamma(0) * conformal::ebar());
  return w;
}

SixSpinor::SixSpinor(Multivector value, double tol) : value_(std::move(value)) {
  if (!(value_.signature() == conformal::signature())) {
    throw std::invalid_argument("SixSpinor: expected a Cl(2,4) multivector");
  }
  const double scale = std::max(1.0, value_.max_abs());
  if (!approx_equal(value_ * ideal_projector(), value_, tol * scale)) {
    throw std::invalid_argument("SixSpinor: value is not in the ideal Cl(2,4) W1 W2");
  }
}

SixSpinor lift(const FourSpinor& z) {
  return SixSpinor(conformal::lift(z.value()) * ideal_projector());
}

FourSpinor unlift(const SixSpinor& upsilon, double tol) {
  Multivector z(sta::signature());
  for (Blade b = 0; b < z.size(); ++b) {
    if (blade_grade(b) % 2 == 0) z = z.with(b, 4.0 * upsilon.value()[b]);
  }
  FourSpinor spinor(z);
  const double scale = std::max(1.0, upsilon.value().max_abs());
  if (!approx_equal(lift(spinor).value(), upsilon.value(), tol * scale)) {
    throw std::invalid_argument("unlift: value is not the lift of a 4-d spinor");
  }
  return spinor;
}

SixSpinor act(const Multivector& left, const SixSpinor& upsilon) {
  return SixSpinor(left * upsilon.value());
}

FourSpinor spin_translate(const FourSpinor& z, const Multivector& a) {
  const Multivector av = require_minkowski(a, "spin_translate");
  return FourSpinor(z.value() -
                    av * z.value() * sta::pseudoscalar() * sta::gamma(3) * sta::projector_plus());
}

FourSpinor spin_rotate(const FourSpinor& z, const Rotor& r) {
  const Multivector rv =
      r.signature() == sta::signature() ? r.value() : conformal::lower(r.value());
  return FourSpinor(rv * z.value());
}

FourSpinor spin_dilate(const FourSpinor& z, double alpha) {
  return FourSpinor(z.value() *
                    (std::cosh(0.5 * alpha) - std::sinh(0.5 * alpha) * sta::sigma(3)));
}

FourSpinor spin_invert(const FourSpinor& z) { return FourSpinor(z.value() * sta::i_sigma(2)); }

FourSpinor spin_special_conformal(const FourSpinor& z, const Multivector& a) {
  const Multivector av = require_minkowski(a, "spin_special_conformal");
  return FourSpinor(z.value() +
                    av * z.value() * sta::pseudoscalar() * sta::gamma(3) * sta::projector_minus());
}

SixSpinor invert(const SixSpinor& upsilon) {
  return SixSpinor(-(conformal::e() * upsilon.value() * i4() * conformal::gamma(1)));
}

FourSpinor bivector_action(BivectorKind kind, int mu, const FourSpinor& psi) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("bivector_action: index " + std::to_string(mu) +
                                " outside 0..3");
  }
  const Multivector& i = sta::pseudoscalar();
  if (kind == BivectorKind::kE) {
    return FourSpinor(-(sta::gamma(mu) * psi.value() * i * sta::gamma(3)));
  }
  return FourSpinor(-(i * sta::gamma(mu) * psi.value() * sta::gamma(0)));
}

Multivector generator(BivectorKind kind, int mu) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("generator: index " + std::to_string(mu) + " outside 0..3");
  }
  const Multivector& v = kind == BivectorKind::kE ? conformal::e() : conformal::ebar();
  return v * conformal::gamma(mu);
}

}  // namespace tga::conformal_spinor
