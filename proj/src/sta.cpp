#include "tga/sta.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tga::sta {

namespace {

Multivector vec(int mu) { return Multivector::basis_vector(signature(), mu); }

void require_sta(const Multivector& m, const char* what) {
  if (!(m.signature() == signature())) {
    throw std::invalid_argument(std::string(what) + ": expected a Cl(1,3) multivector");
  }
}

// Blade carrying the single coefficient of a basis element.
Blade support_of(const Multivector& m) {
  for (Blade b = 0; b < m.size(); ++b) {
    if (m[b] != 0.0) return b;
  }
  return 0;
}

ComplexPair two_project(const Multivector& m) { return 2.0 * project_s(m); }

}  // namespace

const Signature& signature() {
  static const Signature sig = Signature::spacetime();
  return sig;
}

const Multivector& gamma(int mu) {
  static const std::array<Multivector, 4> g = {vec(0), vec(1), vec(2), vec(3)};
  if (mu < 0 || mu > 3) throw std::invalid_argument("gamma: index outside 0..3");
  return g[mu];
}

Multivector gamma_up(int mu) { return mu == 0 ? gamma(0) : -gamma(mu); }

const Multivector& sigma(int k) {
  static const std::array<Multivector, 3> s = {gamma(1) * gamma(0), gamma(2) * gamma(0),
                                               gamma(3) * gamma(0)};
  if (k < 1 || k > 3) throw std::invalid_argument("sigma: index outside 1..3");
  return s[k - 1];
}

const Multivector& pseudoscalar() {
  static const Multivector i = gamma(0) * gamma(1) * gamma(2) * gamma(3);
  return i;
}

const Multivector& i_sigma(int k) {
  static const std::array<Multivector, 3> s = {
      pseudoscalar() * sigma(1), pseudoscalar() * sigma(2), pseudoscalar() * sigma(3)};
  if (k < 1 || k > 3) throw std::invalid_argument("i_sigma: index outside 1..3");
  return s[k - 1];
}

Multivector scalar(double value) { return Multivector::scalar(signature(), value); }

Multivector vector(double t, double x, double y, double z) {
  const std::array<double, 4> c{t, x, y, z};
  return Multivector::vector(signature(), c);
}

std::array<double, 4> vector_components(const Multivector& v) {
  require_sta(v, "vector_components");
  return {v[1], v[2], v[4], v[8]};
}

const Multivector& projector_plus() {
  static const Multivector p = 0.5 * (1.0 + sigma(3));
  return p;
}

const Multivector& projector_minus() {
  static const Multivector p = 0.5 * (1.0 - sigma(3));
  return p;
}

PauliSpinor::PauliSpinor(Multivector value, double tol) : value_(std::move(value)) {
  require_sta(value_, "PauliSpinor");
  const Blade allowed[] = {0, support_of(i_sigma(1)), support_of(i_sigma(2)),
                           support_of(i_sigma(3))};
  for (Blade b = 0; b < value_.size(); ++b) {
    bool ok = false;
    for (Blade a : allowed) ok = ok || a == b;
    if (!ok && std::abs(value_[b]) > tol) {
      throw std::invalid_argument("PauliSpinor: component outside span{1, I sigma_k}");
    }
  }
}

PauliSpinor PauliSpinor::from_coefficients(double a0, double a1, double a2, double a3) {
  return PauliSpinor(a0 + a1 * i_sigma(1) + a2 * i_sigma(2) + a3 * i_sigma(3));
}

double PauliSpinor::rho() const { return (value_ * value_.reverse()).scalar_part(); }

FourSpinor::FourSpinor(Multivector value, double tol) : value_(std::move(value)) {
  require_sta(value_, "FourSpinor");
  if (!value_.is_even(tol)) {
    throw std::invalid_argument("FourSpinor: odd-grade components present");
  }
  value_ = value_.even_part();
}

FourSpinor FourSpinor::zero() { return FourSpinor(Multivector(signature()), Trusted{}); }

ComplexPair project_s(const Multivector& m) {
  require_sta(m, "project_s");
  return {m.scalar_part(), -scalar_product(m, i_sigma(3))};
}

ComplexPair project_s_conj(const Multivector& m) { return std::conj(project_s(m)); }

Multivector from_complex(ComplexPair c) { return c.real() + c.imag() * i_sigma(3); }

PauliSpinor pauli_from_components(ComplexPair c0, ComplexPair c1) {
  return PauliSpinor::from_coefficients(c0.real(), c1.imag(), -c1.real(), c0.imag());
}

std::pair<ComplexPair, ComplexPair> pauli_components(const PauliSpinor& zeta) {
  return {project_s(zeta.value()), project_s(i_sigma(2) * zeta.value())};
}

FourSpinor weyl_left(const PauliSpinor& omega) {
  return FourSpinor(omega.value() * projector_plus());
}

FourSpinor weyl_right(const PauliSpinor& pi) {
  return FourSpinor(pi.value() * i_sigma(2) * projector_minus());
}

FourSpinor four_spinor(const PauliSpinor& omega, const PauliSpinor& pi) {
  return weyl_left(omega) + weyl_right(pi);
}

std::pair<PauliSpinor, PauliSpinor> weyl_parts(const FourSpinor& psi) {
  const auto c = two_spinor_components(psi);
  return {pauli_from_components(c[0], c[1]),
          pauli_from_components(std::conj(c[3]), -std::conj(c[2]))};
}

std::array<ComplexPair, 4> two_spinor_components(const FourSpinor& phi) {
  const Multivector& v = phi.value();
  return {two_project(v * projector_plus()),
          two_project(i_sigma(2) * v * projector_plus()),
          -two_project(v * projector_minus()),
          -two_project(i_sigma(2) * v * projector_minus())};
}

FourSpinor four_spinor_from_components(const std::array<ComplexPair, 4>& c) {
  return four_spinor(pauli_from_components(c[0], c[1]),
                     pauli_from_components(std::conj(c[3]), -std::conj(c[2])));
}

std::pair<ComplexPair, ComplexPair> conjugate_components(const PauliSpinor& omega) {
  const Multivector& w = omega.value();
  return {2.0 * project_s_conj(w * projector_minus()),
          2.0 * project_s_conj(i_sigma(2) * w * projector_minus())};
}

ComplexPair spinor_inner_2(const PauliSpinor& omega, const PauliSpinor& pi) {
  return project_s(i_sigma(2) * omega.value().reverse() * pi.value());
}

ComplexPair inner_s(const FourSpinor& psi, const FourSpinor& phi) {
  return project_s(psi.value().reverse() * phi.value());
}

FourSpinor gamma_action(int mu, const FourSpinor& psi) {
  if (mu < 0 || mu > 3) {
    throw std::invalid_argument("gamma_action: index " + std::to_string(mu) +
                                " outside 0..3");
  }
  return FourSpinor(gamma(mu) * psi.value() * gamma(0));
}

FourSpinor i_action(const FourSpinor& psi) { return FourSpinor(psi.value() * i_sigma(3)); }

FourSpinor gamma5_action(const FourSpinor& psi) {
  return FourSpinor(psi.value() * sigma(3));
}

Multivector dirac_current(const FourSpinor& psi) {
  return (psi.value() * gamma(0) * psi.value().reverse()).grade(1);
}

Multivector spin_bivector(const FourSpinor& psi) {
  const Multivector full = 0.5 * psi.value() * i_sigma(3) * psi.value().reverse();
  const double scale = std::max(1.0, psi.value().max_abs() * psi.value().max_abs());
  if (!full.is_homogeneous(2, default_tolerance() * scale)) {
    throw std::logic_error("spin_bivector: non-bivector residue " + full.to_string());
  }
  return full.grade(2);
}

std::array<std::array<double, 4>, 4> bivector_components(const Multivector& bivector) {
  require_sta(bivector, "bivector_components");
  std::array<std::array<double, 4>, 4> t{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      t[mu][nu] = -scalar_product(bivector, outer_product(gamma_up(mu), gamma_up(nu)));
    }
  }
  return t;
}

Multivector flagpole(const PauliSpinor& omega) {
  const Multivector& w = omega.value();
  return (0.5 * w * (gamma(0) + gamma(3)) * w.reverse()).grade(1);
}

ComplexMatrix2 hermitian_components(const Multivector& v) {
  require_sta(v, "hermitian_components");
  const double scale = std::max(1.0, v.max_abs());
  if (!v.is_homogeneous(1, default_tolerance() * scale)) {
    throw std::invalid_argument("hermitian_components: input is not a vector");
  }
  const auto k = vector_components(v);
  return {{{ComplexPair{k[0] + k[3], 0.0}, ComplexPair{k[1], -k[2]}},
           {ComplexPair{k[1], k[2]}, ComplexPair{k[0] - k[3], 0.0}}}};
}

}  // namespace tga::sta
