#include "tga/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tga/sta.hpp"

namespace tga::conformal {

namespace {

constexpr Blade kE = Blade{1} << 4;
constexpr Blade kEbar = Blade{1} << 5;

Multivector vec(int i) { return Multivector::basis_vector(signature(), i); }

// Accepts either a Cl(1,3) vector or its Cl(2,4) image; returns the latter.
Multivector as_conformal_vector(const Multivector& x, const char* what) {
  Multivector v = x.signature() == signature() ? x : lift(x);
  const double scale = std::max(1.0, v.max_abs());
  if (!v.is_homogeneous(1, default_tolerance() * scale) ||
      std::abs(v[kE]) > default_tolerance() * scale ||
      std::abs(v[kEbar]) > default_tolerance() * scale) {
    throw std::invalid_argument(std::string(what) + ": expected a Minkowski vector");
  }
  return v.grade(1).with(kE, 0.0).with(kEbar, 0.0);
}

double square(const Multivector& v) { return scalar_product(v, v); }

void require_scale(double lambda, const char* what) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument(std::string(what) + ": length scale must be positive");
  }
}

Multivector point_numerator(const Multivector& x, double lambda) {
  return square(x) * n() + 2.0 * lambda * x - lambda * lambda * nbar();
}

Multivector minkowski_part(const Multivector& X) {
  Multivector out(signature());
  for (int mu = 0; mu < 4; ++mu) out = out.with(Blade{1} << mu, X[Blade{1} << mu]);
  return out;
}

}  // namespace

const Signature& signature() {
  static const Signature sig = Signature::conformal();
  return sig;
}

const Multivector& e() {
  static const Multivector v = vec(4);
  return v;
}

const Multivector& ebar() {
  static const Multivector v = vec(5);
  return v;
}

const Multivector& n() {
  static const Multivector v = e() + ebar();
  return v;
}

const Multivector& nbar() {
  static const Multivector v = e() - ebar();
  return v;
}

const Multivector& bivector_n() {
  static const Multivector v = e() * ebar();
  return v;
}

const Multivector& pseudoscalar() {
  static const Multivector v = vec(0) * vec(1) * vec(2) * vec(3) * e() * ebar();
  return v;
}

const Multivector& gamma(int mu) {
  static const std::array<Multivector, 4> g = {vec(0), vec(1), vec(2), vec(3)};
  if (mu < 0 || mu > 3) throw std::invalid_argument("gamma: index outside 0..3");
  return g[mu];
}

Multivector lift(const Multivector& sta) { return embed(sta, signature()); }

Multivector lower(const Multivector& conformal) {
  return restrict_to(conformal, sta::signature(),
                     default_tolerance() * std::max(1.0, conformal.max_abs()));
}

ConformalPoint embed_euclidean(const Multivector& x, double lambda) {
  require_scale(lambda, "embed_euclidean");
  const Multivector v = as_conformal_vector(x, "embed_euclidean");
  return {point_numerator(v, lambda) / (2.0 * lambda * lambda), lambda};
}

ConformalPoint embed_hyperbolic(const Multivector& x, double lambda) {
  require_scale(lambda, "embed_hyperbolic");
  const Multivector v = as_conformal_vector(x, "embed_hyperbolic");
  const double denom = lambda * lambda - square(v);
  if (std::abs(denom) <= default_tolerance() * lambda * lambda) {
    throw std::domain_error("embed_hyperbolic: x^2 = lambda^2, point translated to infinity");
  }
  return {point_numerator(v, lambda) / denom, lambda};
}

Multivector extract_euclidean(const ConformalPoint& point) {
  const double xn = scalar_product(point.X, n());
  if (std::abs(xn) <= default_tolerance() * std::max(1.0, point.X.max_abs())) {
    throw std::domain_error("extract_euclidean: X.n = 0, point at infinity");
  }
  return lower(point.scale * minkowski_part(-point.X / xn));
}

Multivector extract_hyperbolic(const ConformalPoint& point) {
  const double xn = scalar_product(point.X, n());
  if (std::abs(xn) <= default_tolerance() * std::max(1.0, point.X.max_abs())) {
    throw std::domain_error("extract_hyperbolic: X.n = 0, point at infinity");
  }
  Multivector u(sta::signature());
  for (int k = 1; k <= 3; ++k) {
    u += (point.scale * scalar_product(point.X, gamma(k)) / xn) * sta::gamma(k);
  }
  return u;
}

bool homogeneous_equal(const Multivector& x, const Multivector& y, double tol) {
  const auto pivot = [](const Multivector& m) {
    Blade best = 0;
    for (Blade b = 0; b < m.size(); ++b) {
      if (std::abs(m[b]) > std::abs(m[best])) best = b;
    }
    return best;
  };
  const Blade b = pivot(x);
  if (x[b] == 0.0) return y.is_zero(tol);
  if (y[b] == 0.0) return false;
  return approx_equal(x / x[b], y / y[b], tol);
}

Rotor translation_rotor(const Multivector& a, double lambda) {
  require_scale(lambda, "translation_rotor");
  const Multivector v = as_conformal_vector(a, "translation_rotor");
  return Rotor(1.0 + n() * v / (2.0 * lambda));
}

Rotor hyperbolic_translation_rotor(const Multivector& x, double lambda) {
  require_scale(lambda, "hyperbolic_translation_rotor");
  const Multivector v = as_conformal_vector(x, "hyperbolic_translation_rotor");
  const double gap = lambda * lambda - square(v);
  if (!(gap > default_tolerance() * lambda * lambda)) {
    throw std::domain_error("hyperbolic_translation_rotor: requires x^2 < lambda^2");
  }
  return Rotor((lambda + ebar() * v) / std::sqrt(gap),
               1e-9 * std::max(1.0, lambda * lambda / gap));
}

Rotor rotation_about(const Multivector& a, const Rotor& spacetime_rotor, double lambda) {
  const Rotor r = spacetime_rotor.signature() == signature()
                      ? spacetime_rotor
                      : Rotor(lift(spacetime_rotor.value()));
  const Rotor t = translation_rotor(a, lambda);
  return t * r * t.reverse();
}

Rotor dilation_rotor(double alpha) { return rotor_exp(bivector_n(), -alpha); }

Rotor dilation_about(const Multivector& a, double alpha, double lambda) {
  const Multivector A = embed_euclidean(a, lambda).X;
  return rotor_exp(outer_product(A, n()), alpha);
}

Rotor special_conformal_rotor(const Multivector& a, double lambda) {
  require_scale(lambda, "special_conformal_rotor");
  const Multivector v = as_conformal_vector(a, "special_conformal_rotor");
  return Rotor(1.0 - nbar() * v / (2.0 * lambda));
}

ConformalPoint invert_point(const ConformalPoint& point) {
  return {-(e() * point.X * e()), point.scale};
}

double special_conformal_factor(const Multivector& x, const Multivector& a, double lambda) {
  require_scale(lambda, "special_conformal_factor");
  const Multivector xv = as_conformal_vector(x, "special_conformal_factor");
  const Multivector av = as_conformal_vector(a, "special_conformal_factor");
  const double l2 = lambda * lambda;
  return 1.0 + 2.0 * scalar_product(av, xv) / l2 + square(av) * square(xv) / (l2 * l2);
}

Multivector special_conformal_map(const Multivector& x, const Multivector& a, double lambda) {
  const double denom = special_conformal_factor(x, a, lambda);
  if (std::abs(denom) <= default_tolerance()) {
    throw std::domain_error("special_conformal_map: lambda^2 + a x is not invertible here");
  }
  const Multivector xv = as_conformal_vector(x, "special_conformal_map");
  const Multivector av = as_conformal_vector(a, "special_conformal_map");
  const Multivector image = (xv + (square(xv) / (lambda * lambda)) * av) / denom;
  return x.signature() == signature() ? image : lower(image);
}

ConformalLine line_through(const Multivector& r, const Multivector& direction) {
  const Multivector rv = as_conformal_vector(r, "line_through");
  const Multivector k = as_conformal_vector(direction, "line_through");
  if (k.is_zero(default_tolerance())) {
    throw std::invalid_argument("line_through: zero direction");
  }
  return {k * bivector_n() + outer_product(outer_product(rv, k), n())};
}

ConformalLine project_line(const ConformalLine& line, double tau) {
  const Multivector p = (gamma(0) + tau * n()) * pseudoscalar();
  const Multivector projected = line.L + p * line.L * p;
  if (projected.is_zero(default_tolerance() * std::max(1.0, line.L.max_abs()))) {
    throw std::domain_error("project_line: line is orthogonal to the hyperplane");
  }
  return {projected.grade(3)};
}

Multivector line_direction(const ConformalLine& line) {
  Multivector part(signature());
  for (Blade b = 0; b < line.L.size(); ++b) {
    if ((b & kE) && (b & kEbar)) part = part.with(b, line.L[b]);
  }
  return lower((part * bivector_n()).grade(1));
}

Multivector line_moment(const ConformalLine& line) {
  Multivector part(signature());
  for (Blade b = 0; b < line.L.size(); ++b) {
    if ((b & kE) && !(b & kEbar)) part = part.with(b, line.L[b]);
  }
  return lower((part * e()).grade(2));
}

bool line_passes_through(const ConformalLine& line, const Multivector& x, double tol) {
  const Multivector xs = x.signature() == signature() ? lower(x) : x;
  return approx_equal(outer_product(xs, line_direction(line)), line_moment(line), tol);
}

}  // namespace tga::conformal
