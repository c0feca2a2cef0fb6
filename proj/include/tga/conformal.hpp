#pragma once

#include "tga/multivector.hpp"

// Conformal geometric algebra Cl(2,4) over Minkowski space.
//
// Basis order (g0, g1, g2, g3, e, eb); spacetime multivectors embed by zero
// padding. Null directions n = e + eb, nbar = e - eb. Every map carries the
// fundamental length lambda explicitly (lambda = 1 is the usual choice).

namespace tga::conformal {

const Signature& signature();

const Multivector& e();
const Multivector& ebar();
/// e + eb, the point at infinity.
const Multivector& n();
/// e - eb.
const Multivector& nbar();
/// e eb.
const Multivector& bivector_n();
/// g0 g1 g2 g3 e eb.
const Multivector& pseudoscalar();
/// gamma_mu lifted into Cl(2,4).
const Multivector& gamma(int mu);

/// Cl(1,3) -> Cl(2,4) zero-padding embedding.
Multivector lift(const Multivector& sta);
/// Cl(2,4) -> Cl(1,3); throws std::invalid_argument on e/eb components.
Multivector lower(const Multivector& conformal);

/// Null vector X representing a point, with the length scale used to build it.
struct ConformalPoint {
  Multivector X;
  double scale;
};

/// X = (x^2 n + 2 lambda x - lambda^2 nbar) / (2 lambda^2).
/// x is a Cl(1,3) vector. Throws std::invalid_argument for lambda <= 0.
ConformalPoint embed_euclidean(const Multivector& x, double lambda = 1.0);
/// X = (x^2 n + 2 lambda x - lambda^2 nbar) / (lambda^2 - x^2).
/// Throws std::domain_error on the boundary x^2 = lambda^2.
ConformalPoint embed_hyperbolic(const Multivector& x, double lambda = 1.0);

/// Inverse of embed_euclidean: rescale X' = -X / (X.n), take the Minkowski part
/// and multiply by lambda. Throws std::domain_error when X.n = 0.
Multivector extract_euclidean(const ConformalPoint& point);
/// Spatial position u = sum_{k=1..3} lambda (X.g_k) g_k / (X.n); inverts
/// embed_hyperbolic for purely spatial points. Throws std::domain_error when
/// X.n = 0.
Multivector extract_hyperbolic(const ConformalPoint& point);

/// X == alpha Y for some nonzero alpha: both are normalised by their
/// largest-magnitude coefficient before comparing.
bool homogeneous_equal(const Multivector& x, const Multivector& y, double tol);

/// T_a = 1 + n a / (2 lambda).
Rotor translation_rotor(const Multivector& a, double lambda = 1.0);
/// T_x = (lambda + eb x) / sqrt(lambda^2 - x^2).  Throws std::domain_error
/// unless x^2 < lambda^2.
Rotor hyperbolic_translation_rotor(const Multivector& x, double lambda = 1.0);
/// T_a R reverse(T_a) for a Cl(1,3) rotor R.
Rotor rotation_about(const Multivector& a, const Rotor& spacetime_rotor, double lambda = 1.0);
/// D_alpha = exp(alpha N / 2).
Rotor dilation_rotor(double alpha);
/// exp(-alpha (A ^ n) / 2) with A = F_E(a / lambda).
Rotor dilation_about(const Multivector& a, double alpha, double lambda = 1.0);
/// K_a = 1 - nbar a / (2 lambda).
Rotor special_conformal_rotor(const Multivector& a, double lambda = 1.0);

/// Reflection in the e plane: -e X e.
ConformalPoint invert_point(const ConformalPoint& point);

/// Image of x under the special conformal transformation with parameter a:
///   x' = (x + x^2 a / lambda^2) / (1 + 2 a.x / lambda^2 + a^2 x^2 / lambda^4).
/// Throws std::domain_error where the denominator vanishes.
Multivector special_conformal_map(const Multivector& x, const Multivector& a,
                                  double lambda = 1.0);
/// The denominator of special_conformal_map; also the conformal factor
/// relating K_a F_E(x) reverse(K_a) to F_E(x').
double special_conformal_factor(const Multivector& x, const Multivector& a,
                                double lambda = 1.0);

/// Grade-3 line L = K e eb + r ^ K ^ n.
struct ConformalLine {
  Multivector L;
};

/// Line through r with direction K (both Cl(1,3) vectors).
/// Throws std::invalid_argument when K = 0.
ConformalLine line_through(const Multivector& r, const Multivector& direction);

/// L + P L P with P = (g0 + tau n) I6: the line projected into the
/// hyperplane t = tau. Throws std::domain_error if the projection vanishes.
ConformalLine project_line(const ConformalLine& line, double tau);

/// Direction K of a line: (part of L containing e eb) times e eb.
Multivector line_direction(const ConformalLine& line);
/// Moment bivector m = r ^ K read off the e-component of r ^ K ^ n.
Multivector line_moment(const ConformalLine& line);
/// x lies on the line: x ^ K = m within tol.
bool line_passes_through(const ConformalLine& line, const Multivector& x, double tol);

}  // namespace tga::conformal
