#pragma once

#include <Eigen/Core>
#include <variant>
#include <vector>

#include "tga/conformal.hpp"
#include "tga/multivector.hpp"
#include "tga/sta.hpp"
#include "tga/twistor.hpp"

// Geometry of twistors: the null ray of a null twistor, the Robinson
// congruence of a non-null twistor (tangent field, circles, d-lines) and the
// null ray recovered as an observable of the 6-d spinor.

namespace tga::congruence {

using Vec3 = Eigen::Vector3d;
using sta::FourSpinor;
using sta::PauliSpinor;
using twistor::Twistor;

// -- null twistors ---------------------------------------------------------

/// Null straight line r(h) = q + h p.
struct NullRay {
  Multivector q;     ///< intersection with the null cone at the origin
  Multivector p;     ///< null direction (the momentum)
  Multivector flagpole;  ///< K, flagpole of omega
  double beta;       ///< -I s3 {omega, pi}^*, real for null twistors

  Multivector point(double h) const { return q + h * p; }
};

/// beta = -I sigma_3 {omega, pi}^* for the Weyl parts of the spinor at the
/// origin. Its imaginary part equals the helicity, so it is real exactly for
/// null twistors.
sta::ComplexPair ray_beta(const Twistor& t);

/// Ray of a null twistor. Throws std::invalid_argument when |helicity| exceeds
/// helicity_tol and std::domain_error when beta = 0 (locus at infinity).
NullRay null_ray(const Twistor& t, double helicity_tol = 1e-8);

/// Ray found after re-basing the twistor at `base` (psi -> Z(base)), returned
/// in the original coordinates. beta depends on the base point; the ray does
/// not. `base` must lie off the ray.
NullRay null_ray_from(const Twistor& t, const Multivector& base, double helicity_tol = 1e-8);

/// Twistor at the origin built from (omega, pi) after rotating the phase of
/// omega so that {omega, pi} is purely imaginary, which makes it null.
/// Throws std::domain_error if {omega, pi} = 0.
Twistor null_twistor(const PauliSpinor& omega, const PauliSpinor& pi);

/// psi = -I s2 s (1 + s3)/2 + I s2 (1 - s3)/2 translated to r; helicity s.
Twistor example_twistor(double s, const Multivector& r);

// -- Robinson congruence ---------------------------------------------------

/// Intermediate objects of the tangent-field construction at one point.
struct TangentSample {
  Multivector flagpole;             ///< K of the primary part, Cl(1,3)
  conformal::ConformalLine line;    ///< K e eb + r ^ K ^ n
  conformal::ConformalLine projected;  ///< projected into t = tau
  Multivector direction;            ///< T_dir, Cl(1,3) vector
  Vec3 unit;                        ///< normalised spatial direction
};

/// Tangent construction at spatial point x on the hyperplane t = tau for the
/// example twistor of helicity s. Throws std::domain_error where the
/// flagpole or the projected line degenerates.
TangentSample tangent_sample(double s, double tau, const Vec3& x);
/// Unit tangent of the projected congruence at x.
Vec3 tangent_field(double s, double tau, const Vec3& x);
/// (v . grad) v along the normalised field, by a 5-point central stencil.
Vec3 field_acceleration(double s, double tau, const Vec3& x);
/// v . (curl v): sign gives the handedness of the twisting.
double field_twist(double s, double tau, const Vec3& x);

/// Checks made along an integrated arc before a circle is accepted.
struct CircleDiagnostics {
  double max_speed_error = 0.0;      ///< max | |v| - 1 |
  double max_orthogonality = 0.0;    ///< max |v . a| / |a|
  double accel_variation = 0.0;      ///< (max |a| - min |a|) / |a_0|
  double max_radial_error = 0.0;     ///< max | |x - c| - rho | / rho
  double max_plane_error = 0.0;      ///< max |(x - c) . normal| / rho
  int steps = 0;
};

struct CongruenceCircle {
  Vec3 center;
  double radius = 0.0;
  /// Relative bivector of the plane (a Cl(1,3) combination of I sigma_k), B^2 = -1.
  Multivector plane = Multivector(sta::signature());
  Vec3 seed;
  Vec3 tangent;   ///< v at the seed
  Vec3 inward;    ///< a / |a| at the seed
  double helicity = 0.0;
  double tau = 0.0;
  CircleDiagnostics diagnostics;

  /// c + R rho reverse(R), R = cos(theta/2) + B sin(theta/2); theta runs
  /// against the flow of the field.
  Vec3 point(double theta) const;
  /// Unit normal of the plane (dual of B).
  Vec3 normal() const;
};

struct CircleOptions {
  double relative_tolerance = 1e-6;  ///< acceptance for the arc checks
  double step_tolerance = 1e-9;      ///< local error per integration step
  double arc_fraction = 0.25;        ///< fraction of a turn integrated
};

/// Circle of the congruence through x0. Throws std::domain_error where the
/// acceleration vanishes (the straight axis line) and std::runtime_error when
/// the integrated arc is not planar, circular and of constant acceleration.
CongruenceCircle congruence_circle(const Vec3& x0, double s, double tau,
                                   const CircleOptions& options = {});

/// Scene parameters for tangent grids and torus families.
struct SceneConfig {
  double helicity = 0.5;
  double tau = 0.0;
  double torus_x = 1.0;  ///< N_x
  double torus_y = 1.0;  ///< N_y
  double torus_z = 0.0;  ///< N_z
  double phi_initial = 0.0;
  int family_count = 8;
  int samples_per_circle = 64;
  int grid_x = 5;
  int grid_y = 5;
  int grid_z = 5;
  double grid_extent = 1.0;  ///< grid spans [-extent, extent] per axis

  /// Throws std::invalid_argument for s = 0, negative counts or fewer than 3
  /// samples per circle. A zero family or grid count disables that part.
  void validate() const;
};

/// Seeds x = N_x cos(phi), y = N_y sin(phi), z = N_z for phi stepping over a
/// full turn from phi_initial.
std::vector<Vec3> torus_seeds(const SceneConfig& cfg);

/// One circle per seed, computed concurrently and returned in seed order.
/// Throws (std::runtime_error) if any member fails its checks.
std::vector<CongruenceCircle> torus_family(const SceneConfig& cfg,
                                           const CircleOptions& options = {});

/// Grid points of the tangent scene, x-major order.
std::vector<Vec3> grid_points(const SceneConfig& cfg);

/// Smallest distance between sampled points of two circles.
double min_sampled_distance(const CongruenceCircle& a, const CongruenceCircle& b, int samples);

// -- d-lines -----------------------------------------------------------------

struct DLine {
  std::vector<Vec3> points;  ///< translated samples (finite ones)
  std::vector<int> indices;  ///< input index of each kept sample
  int at_infinity = 0;       ///< samples sent to infinity by the translation
  Vec3 direction;            ///< best-fit direction through the origin
  double extent = 0.0;       ///< length of the covered segment
  double max_deviation = 0.0;  ///< max distance from the line through 0
  double max_angle = 0.0;      ///< max angular deviation (rad) of off-origin points
};

/// Hyperbolic embedding with lambda = |s| followed by the translation
/// T_{-u0} = (|s| - eb u0)/sqrt(s^2 - u0^2) of `origin_point` to the origin;
/// returns the recovered spatial positions (nullopt-free: points at infinity
/// are dropped and counted in `at_infinity`).
DLine translate_to_origin(const std::vector<Vec3>& points, const Vec3& origin_point, double s);

/// Samples the circle and translates its seed to the origin.
DLine to_dlines(const CongruenceCircle& circle, double s, int samples);

// -- the ray as an observable of the 6-d spinor ------------------------------

/// L_psi = (Psi I s3 reverse(Psi)) ^ n with Psi = psi W1 W2.
Multivector ray_observable(const FourSpinor& psi);
/// (M_0 ^ n + p e eb) / 2 from the spin bivector and momentum of psi.
Multivector ray_observable_expansion(const FourSpinor& psi);
/// q ^ p ^ n + p e eb.
conformal::ConformalLine ray_line(const NullRay& ray);

struct Translate {
  Multivector a;
};
struct Invert {};
using ObservableTransform = std::variant<Translate, Invert>;

/// Transforms the 6-d state (T_a Psi, or -e Psi I g1) and recomputes the
/// observable from it.
Multivector transform_observable(const FourSpinor& psi, const ObservableTransform& op);
/// T_a L reverse(T_a), acting on the observable directly.
Multivector translate_observable(const Multivector& observable, const Multivector& a);
/// -e [(Psi I s3 reverse(Psi)) ^ nbar] e.
Multivector inverted_observable(const FourSpinor& psi);
/// P = p / beta, where the inverted ray meets the null cone.
Multivector inverted_ray_point(const NullRay& ray);

}  // namespace tga::congruence
