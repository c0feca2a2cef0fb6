#include "tga/congruence.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tga/conformal_spinor.hpp"

namespace tga::congruence {

namespace {

namespace cga = tga::conformal;

Multivector relative_vector(const Vec3& x) {
  return x[0] * sta::sigma(1) + x[1] * sta::sigma(2) + x[2] * sta::sigma(3);
}

Vec3 from_relative(const Multivector& m) {
  return {scalar_product(m, sta::sigma(1)), scalar_product(m, sta::sigma(2)),
          scalar_product(m, sta::sigma(3))};
}

Multivector spatial_vector(const Vec3& x) { return sta::vector(0.0, x[0], x[1], x[2]); }

Vec3 spatial_components(const Multivector& v) {
  const auto c = sta::vector_components(v);
  return {c[1], c[2], c[3]};
}

Multivector rotate_phase(const Multivector& m, double theta) {
  return m * (std::cos(theta) + std::sin(theta) * sta::i_sigma(3));
}

// Step for the finite-difference stencils, scaled with the congruence.
double stencil_step(double s) { return 1e-3 * std::clamp(std::abs(s), 1e-3, 1.0); }

Vec3 directional_derivative(double s, double tau, const Vec3& x, const Vec3& dir) {
  const double h = stencil_step(s);
  const auto f = [&](double t) { return tangent_field(s, tau, x + t * dir); };
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
}

Multivector psi_example(double s) {
  const Multivector& is2 = sta::i_sigma(2);
  return -s * is2 * sta::projector_plus() + is2 * sta::projector_minus();
}

Multivector six_observable(const Multivector& upsilon, const Multivector& null_vector) {
  const Multivector m = upsilon * cga::lift(sta::i_sigma(3)) * upsilon.reverse();
  return outer_product(m, null_vector).grade(3);
}

}  // namespace

// -- null twistors ---------------------------------------------------------

sta::ComplexPair ray_beta(const Twistor& t) {
  const auto [omega, pi] = sta::weyl_parts(t.psi());
  return -sta::ComplexPair(0.0, 1.0) * std::conj(sta::spinor_inner_2(omega, pi));
}

NullRay null_ray(const Twistor& t, double helicity_tol) {
  const double s = twistor::helicity(t);
  if (std::abs(s) > helicity_tol) {
    throw std::invalid_argument("null_ray: twistor is not null (helicity " + std::to_string(s) +
                                ")");
  }
  const sta::ComplexPair beta = ray_beta(t);
  const auto [omega, pi] = sta::weyl_parts(t.psi());
  const Multivector k = sta::flagpole(omega);
  const double scale = std::max({1.0, k.max_abs(), omega.rho()});
  if (std::abs(beta.real()) <= default_tolerance() * scale) {
    throw std::domain_error("null_ray: beta = 0, the locus is the light cone at infinity");
  }
  return NullRay{k / beta.real(), twistor::momentum_from_psi(t), k, beta.real()};
}

NullRay null_ray_from(const Twistor& t, const Multivector& base, double helicity_tol) {
  const Twistor rebased(twistor::translated_spinor(t.psi(), base), sta::vector(0, 0, 0, 0));
  NullRay ray = null_ray(rebased, helicity_tol);
  ray.q += base;
  return ray;
}

Twistor null_twistor(const PauliSpinor& omega, const PauliSpinor& pi) {
  const sta::ComplexPair c = sta::spinor_inner_2(omega, pi);
  if (std::abs(c) <= default_tolerance()) {
    throw std::domain_error("null_twistor: {omega, pi} = 0");
  }
  const double theta = std::numbers::pi / 2 - std::arg(c);
  const PauliSpinor rotated(rotate_phase(omega.value(), theta));
  return Twistor(sta::four_spinor(rotated, pi), sta::vector(0, 0, 0, 0));
}

Twistor example_twistor(double s, const Multivector& r) {
  return Twistor(FourSpinor(psi_example(s)), r);
}

// -- Robinson congruence ---------------------------------------------------

TangentSample tangent_sample(double s, double tau, const Vec3& x) {
  const Multivector r = sta::vector(tau, x[0], x[1], x[2]);
  const Twistor t = example_twistor(s, r);
  const Multivector omega_p = twistor::primary_part(t).value();
  const Multivector k = (omega_p * sta::gamma(0) * omega_p.reverse()).grade(1);
  if (k.is_zero(default_tolerance() * std::max(1.0, std::abs(s)))) {
    throw std::domain_error("tangent_field: flagpole vanishes at this point");
  }
  const cga::ConformalLine line = cga::line_through(r, k);
  const cga::ConformalLine projected = cga::project_line(line, tau);

  const Multivector rc = cga::lift(r);
  const Multivector bo = 1.0 - 0.5 * cga::n() * rc;
  const Multivector dir6 = (bo * projected.L * bo.reverse() * cga::bivector_n()).grade(1);
  const Multivector direction = cga::lower(dir6);
  const Vec3 spatial = spatial_components(direction);
  const double norm = spatial.norm();
  if (norm <= default_tolerance() * std::max(1.0, k.max_abs())) {
    throw std::domain_error("tangent_field: projected direction vanishes");
  }
  return TangentSample{k, line, projected, direction, spatial / norm};
}

Vec3 tangent_field(double s, double tau, const Vec3& x) {
  return tangent_sample(s, tau, x).unit;
}

Vec3 field_acceleration(double s, double tau, const Vec3& x) {
  return directional_derivative(s, tau, x, tangent_field(s, tau, x));
}

double field_twist(double s, double tau, const Vec3& x) {
  Eigen::Matrix3d jac;
  for (int j = 0; j < 3; ++j) {
    jac.col(j) = directional_derivative(s, tau, x, Vec3::Unit(j));
  }
  const Vec3 curl(jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0), jac(1, 0) - jac(0, 1));
  return tangent_field(s, tau, x).dot(curl);
}

Vec3 CongruenceCircle::point(double theta) const {
  const Multivector rho = relative_vector(seed - center);
  const Multivector rot = std::cos(theta / 2) + std::sin(theta / 2) * plane;
  return center + from_relative((rot * rho * rot.reverse()).grade(2));
}

Vec3 CongruenceCircle::normal() const {
  Vec3 out;
  for (int k = 1; k <= 3; ++k) out[k - 1] = -scalar_product(plane, sta::i_sigma(k));
  return out;
}

CongruenceCircle congruence_circle(const Vec3& x0, double s, double tau,
                                   const CircleOptions& options) {
  if (s == 0.0) {
    throw std::invalid_argument("congruence_circle: helicity must be nonzero");
  }
  const Vec3 v0 = tangent_field(s, tau, x0);
  const Vec3 a0 = field_acceleration(s, tau, x0);
  const double accel = a0.norm();
  if (accel <= 1e-8) {
    throw std::domain_error("congruence_circle: zero acceleration (straight axis line)");
  }

  CongruenceCircle c;
  c.radius = 1.0 / accel;
  c.center = x0 + a0 / (accel * accel);
  c.seed = x0;
  c.tangent = v0;
  c.inward = a0 / accel;
  c.helicity = s;
  c.tau = tau;
  const Multivector vr = relative_vector(v0);
  const Multivector ar = relative_vector(c.inward);
  c.plane = (0.5 * (vr * ar - ar * vr)).grade(2);
  c.plane = c.plane / std::sqrt(-scalar_product(c.plane, c.plane));

  // Integrate dx/dmu = v over the requested arc and check the motion stays
  // on the predicted circle with constant acceleration.
  const Vec3 normal = c.normal();
  CircleDiagnostics& d = c.diagnostics;
  double amin = accel;
  double amax = accel;
  const auto check = [&](const Vec3& x) {
    const Vec3 v = tangent_field(s, tau, x);
    const Vec3 a = directional_derivative(s, tau, x, v);
    const double an = a.norm();
    d.max_speed_error = std::max(d.max_speed_error, std::abs(v.norm() - 1.0));
    d.max_orthogonality = std::max(d.max_orthogonality, std::abs(v.dot(a)) / an);
    amin = std::min(amin, an);
    amax = std::max(amax, an);
    d.max_radial_error =
        std::max(d.max_radial_error, std::abs((x - c.center).norm() - c.radius) / c.radius);
    d.max_plane_error =
        std::max(d.max_plane_error, std::abs((x - c.center).dot(normal)) / c.radius);
  };
  const auto rk4 = [&](const Vec3& x, double h) {
    const Vec3 k1 = tangent_field(s, tau, x);
    const Vec3 k2 = tangent_field(s, tau, x + 0.5 * h * k1);
    const Vec3 k3 = tangent_field(s, tau, x + 0.5 * h * k2);
    const Vec3 k4 = tangent_field(s, tau, x + h * k3);
    return Vec3(x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  };

  const double arc = options.arc_fraction * 2.0 * std::numbers::pi * c.radius;
  double h = 0.05 * c.radius;
  double mu = 0.0;
  Vec3 x = x0;
  check(x);
  while (mu < arc * (1.0 - 1e-12)) {
    h = std::min(h, arc - mu);
    const Vec3 full = rk4(x, h);
    const Vec3 half = rk4(rk4(x, 0.5 * h), 0.5 * h);
    const double err = (half - full).norm() / 15.0;
    if (err > options.step_tolerance * std::max(1.0, c.radius) && h > 1e-8 * c.radius) {
      h *= std::max(0.2, 0.9 * std::pow(options.step_tolerance / err, 0.2));
      continue;
    }
    x = half + (half - full) / 15.0;
    mu += h;
    ++d.steps;
    check(x);
    if (err > 0.0) {
      h *= std::min(4.0, 0.9 * std::pow(options.step_tolerance / err, 0.2));
    } else {
      h *= 4.0;
    }
  }
  d.accel_variation = (amax - amin) / accel;

  const double tol = options.relative_tolerance;
  if (d.max_speed_error > tol || d.max_orthogonality > tol || d.accel_variation > tol ||
      d.max_radial_error > tol || d.max_plane_error > tol) {
    throw std::runtime_error(
        "congruence_circle: integrated arc is not a circle (radial " +
        std::to_string(d.max_radial_error) + ", plane " + std::to_string(d.max_plane_error) +
        ", accel " + std::to_string(d.accel_variation) + ")");
  }
  return c;
}

void SceneConfig::validate() const {
  if (helicity == 0.0 || !std::isfinite(helicity)) {
    throw std::invalid_argument("scene: helicity must be nonzero (use a null ray instead)");
  }
  if (!std::isfinite(tau)) throw std::invalid_argument("scene: tau must be finite");
  if (family_count < 0) throw std::invalid_argument("scene: family count must be non-negative");
  if (samples_per_circle < 3) throw std::invalid_argument("scene: need at least 3 samples");
  if (grid_x < 0 || grid_y < 0 || grid_z < 0) {
    throw std::invalid_argument("scene: grid counts must be non-negative");
  }
  if (!(grid_extent > 0.0)) throw std::invalid_argument("scene: grid extent must be positive");
}

std::vector<Vec3> torus_seeds(const SceneConfig& cfg) {
  std::vector<Vec3> seeds;
  seeds.reserve(cfg.family_count);
  for (int j = 0; j < cfg.family_count; ++j) {
    const double phi = cfg.phi_initial + 2.0 * std::numbers::pi * j / cfg.family_count;
    seeds.emplace_back(cfg.torus_x * std::cos(phi), cfg.torus_y * std::sin(phi), cfg.torus_z);
  }
  return seeds;
}

std::vector<CongruenceCircle> torus_family(const SceneConfig& cfg,
                                           const CircleOptions& options) {
  cfg.validate();
  const std::vector<Vec3> seeds = torus_seeds(cfg);
  std::vector<std::future<CongruenceCircle>> jobs;
  jobs.reserve(seeds.size());
  for (const Vec3& seed : seeds) {
    jobs.push_back(std::async(std::launch::async, [&cfg, &options, seed] {
      return congruence_circle(seed, cfg.helicity, cfg.tau, options);
    }));
  }
  std::vector<CongruenceCircle> out;
  out.reserve(seeds.size());
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    try {
      out.push_back(jobs[j].get());
    } catch (const std::exception& ex) {
      for (std::size_t k = j + 1; k < jobs.size(); ++k) jobs[k].wait();
      throw std::runtime_error("torus_family: member " + std::to_string(j) + " rejected: " +
                               ex.what());
    }
  }
  return out;
}

std::vector<Vec3> grid_points(const SceneConfig& cfg) {
  const auto axis = [&](int count, int i) {
    return count == 1 ? 0.0 : cfg.grid_extent * (-1.0 + 2.0 * i / (count - 1));
  };
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(cfg.grid_x) * cfg.grid_y * cfg.grid_z);
  for (int i = 0; i < cfg.grid_x; ++i) {
    for (int j = 0; j < cfg.grid_y; ++j) {
      for (int k = 0; k < cfg.grid_z; ++k) {
        out.emplace_back(axis(cfg.grid_x, i), axis(cfg.grid_y, j), axis(cfg.grid_z, k));
      }
    }
  }
  return out;
}

double min_sampled_distance(const CongruenceCircle& a, const CongruenceCircle& b, int samples) {
  std::vector<Vec3> pa;
  std::vector<Vec3> pb;
  for (int j = 0; j < samples; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / samples;
    pa.push_back(a.point(theta));
    pb.push_back(b.point(theta));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Vec3& p : pa) {
    for (const Vec3& q : pb) best = std::min(best, (p - q).norm());
  }
  return best;
}

// -- d-lines -----------------------------------------------------------------

DLine translate_to_origin(const std::vector<Vec3>& points, const Vec3& origin_point, double s) {
  if (s == 0.0) throw std::invalid_argument("translate_to_origin: helicity must be nonzero");
  const double lambda = std::abs(s);
  const Rotor t = cga::hyperbolic_translation_rotor(spatial_vector(-origin_point), lambda);

  DLine out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec3& p = points[i];
    const cga::ConformalPoint x = cga::embed_hyperbolic(spatial_vector(p), lambda);
    const cga::ConformalPoint moved{t.apply(x.X), lambda};
    const double xn = scalar_product(moved.X, cga::n());
    if (std::abs(xn) <= 1e-9 * moved.X.max_abs()) {
      ++out.at_infinity;
      continue;
    }
    out.points.push_back(spatial_components(cga::extract_hyperbolic(moved)));
    out.indices.push_back(static_cast<int>(i));
  }

  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  for (const Vec3& p : out.points) scatter += p * p.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(scatter);
  out.direction = eig.eigenvectors().col(2);

  double lo = 0.0;
  double hi = 0.0;
  double far = 0.0;
  for (const Vec3& p : out.points) far = std::max(far, p.norm());
  for (const Vec3& p : out.points) {
    const double along = p.dot(out.direction);
    lo = std::min(lo, along);
    hi = std::max(hi, along);
    const double dev = (p - along * out.direction).norm();
    out.max_deviation = std::max(out.max_deviation, dev);
    if (p.norm() > 1e-6 * far) {
      out.max_angle = std::max(out.max_angle, std::asin(std::min(1.0, dev / p.norm())));
    }
  }
  out.extent = hi - lo;
  return out;
}

DLine to_dlines(const CongruenceCircle& circle, double s, int samples) {
  if (samples < 3) throw std::invalid_argument("to_dlines: need at least 3 samples");
  std::vector<Vec3> pts;
  pts.reserve(samples);
  for (int j = 0; j < samples; ++j) {
    pts.push_back(circle.point(2.0 * std::numbers::pi * j / samples));
  }
  return translate_to_origin(pts, circle.seed, s);
}

// -- the ray as an observable of the 6-d spinor ------------------------------

Multivector ray_observable(const FourSpinor& psi) {
  return six_observable(conformal_spinor::lift(psi).value(), cga::n());
}

Multivector ray_observable_expansion(const FourSpinor& psi) {
  const Twistor t(psi, sta::vector(0, 0, 0, 0));
  const Multivector m0 = cga::lift(sta::spin_bivector(psi));
  const Multivector p = cga::lift(twistor::momentum_from_psi(t));
  return 0.5 * (outer_product(m0, cga::n()) + p * cga::bivector_n());
}

cga::ConformalLine ray_line(const NullRay& ray) { return cga::line_through(ray.q, ray.p); }

Multivector transform_observable(const FourSpinor& psi, const ObservableTransform& op) {
  const conformal_spinor::SixSpinor upsilon = conformal_spinor::lift(psi);
  if (const auto* tr = std::get_if<Translate>(&op)) {
    const Rotor t = cga::translation_rotor(tr->a);
    return six_observable(t.value() * upsilon.value(), cga::n());
  }
  return six_observable(conformal_spinor::invert(upsilon).value(), cga::n());
}

Multivector translate_observable(const Multivector& observable, const Multivector& a) {
  return cga::translation_rotor(a).apply(observable).grade(3);
}

Multivector inverted_observable(const FourSpinor& psi) {
  const Multivector inner = six_observable(conformal_spinor::lift(psi).value(), cga::nbar());
  return (-(cga::e() * inner * cga::e())).grade(3);
}

Multivector inverted_ray_point(const NullRay& ray) {
  if (ray.beta == 0.0) throw std::domain_error("inverted_ray_point: beta = 0");
  return ray.p / ray.beta;
}

}  // namespace tga::congruence
