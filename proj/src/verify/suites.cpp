#include "tga/verify/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <Eigen/Geometry>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tga/conformal.hpp"
#include "tga/conformal_spinor.hpp"
#include "tga/congruence.hpp"
#include "tga/multivector.hpp"
#include "tga/sta.hpp"
#include "tga/twistor.hpp"
#include "tga/verify/oracle.hpp"

namespace tga::verify {

namespace {

namespace cga = tga::conformal;
namespace cs = tga::conformal_spinor;
namespace cg = tga::congruence;
using sta::FourSpinor;
using sta::PauliSpinor;
using twistor::Twistor;

constexpr double kPi = std::numbers::pi;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  Multivector multivector(const Signature& sig) {
    Multivector m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b) m = m.with(b, uniform());
    return m;
  }

  Multivector sta_vector() { return sta::vector(uniform(), uniform(), uniform(), uniform()); }

  FourSpinor four_spinor() {
    Multivector m(sta::signature());
    for (Blade b = 0; b < 16; ++b) {
      if (blade_grade(b) % 2 == 0) m = m.with(b, uniform());
    }
    return FourSpinor(m);
  }

  PauliSpinor pauli() {
    return PauliSpinor::from_coefficients(uniform(), uniform(), uniform(), uniform());
  }

  Twistor twistor() { return Twistor(four_spinor(), sta_vector()); }

  Twistor null_twistor() { return cg::null_twistor(pauli(), pauli()); }

  Rotor sta_rotor() {
    const Multivector b1 = outer_product(sta_vector(), sta_vector());
    const Multivector b2 = outer_product(sta_vector(), sta_vector());
    return rotor_exp(b1, uniform()) * rotor_exp(b2, uniform());
  }

 private:
  std::mt19937_64 rng_;
};

class Collector {
 public:
  Collector(std::string suite, std::vector<Check>& out) : suite_(std::move(suite)), out_(out) {}

  void upper(const std::string& name, double measured, double tol, int samples,
             int criterion = 0) {
    out_.push_back(Check{suite_, name, std::isfinite(measured) && measured <= tol, measured,
                         tol, false, samples, criterion});
  }

  void lower(const std::string& name, double measured, double bound, int samples,
             int criterion = 0) {
    out_.push_back(Check{suite_, name, std::isfinite(measured) && measured > bound, measured,
                         bound, true, samples, criterion});
  }

  /// Runs a check body; an exception counts as a failure with infinite residual.
  void guarded(const std::string& name, double tol, int criterion,
               const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception&) {
      out_.push_back(Check{suite_, name, false, std::numeric_limits<double>::infinity(), tol,
                           false, 0, criterion});
    }
  }

 private:
  std::string suite_;
  std::vector<Check>& out_;
};

double worst(double acc, double value) { return std::isnan(value) ? value : std::max(acc, value); }

// -- algebra -------------------------------------------------------------------

void algebra_suite(Draw& draw, Collector& c) {
  const double tol = default_tolerance();
  constexpr int kTriples = 1000;
  for (const Signature& sig : {Signature::spacetime(), Signature::conformal()}) {
    const std::string tag = sig == Signature::spacetime() ? "cl13" : "cl24";
    double assoc = 0.0;
    double distrib = 0.0;
    for (int i = 0; i < kTriples; ++i) {
      const Multivector a = draw.multivector(sig);
      const Multivector b = draw.multivector(sig);
      const Multivector d = draw.multivector(sig);
      assoc = worst(assoc, max_abs_diff((a * b) * d, a * (b * d)));
      distrib = worst(distrib, max_abs_diff(a * (b + d), a * b + a * d));
      distrib = worst(distrib, max_abs_diff((a + b) * d, a * d + b * d));
    }
    c.upper("associativity." + tag, assoc, tol, kTriples, 1);
    c.upper("distributivity." + tag, distrib, tol, kTriples, 1);

    const MatrixOracle oracle(sig);
    double oracle_err = 0.0;
    for (int i = 0; i < kTriples; ++i) {
      const Multivector a = draw.multivector(sig);
      const Multivector b = draw.multivector(sig);
      const Eigen::MatrixXcd lhs = oracle.represent(a * b);
      const Eigen::MatrixXcd rhs = oracle.represent(a) * oracle.represent(b);
      oracle_err = worst(oracle_err, (lhs - rhs).cwiseAbs().maxCoeff());
      oracle_err = worst(oracle_err, std::abs(oracle.scalar_part(rhs) - scalar_product(a, b)));
    }
    c.upper("matrix_oracle." + tag, oracle_err, 1e-9, kTriples, 1);
  }

  // Defining relations, compared exactly.
  double metric = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const double eta = mu != nu ? 0.0 : mu == 0 ? 1.0 : -1.0;
      const Multivector anti = 0.5 * (sta::gamma(mu) * sta::gamma(nu) + sta::gamma(nu) * sta::gamma(mu));
      metric = worst(metric, max_abs_diff(anti, sta::scalar(eta)));
    }
  }
  c.upper("metric.spacetime", metric, 0.0, 16, 2);

  double pauli = 0.0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      Multivector expected = sta::scalar(i == j ? 1.0 : 0.0);
      if (i != j) {
        const int k = 6 - i - j;
        const double eps = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
        expected += eps * sta::i_sigma(k);
      }
      pauli = worst(pauli, max_abs_diff(sta::sigma(i) * sta::sigma(j), expected));
    }
  }
  c.upper("pauli_relations", pauli, 0.0, 9, 2);

  const double pseudo = std::max(max_abs_diff(sta::pseudoscalar() * sta::pseudoscalar(), sta::scalar(-1.0)),
                                 max_abs_diff(cga::pseudoscalar() * cga::pseudoscalar(),
                                              Multivector::scalar(cga::signature(), -1.0)));
  c.upper("pseudoscalar_squares", pseudo, 0.0, 2);

  double norm = 0.0;
  constexpr int kRotors = 200;
  for (int i = 0; i < kRotors; ++i) {
    const Rotor r = draw.sta_rotor();
    norm = worst(norm, max_abs_diff(r.value() * r.value().reverse(), sta::scalar(1.0)));
  }
  c.upper("rotor_normalization.spacetime", norm, tol, kRotors);
}

// -- conformal -----------------------------------------------------------------

void conformal_suite(Draw& draw, Collector& c) {
  const double tol = default_tolerance();
  constexpr int kDraws = 500;
  const auto F = [](const Multivector& x) { return cga::embed_euclidean(x).X; };

  double null = 0.0;
  double trans = 0.0;
  double dil = 0.0;
  double dil_about = 0.0;
  double sct = 0.0;
  double inv = 0.0;
  double k_from_t = 0.0;
  double infinity = 0.0;
  double rotor_norm = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const Multivector x = draw.sta_vector();
    const Multivector a = draw.sta_vector();
    const double alpha = draw.uniform();
    const Multivector X = F(x);
    null = worst(null, std::abs(scalar_product(X, X)));
    null = worst(null, std::abs(scalar_product(X, cga::n()) + 1.0));

    const Rotor t = cga::translation_rotor(a);
    trans = worst(trans, max_abs_diff(t.apply(X), F(x + a)));
    infinity = worst(infinity, max_abs_diff(t.apply(cga::n()), cga::n()));

    const Rotor d = cga::dilation_rotor(alpha);
    dil = worst(dil, max_abs_diff(std::exp(-alpha) * d.apply(X), F(std::exp(-alpha) * x)));
    dil_about = worst(dil_about, max_abs_diff((t * d * t.reverse()).value(),
                                              cga::dilation_about(a, alpha).value()));

    const double factor = cga::special_conformal_factor(x, a);
    if (std::abs(factor) > 0.05) {
      const Rotor k = cga::special_conformal_rotor(a);
      sct = worst(sct, max_abs_diff(k.apply(X), factor * F(cga::special_conformal_map(x, a))));
    }
    k_from_t = worst(k_from_t, max_abs_diff(cga::e() * t.value() * cga::e(),
                                            cga::special_conformal_rotor(a).value()));

    const double x2 = scalar_product(x, x);
    if (std::abs(x2) > 0.05) {
      const Multivector lhs = cga::invert_point({X, 1.0}).X;
      inv = worst(inv, max_abs_diff(lhs, x2 * F(x / x2)));
    }

    for (const Rotor& r : {t, d, cga::special_conformal_rotor(a), cga::dilation_about(a, alpha)}) {
      rotor_norm = worst(rotor_norm, max_abs_diff(r.value() * r.value().reverse(),
                                                  Multivector::scalar(cga::signature(), 1.0)));
    }
  }
  c.upper("embedding_null", null, tol, kDraws);
  c.upper("translation_covariance", trans, tol, kDraws, 3);
  c.upper("translation_fixes_infinity", infinity, 0.0, kDraws, 3);
  c.upper("dilation_covariance", dil, tol, kDraws, 3);
  c.upper("dilation_about_point", dil_about, tol, kDraws);
  c.upper("special_conformal_covariance", sct, tol, kDraws, 3);
  c.upper("special_conformal_from_translation", k_from_t, tol, kDraws);
  c.upper("inversion", inv, tol, kDraws);
  c.upper("rotor_normalization.conformal", rotor_norm, tol, kDraws);

  // Hyperbolic model: spatial points inside the ball |u| < lambda = 1.
  double roundtrip = 0.0;
  double hyper_norm = 0.0;
  int non_commuting = 0;
  for (int i = 0; i < kDraws; ++i) {
    const auto inside = [&] {
      const double r = 0.9 * std::cbrt(std::abs(draw.uniform()));
      const double th = kPi * std::abs(draw.uniform());
      const double ph = kPi * draw.uniform();
      return sta::vector(0.0, r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                         r * std::cos(th));
    };
    const Multivector u = inside();
    const Multivector w = inside();
    roundtrip = worst(roundtrip, max_abs_diff(cga::extract_hyperbolic(cga::embed_hyperbolic(u)), u));
    const Rotor tu = cga::hyperbolic_translation_rotor(u);
    const Rotor tw = cga::hyperbolic_translation_rotor(w);
    hyper_norm = worst(hyper_norm, max_abs_diff(tu.value() * tu.value().reverse(),
                                                Multivector::scalar(cga::signature(), 1.0)));
    if (max_abs_diff((tu * tw).value(), (tw * tu).value()) > 1e-6) ++non_commuting;
  }
  c.upper("hyperbolic_roundtrip", roundtrip, 1e-9, kDraws);
  c.upper("rotor_normalization.hyperbolic", hyper_norm, 1e-9, kDraws);
  c.lower("hyperbolic_translations_noncommuting", non_commuting, kDraws - 1.0, kDraws);
}

// -- spinor representation -----------------------------------------------------

void spinor_suite(Draw& draw, Collector& c) {
  const double tol = default_tolerance();
  constexpr int kDraws = 200;
  const auto L = [](const FourSpinor& z) { return cs::lift(z).value(); };

  double trans = 0.0;
  double rot = 0.0;
  double dil = 0.0;
  double sct = 0.0;
  double inversion = 0.0;
  double chain = 0.0;
  double chain6 = 0.0;
  double unlift = 0.0;
  double opposite = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kDraws; ++i) {
    const FourSpinor z = draw.four_spinor();
    const Multivector a = draw.sta_vector();
    const double alpha = draw.uniform();
    const Rotor r = draw.sta_rotor();
    const Multivector lz = L(z);

    trans = worst(trans, max_abs_diff(cga::translation_rotor(a).value() * lz, L(cs::spin_translate(z, a))));
    rot = worst(rot, max_abs_diff(cga::lift(r.value()) * lz, L(cs::spin_rotate(z, r))));
    dil = worst(dil, max_abs_diff(cga::dilation_rotor(alpha).value() * lz, L(cs::spin_dilate(z, alpha))));
    sct = worst(sct, max_abs_diff(cga::special_conformal_rotor(a).value() * lz,
                                  L(cs::spin_special_conformal(z, a))));
    inversion = worst(inversion, max_abs_diff(cs::invert(cs::lift(z)).value(), L(cs::spin_invert(z))));
    unlift = worst(unlift, max_abs_diff(cs::unlift(cs::lift(z)).value(), z.value()));

    // Inversion, translation, inversion gives -K_a, not K_a.
    const Multivector k = cs::spin_special_conformal(z, a).value();
    const Multivector composed = cs::spin_invert(cs::spin_translate(cs::spin_invert(z), a)).value();
    chain = worst(chain, max_abs_diff(composed, -k));
    opposite = std::min(opposite, max_abs_diff(composed, k) / std::max(1e-300, k.max_abs()));
    const cs::SixSpinor six =
        cs::invert(cs::act(cga::translation_rotor(a).value(), cs::invert(cs::lift(z))));
    chain6 = worst(chain6, max_abs_diff(six.value(), -(cga::special_conformal_rotor(a).value() * lz)));
  }
  c.upper("translation", trans, tol, kDraws, 4);
  c.upper("rotation", rot, tol, kDraws, 4);
  c.upper("dilation", dil, tol, kDraws, 4);
  c.upper("special_conformal", sct, tol, kDraws, 4);
  c.upper("inversion", inversion, tol, kDraws);
  c.upper("unlift_roundtrip", unlift, tol, kDraws);
  c.upper("inversion_chain_is_minus_k", chain, tol, kDraws, 4);
  c.upper("inversion_chain_6d_is_minus_k", chain6, tol, kDraws, 4);
  c.lower("inversion_chain_differs_from_plus_k", opposite, 1e-3, kDraws, 4);

  constexpr int kSpinors = 100;
  std::vector<FourSpinor> psis;
  for (int i = 0; i < kSpinors; ++i) psis.push_back(draw.four_spinor());
  for (const auto kind : {cs::BivectorKind::kE, cs::BivectorKind::kEbar}) {
    for (int mu = 0; mu < 4; ++mu) {
      double err = 0.0;
      for (const FourSpinor& psi : psis) {
        err = worst(err, max_abs_diff(cs::generator(kind, mu) * L(psi),
                                      L(cs::bivector_action(kind, mu, psi))));
      }
      const std::string tag = kind == cs::BivectorKind::kE ? "e" : "ebar";
      c.upper("bivector_map." + tag + "_gamma" + std::to_string(mu), err, tol, kSpinors, 5);
    }
  }
}

// -- twistors ------------------------------------------------------------------

void twistor_suite(Draw& draw, Collector& c) {
  const double tol = default_tolerance();

  double helicity = 0.0;
  for (double s : {-10.0, -0.5, 0.5, 10.0}) {
    for (int i = 0; i < 4; ++i) {
      const Multivector r = i == 0 ? sta::vector(0, 0, 0, 0) : draw.sta_vector();
      helicity = worst(helicity, std::abs(twistor::helicity(cg::example_twistor(s, r)) - s));
    }
  }
  c.upper("example_helicity", helicity, 1e-12, 16, 6);

  constexpr int kDraws = 100;
  const std::array<double, 8> thetas = {0.3, 0.9, 1.7, 2.2, 3.1, 4.0, 5.3, 6.1};
  double p_null = 0.0;
  double forms = 0.0;
  double decomposition = 0.0;
  double pl = 0.0;
  double pl_dual = 0.0;
  double phase = 0.0;
  double imaginary = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const Twistor t = draw.twistor();
    const twistor::Observables obs = twistor::observables(t);
    p_null = worst(p_null, std::abs(scalar_product(obs.momentum, obs.momentum)));
    forms = worst(forms, max_abs_diff(obs.momentum, twistor::momentum_from_pi(t)));
    forms = worst(forms, max_abs_diff(obs.momentum, twistor::momentum_from_psi(t)));
    decomposition = worst(decomposition, max_abs_diff(obs.angular_momentum,
                                                      twistor::angular_momentum_decomposed(t)));
    pl = worst(pl, max_abs_diff(obs.pauli_lubanski, obs.helicity * obs.momentum));
    pl_dual = worst(pl_dual, max_abs_diff(twistor::pauli_lubanski_dual(t), obs.pauli_lubanski));
    imaginary = worst(imaginary, std::abs(twistor::helicity_projection(t).imag()));
    for (double theta : thetas) {
      const twistor::Observables rotated = twistor::observables(twistor::with_phase(t, theta));
      phase = worst(phase, std::abs(rotated.helicity - obs.helicity));
      phase = worst(phase, max_abs_diff(rotated.momentum, obs.momentum));
      phase = worst(phase, max_abs_diff(rotated.angular_momentum, obs.angular_momentum));
      phase = worst(phase, max_abs_diff(rotated.pauli_lubanski, obs.pauli_lubanski));
    }
  }
  c.upper("momentum_null", p_null, tol, kDraws, 6);
  c.upper("momentum_forms_agree", forms, tol, kDraws, 6);
  c.upper("angular_momentum_decomposition", decomposition, tol, kDraws, 6);
  c.upper("pauli_lubanski_is_s_p", pl, tol, kDraws, 6);
  c.upper("pauli_lubanski_dual_form", pl_dual, tol, kDraws, 6);
  c.upper("phase_invariance", phase, tol, kDraws * static_cast<int>(thetas.size()), 6);
  c.upper("helicity_projection_imaginary_part", imaginary, tol, kDraws);
}

// -- geometry ------------------------------------------------------------------

std::vector<Twistor> null_set(Draw& draw, int count) {
  std::vector<Twistor> out;
  while (static_cast<int>(out.size()) < count) {
    const Twistor t = draw.null_twistor();
    if (std::abs(cg::ray_beta(t).real()) > 1e-3) out.push_back(t);
  }
  return out;
}

void null_ray_checks(Draw& draw, Collector& c, const std::vector<Twistor>& set) {
  double vanish = 0.0;
  double q_null = 0.0;
  double annihilation = 0.0;
  double rescale = 0.0;
  double base_point = 0.0;
  double beta_spread = 0.0;
  for (const Twistor& t : set) {
    const cg::NullRay ray = cg::null_ray(t);
    for (int j = 0; j <= 8; ++j) {
      const double h = -2.0 + 0.5 * j;
      const Twistor at(t.psi(), ray.point(h));
      vanish = worst(vanish, twistor::primary_part(at).value().max_abs());
    }
    q_null = worst(q_null, std::abs(scalar_product(ray.q, ray.q)));

    const auto [omega, pi] = sta::weyl_parts(t.psi());
    const Multivector factor =
        pi.value() * sta::sigma(2) * sta::projector_minus() * omega.value().reverse();
    annihilation = worst(annihilation, (ray.p * factor).max_abs());

    const double lambda = 0.3 + 2.0 * std::abs(draw.uniform());
    const cg::NullRay scaled = cg::null_ray(Twistor(lambda * t.psi(), t.position()));
    rescale = worst(rescale, max_abs_diff(scaled.q, ray.q));
    rescale = worst(rescale, max_abs_diff(scaled.p / (lambda * lambda), ray.p));

    // Re-basing off the ray changes beta but not the ray.
    const Multivector base = ray.q + draw.sta_vector();
    const cg::NullRay moved = cg::null_ray_from(t, base);
    const Twistor on(t.psi(), moved.q);
    base_point = worst(base_point, twistor::primary_part(on).value().max_abs());
    beta_spread = worst(beta_spread, std::abs(moved.beta - ray.beta));
  }
  const int n = static_cast<int>(set.size());
  c.upper("null_ray.primary_part_vanishes", vanish, 1e-9, n * 9, 7);
  c.upper("null_ray.q_on_null_cone", q_null, default_tolerance(), n, 7);
  c.upper("null_ray.momentum_annihilates", annihilation, default_tolerance(), n, 7);
  c.upper("null_ray.rescaling_invariance", rescale, 1e-9, n, 7);
  c.upper("null_ray.base_point_independent", base_point, 1e-9, n);
  c.lower("null_ray.beta_depends_on_base_point", beta_spread, 0.0, n);
}

void observable_checks(Draw& draw, Collector& c, const std::vector<Twistor>& set) {
  const double tol = default_tolerance();
  constexpr int kDraws = 200;
  double expansion = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const FourSpinor psi = draw.four_spinor();
    expansion = worst(expansion, max_abs_diff(cg::ray_observable(psi),
                                              cg::ray_observable_expansion(psi)));
  }
  c.upper("observable.expansion", expansion, tol, kDraws, 10);

  double doubled = 0.0;
  double translated = 0.0;
  double rotor_route = 0.0;
  double inverted = 0.0;
  double inverted_direct = 0.0;
  for (const Twistor& t : set) {
    const cg::NullRay ray = cg::null_ray(t);
    const Multivector l_psi = cg::ray_observable(t.psi());
    doubled = worst(doubled, max_abs_diff(cg::ray_line(ray).L, 2.0 * l_psi));

    const Multivector a = draw.sta_vector();
    const Multivector moved = 2.0 * cg::transform_observable(t.psi(), cg::Translate{a});
    const cga::ConformalLine line{moved};
    translated = worst(translated, max_abs_diff(moved, cga::line_through(ray.q + a, ray.p).L));
    translated = worst(translated, max_abs_diff(cga::line_direction(line), ray.p));
    translated = worst(translated, line_passes_through(line, ray.q + a, 1e-9) ? 0.0 : 1.0);
    rotor_route = worst(rotor_route, max_abs_diff(moved, 2.0 * cg::translate_observable(l_psi, a)));

    const Multivector inv = 2.0 * cg::transform_observable(t.psi(), cg::Invert{});
    const cga::ConformalLine inv_line{inv};
    const Multivector P = cg::inverted_ray_point(ray);
    inverted = worst(inverted, max_abs_diff(inv, cga::line_through(P, ray.flagpole).L));
    inverted = worst(inverted, max_abs_diff(cga::line_direction(inv_line), ray.flagpole));
    inverted = worst(inverted, line_passes_through(inv_line, P, 1e-9) ? 0.0 : 1.0);
    inverted_direct = worst(inverted_direct, max_abs_diff(inv, 2.0 * cg::inverted_observable(t.psi())));
  }
  const int n = static_cast<int>(set.size());
  c.upper("observable.null_line_is_twice_observable", doubled, tol, n, 10);
  c.upper("observable.translation_moves_point", translated, 1e-9, n, 10);
  c.upper("observable.translation_rotor_route", rotor_route, 1e-9, n);
  c.upper("observable.inversion_swaps_roles", inverted, 1e-9, n, 10);
  c.upper("observable.inversion_direct_form", inverted_direct, 1e-9, n, 10);
}

void congruence_checks(Collector& c) {
  cg::SceneConfig cfg;
  const std::vector<cg::CongruenceCircle> family = cg::torus_family(cfg);
  const int n = static_cast<int>(family.size());

  double speed = 0.0;
  double orth = 0.0;
  double accel = 0.0;
  double circular = 0.0;
  double closure = 0.0;
  double sampled = 0.0;
  double plane = 0.0;
  double dline_ratio = 0.0;
  double dline_angle = 0.0;
  double dline_extent = std::numeric_limits<double>::infinity();
  int dline_points = 0;
  for (const cg::CongruenceCircle& circle : family) {
    speed = worst(speed, circle.diagnostics.max_speed_error);
    orth = worst(orth, circle.diagnostics.max_orthogonality);
    accel = worst(accel, circle.diagnostics.accel_variation);
    circular = worst(circular, std::max(circle.diagnostics.max_radial_error,
                                        circle.diagnostics.max_plane_error));
    closure = worst(closure, (circle.point(2.0 * kPi) - circle.point(0.0)).norm());
    closure = worst(closure, (circle.point(0.0) - circle.seed).norm());
    for (int k = 0; k < cfg.samples_per_circle; ++k) {
      const cg::Vec3 p = circle.point(2.0 * kPi * k / cfg.samples_per_circle);
      sampled = worst(sampled, std::abs((p - circle.center).norm() - circle.radius) / circle.radius);
      sampled = worst(sampled, std::abs((p - circle.center).dot(circle.normal())) / circle.radius);
    }
    plane = worst(plane, max_abs_diff(circle.plane * circle.plane, sta::scalar(-1.0)));

    const cg::DLine d = cg::to_dlines(circle, cfg.helicity, cfg.samples_per_circle);
    dline_ratio = worst(dline_ratio, d.max_deviation / d.extent);
    dline_angle = worst(dline_angle, d.max_angle);
    dline_extent = std::min(dline_extent, d.extent);
    dline_points += static_cast<int>(d.points.size());
  }
  c.upper("circle.unit_speed", speed, 1e-10, n, 8);
  c.upper("circle.velocity_orthogonal_to_acceleration", orth, 1e-6, n, 8);
  c.upper("circle.acceleration_constant", accel, 1e-5, n, 8);
  c.upper("circle.integrated_arc_on_circle", circular, 1e-6, n, 8);
  c.upper("circle.closure", closure, 1e-8, n, 8);
  c.upper("circle.samples_on_circle", sampled, 1e-12, n * cfg.samples_per_circle, 8);
  c.upper("circle.plane_unit", plane, default_tolerance(), n);

  double separation = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      separation = std::min(separation,
                            cg::min_sampled_distance(family[i], family[j], cfg.samples_per_circle));
    }
  }
  c.lower("family.pairwise_separation", separation, 0.0, n * (n - 1) / 2, 8);

  // Handedness: twist and (v x a)_z at the same points for s = +10 and -10.
  int flips = 0;
  int consistent = 0;
  int points = 0;
  for (int j = 0; j < 8; ++j) {
    const double phi = 2.0 * kPi * j / 8;
    const cg::Vec3 x(15.0 * std::cos(phi), 15.0 * std::sin(phi), 5.0 * std::sin(3 * phi));
    const double tp = cg::field_twist(10.0, 0.0, x);
    const double tm = cg::field_twist(-10.0, 0.0, x);
    const cg::Vec3 vp = cg::tangent_field(10.0, 0.0, x);
    const cg::Vec3 vm = cg::tangent_field(-10.0, 0.0, x);
    const double zp = vp.cross(cg::field_acceleration(10.0, 0.0, x))[2];
    const double zm = vm.cross(cg::field_acceleration(-10.0, 0.0, x))[2];
    if (tp < 0.0 && tm > 0.0 && zp * zm < 0.0) ++flips;
    if (tp < 0.0) ++consistent;
    ++points;
  }
  c.lower("chirality.flips_with_helicity", flips, points - 1.0, points, 8);
  c.lower("chirality.constant_within_scene", consistent, points - 1.0, points, 8);

  c.upper("dline.deviation_over_length", dline_ratio, 1e-6, dline_points, 9);
  c.upper("dline.angular_deviation", dline_angle, 1e-6, dline_points, 9);
  c.lower("dline.extent", dline_extent, 1e-3, n, 9);
}

void geometry_suite(Draw& draw, Collector& c) {
  const std::vector<Twistor> set = null_set(draw, 50);
  c.guarded("null_ray", 1e-9, 7, [&] { null_ray_checks(draw, c, set); });
  c.guarded("observable", 1e-9, 10, [&] { observable_checks(draw, c, set); });
  c.guarded("congruence", 1e-6, 8, [&] { congruence_checks(c); });
}

std::uint64_t suite_seed(std::uint64_t seed, Suite suite) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

void run_one(Suite suite, std::uint64_t seed, std::vector<Check>& out) {
  Draw draw(suite_seed(seed, suite));
  Collector c(std::string(suite_name(suite)), out);
  switch (suite) {
    case Suite::kAlgebra: c.guarded("algebra", 0.0, 1, [&] { algebra_suite(draw, c); }); break;
    case Suite::kConformal: c.guarded("conformal", 0.0, 3, [&] { conformal_suite(draw, c); }); break;
    case Suite::kSpinorRep: c.guarded("spinor-rep", 0.0, 4, [&] { spinor_suite(draw, c); }); break;
    case Suite::kTwistor: c.guarded("twistor", 0.0, 6, [&] { twistor_suite(draw, c); }); break;
    case Suite::kGeometry: geometry_suite(draw, c); break;
    case Suite::kAll: break;
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::kAll;
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::kAlgebra: return "algebra";
    case Suite::kConformal: return "conformal";
    case Suite::kSpinorRep: return "spinor-rep";
    case Suite::kTwistor: return "twistor";
    case Suite::kGeometry: return "geometry";
    case Suite::kAll: return "all";
  }
  return "unknown";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {Suite::kAlgebra, Suite::kConformal,
                                            Suite::kSpinorRep, Suite::kTwistor,
                                            Suite::kGeometry};
  return suites;
}

bool Report::passed() const { return failures() == 0 && !checks.empty(); }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const Check& c) { return !c.passed; }));
}

Report run(Suite suite, std::uint64_t seed) {
  Report report;
  report.seed = seed;
  report.suite = std::string(suite_name(suite));
  report.tolerance = default_tolerance();
  if (suite == Suite::kAll) {
    for (Suite s : all_suites()) run_one(s, seed, report.checks);
  } else {
    run_one(suite, seed, report.checks);
  }
  return report;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"suite", c.suite},
                      {"name", c.name},
                      {"passed", c.passed},
                      {"measured", std::isfinite(c.measured) ? nlohmann::ordered_json(c.measured)
                                                             : nlohmann::ordered_json("inf")},
                      {c.lower_bound ? "lower_bound" : "tolerance", c.tolerance},
                      {"samples", c.samples}});
  }
  nlohmann::ordered_json j = {{"suite", report.suite},
                              {"seed", report.seed},
                              {"default_tolerance", report.tolerance},
                              {"passed", report.passed()},
                              {"failures", report.failures()},
                              {"checks", checks}};
  return j.dump(2) + "\n";
}

}  // namespace tga::verify
