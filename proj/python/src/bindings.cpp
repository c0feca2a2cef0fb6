#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli_app.hpp"
#include "tga/congruence.hpp"
#include "tga/conformal.hpp"
#include "tga/conformal_spinor.hpp"
#include "tga/multivector.hpp"
#include "tga/sta.hpp"
#include "tga/twistor.hpp"
#include "tga/verify/suites.hpp"

namespace py = pybind11;
using namespace tga;

namespace {

Multivector from_list(const Signature& sig, const std::vector<double>& coeffs) {
  return Multivector(sig, std::span<const double>(coeffs.data(), coeffs.size()));
}

std::vector<double> to_list(const Multivector& m) {
  const auto c = m.coeffs();
  return {c.begin(), c.end()};
}

Multivector sta_vector(const std::array<double, 4>& v) { return sta::vector(v[0], v[1], v[2], v[3]); }

sta::PauliSpinor pauli(const std::array<double, 4>& a) {
  return sta::PauliSpinor::from_coefficients(a[0], a[1], a[2], a[3]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometric algebra of twistors";

  py::class_<Signature>(m, "Signature")
      .def_static("canonical", &Signature::canonical, py::arg("p"), py::arg("q"))
      .def_static("spacetime", &Signature::spacetime)
      .def_static("conformal", &Signature::conformal)
      .def_property_readonly("p", &Signature::p)
      .def_property_readonly("q", &Signature::q)
      .def_property_readonly("dim", &Signature::dim)
      .def("square", &Signature::square)
      .def(py::self == py::self)
      .def("__repr__", &Signature::to_string);

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<const Signature&>())
      .def(py::init(&from_list), py::arg("signature"), py::arg("coeffs"))
      .def_static("scalar", &Multivector::scalar)
      .def_static("basis_vector", &Multivector::basis_vector)
      .def_static("blade", &Multivector::blade, py::arg("signature"), py::arg("mask"),
                  py::arg("coeff") = 1.0)
      .def_property_readonly("signature", &Multivector::signature)
      .def_property_readonly("coeffs", &to_list)
      .def("__getitem__", [](const Multivector& a, Blade b) {
        if (b >= a.size()) throw py::index_error("blade index out of range");
        return a[b];
      })
      .def("scalar_part", &Multivector::scalar_part)
      .def("grade", &Multivector::grade)
      .def("reverse", &Multivector::reverse)
      .def("involute", &Multivector::involute)
      .def("max_abs", &Multivector::max_abs)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self / double())
      .def(-py::self)
      .def("__xor__", &outer_product)
      .def("__or__", &inner_product)
      .def("__repr__", &Multivector::to_string);

  m.def("scalar_product", &scalar_product);
  m.def("max_abs_diff", &max_abs_diff);

  py::class_<Rotor>(m, "Rotor")
      .def(py::init<Multivector, double>(), py::arg("value"), py::arg("tol") = 1e-10)
      .def_property_readonly("value", &Rotor::value)
      .def("apply", &Rotor::apply)
      .def("reverse", &Rotor::reverse);
  m.def("rotor_exp", &rotor_exp, py::arg("bivector"), py::arg("angle"));

  // Spacetime algebra.
  py::module_ msta = m.def_submodule("sta", "Spacetime algebra Cl(1,3)");
  msta.def("gamma", &sta::gamma);
  msta.def("sigma", &sta::sigma);
  msta.def("i_sigma", &sta::i_sigma);
  msta.def("pseudoscalar", &sta::pseudoscalar);
  msta.def("vector", &sta::vector, py::arg("t"), py::arg("x"), py::arg("y"), py::arg("z"));
  msta.def("vector_components", &sta::vector_components);
  msta.def("flagpole", [](const std::array<double, 4>& a) { return sta::flagpole(pauli(a)); },
           py::arg("omega"));

  py::class_<sta::FourSpinor>(m, "FourSpinor")
      .def(py::init<Multivector, double>(), py::arg("value"), py::arg("tol") = 1e-10)
      .def_static("from_weyl",
                  [](const std::array<double, 4>& omega, const std::array<double, 4>& pi) {
                    return sta::four_spinor(pauli(omega), pauli(pi));
                  },
                  py::arg("omega"), py::arg("pi"))
      .def_property_readonly("value", &sta::FourSpinor::value);

  // Twistors.
  py::class_<twistor::Twistor>(m, "Twistor")
      .def(py::init([](const sta::FourSpinor& psi, const std::array<double, 4>& r) {
             return twistor::Twistor(psi, sta_vector(r));
           }),
           py::arg("psi"), py::arg("position") = std::array<double, 4>{0, 0, 0, 0})
      .def_property_readonly("psi", &twistor::Twistor::psi)
      .def_property_readonly("z", &twistor::Twistor::z)
      .def_property_readonly("position", &twistor::Twistor::position)
      .def("helicity", &twistor::helicity)
      .def("momentum", &twistor::momentum)
      .def("angular_momentum", &twistor::angular_momentum)
      .def("pauli_lubanski", &twistor::pauli_lubanski)
      .def("primary_part", [](const twistor::Twistor& t) { return twistor::primary_part(t).value(); })
      .def("with_phase", &twistor::with_phase);

  m.def("example_twistor",
        [](double s, const std::array<double, 4>& r) { return congruence::example_twistor(s, sta_vector(r)); },
        py::arg("s"), py::arg("position") = std::array<double, 4>{0, 0, 0, 0});
  m.def("null_twistor",
        [](const std::array<double, 4>& omega, const std::array<double, 4>& pi) {
          return congruence::null_twistor(pauli(omega), pauli(pi));
        },
        py::arg("omega"), py::arg("pi"));

  py::class_<congruence::NullRay>(m, "NullRay")
      .def_readonly("q", &congruence::NullRay::q)
      .def_readonly("p", &congruence::NullRay::p)
      .def_readonly("flagpole", &congruence::NullRay::flagpole)
      .def_readonly("beta", &congruence::NullRay::beta)
      .def("point", &congruence::NullRay::point);
  m.def("null_ray", &congruence::null_ray, py::arg("twistor"), py::arg("helicity_tol") = 1e-8);

  // Conformal model.
  py::module_ mcga = m.def_submodule("conformal", "Conformal algebra Cl(2,4)");
  mcga.def("embed", [](const Multivector& x, double lambda) { return conformal::embed_euclidean(x, lambda).X; },
           py::arg("x"), py::arg("scale") = 1.0);
  mcga.def("extract", [](const Multivector& X, double lambda) {
    return conformal::extract_euclidean({X, lambda});
  }, py::arg("X"), py::arg("scale") = 1.0);
  mcga.def("translation_rotor", &conformal::translation_rotor, py::arg("a"), py::arg("scale") = 1.0);
  mcga.def("dilation_rotor", &conformal::dilation_rotor, py::arg("alpha"));
  mcga.def("special_conformal_rotor", &conformal::special_conformal_rotor, py::arg("a"),
           py::arg("scale") = 1.0);
  mcga.def("n", &conformal::n);
  mcga.def("nbar", &conformal::nbar);
  mcga.def("lift_spinor", [](const sta::FourSpinor& z) { return conformal_spinor::lift(z).value(); });

  // Robinson congruence.
  m.def("tangent_field", &congruence::tangent_field, py::arg("s"), py::arg("tau"), py::arg("x"));
  m.def("field_twist", &congruence::field_twist, py::arg("s"), py::arg("tau"), py::arg("x"));

  py::class_<congruence::CircleDiagnostics>(m, "CircleDiagnostics")
      .def_readonly("max_speed_error", &congruence::CircleDiagnostics::max_speed_error)
      .def_readonly("max_orthogonality", &congruence::CircleDiagnostics::max_orthogonality)
      .def_readonly("accel_variation", &congruence::CircleDiagnostics::accel_variation)
      .def_readonly("max_radial_error", &congruence::CircleDiagnostics::max_radial_error)
      .def_readonly("max_plane_error", &congruence::CircleDiagnostics::max_plane_error)
      .def_readonly("steps", &congruence::CircleDiagnostics::steps);

  py::class_<congruence::CongruenceCircle>(m, "CongruenceCircle")
      .def_readonly("center", &congruence::CongruenceCircle::center)
      .def_readonly("radius", &congruence::CongruenceCircle::radius)
      .def_readonly("seed", &congruence::CongruenceCircle::seed)
      .def_readonly("tangent", &congruence::CongruenceCircle::tangent)
      .def_readonly("helicity", &congruence::CongruenceCircle::helicity)
      .def_readonly("diagnostics", &congruence::CongruenceCircle::diagnostics)
      .def("point", &congruence::CongruenceCircle::point)
      .def("normal", &congruence::CongruenceCircle::normal);

  m.def("congruence_circle",
        [](const congruence::Vec3& x, double s, double tau) { return congruence::congruence_circle(x, s, tau); },
        py::arg("x"), py::arg("s"), py::arg("tau") = 0.0);
  m.def("torus_family",
        [](double s, double tau, const std::array<double, 3>& torus, double phi, int count) {
          congruence::SceneConfig cfg;
          cfg.helicity = s;
          cfg.tau = tau;
          cfg.torus_x = torus[0];
          cfg.torus_y = torus[1];
          cfg.torus_z = torus[2];
          cfg.phi_initial = phi;
          cfg.family_count = count;
          cfg.validate();
          py::gil_scoped_release release;
          return congruence::torus_family(cfg);
        },
        py::arg("s") = 0.5, py::arg("tau") = 0.0, py::arg("torus") = std::array<double, 3>{1, 1, 0},
        py::arg("phi") = 0.0, py::arg("count") = 8);

  // Verification and the command line.
  m.def("_verify_json",
        [](const std::string& suite, std::uint64_t seed) {
          const auto parsed = verify::parse_suite(suite);
          if (!parsed) throw py::value_error("unknown suite: " + suite);
          py::gil_scoped_release release;
          return verify::to_json(verify::run(*parsed, seed));
        },
        py::arg("suite") = "all", py::arg("seed") = 42);
  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"twistor-ga"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
