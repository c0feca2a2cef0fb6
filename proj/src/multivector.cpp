#include "tga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tga {

namespace {

double tolerance_from_env() {
  if (const char* env = std::getenv("TWISTOR_GA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) {
      return v;
    }
  }
  return 1e-10;
}

// Number of transpositions needed to bring the factors of a*b into
// ascending order, mod 2.
int reorder_parity(Blade a, Blade b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += blade_grade(a & b);
    a >>= 1;
  }
  return swaps & 1;
}

using SignTable = std::array<std::array<std::int8_t, kMaxBlades>, kMaxBlades>;

constexpr std::size_t kTableSlots = (std::size_t{2} << kMaxDim) - 2;

std::size_t table_slot(const Signature& sig) {
  return (std::size_t{1} << sig.dim()) - 2 + sig.negative_mask();
}

const SignTable& sign_table(const Signature& sig) {
  static std::array<std::once_flag, kTableSlots> once;
  static std::array<std::unique_ptr<SignTable>, kTableSlots> tables;
  const std::size_t slot = table_slot(sig);
  std::call_once(once[slot], [&] {
    auto table = std::make_unique<SignTable>();
    const std::size_t n = sig.blade_count();
    for (Blade a = 0; a < n; ++a) {
      for (Blade b = 0; b < n; ++b) {
        (*table)[a][b] = static_cast<std::int8_t>(blade_product_sign(sig, a, b));
      }
    }
    tables[slot] = std::move(table);
  });
  return *tables[slot];
}

void require_same(const Multivector& a, const Multivector& b, const char* op) {
  if (!(a.signature() == b.signature())) {
    throw std::invalid_argument(std::string(op) + ": signature mismatch (" +
                                a.signature().to_string() + " vs " +
                                b.signature().to_string() + ")");
  }
}

template <typename Keep>
Multivector graded_product(const Multivector& a, const Multivector& b, Keep keep) {
  const Signature& sig = a.signature();
  const SignTable& table = sign_table(sig);
  const std::size_t n = a.size();
  std::array<double, kMaxBlades> out{};
  for (Blade i = 0; i < n; ++i) {
    const double ca = a[i];
    if (ca == 0.0) continue;
    const int gi = blade_grade(i);
    for (Blade j = 0; j < n; ++j) {
      const double cb = b[j];
      if (cb == 0.0) continue;
      const Blade k = i ^ j;
      if (!keep(gi, blade_grade(j), blade_grade(k))) continue;
      out[k] += table[i][j] * ca * cb;
    }
  }
  return Multivector(sig, std::span<const double>(out.data(), n));
}

}  // namespace

double default_tolerance() {
  static const double tol = tolerance_from_env();
  return tol;
}

Signature Signature::canonical(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > kMaxDim) {
    throw std::invalid_argument("Signature: need p,q >= 0 and 1 <= p+q <= 6");
  }
  const std::uint32_t neg = ((1u << (p + q)) - 1u) & ~((1u << p) - 1u);
  return Signature(p, q, neg);
}

Signature Signature::from_squares(std::initializer_list<int> squares) {
  const int dim = static_cast<int>(squares.size());
  if (dim < 1 || dim > kMaxDim) {
    throw std::invalid_argument("Signature: need 1 <= dim <= 6");
  }
  std::uint32_t neg = 0;
  int p = 0;
  int i = 0;
  for (int s : squares) {
    if (s == 1) {
      ++p;
    } else if (s == -1) {
      neg |= 1u << i;
    } else {
      throw std::invalid_argument("Signature: basis squares must be +1 or -1");
    }
    ++i;
  }
  return Signature(p, dim - p, neg);
}

Signature Signature::spacetime() { return from_squares({1, -1, -1, -1}); }

Signature Signature::conformal() { return from_squares({1, -1, -1, -1, 1, -1}); }

std::string Signature::to_string() const {
  std::string out = "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + ")[";
  for (int i = 0; i < dim(); ++i) out += square(i) > 0 ? '+' : '-';
  return out + "]";
}

int blade_product_sign(const Signature& sig, Blade a, Blade b) {
  int sign = reorder_parity(a, b) ? -1 : 1;
  if (blade_grade(a & b & sig.negative_mask()) & 1) sign = -sign;
  return sign;
}

Multivector::Multivector(const Signature& sig) : sig_(sig) {}

Multivector::Multivector(const Signature& sig, std::span<const double> coeffs)
    : sig_(sig) {
  if (coeffs.size() != sig.blade_count()) {
    throw std::invalid_argument("Multivector: expected " +
                                std::to_string(sig.blade_count()) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!std::isfinite(coeffs[i])) {
      throw std::invalid_argument("Multivector: non-finite coefficient");
    }
    coeffs_[i] = coeffs[i];
  }
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  return Multivector(sig).with(0, value);
}

Multivector Multivector::basis_vector(const Signature& sig, int index) {
  if (index < 0 || index >= sig.dim()) {
    throw std::invalid_argument("basis_vector: index out of range");
  }
  return Multivector(sig).with(Blade{1} << index, 1.0);
}

Multivector Multivector::blade(const Signature& sig, Blade mask, double coeff) {
  if (mask >= sig.blade_count()) {
    throw std::invalid_argument("blade: mask out of range");
  }
  return Multivector(sig).with(mask, coeff);
}

Multivector Multivector::vector(const Signature& sig, std::span<const double> components) {
  if (components.size() != static_cast<std::size_t>(sig.dim())) {
    throw std::invalid_argument("vector: component count must equal dimension");
  }
  Multivector out(sig);
  for (int i = 0; i < sig.dim(); ++i) out.coeffs_[Blade{1} << i] = components[i];
  return out;
}

Multivector Multivector::with(Blade b, double value) const {
  if (b >= size()) throw std::invalid_argument("with: blade out of range");
  if (!std::isfinite(value)) throw std::invalid_argument("with: non-finite coefficient");
  Multivector out = *this;
  out.coeffs_[b] = value;
  return out;
}

Multivector Multivector::grade(int k) const {
  if (k < 0 || k > sig_.dim()) {
    throw std::invalid_argument("grade: k=" + std::to_string(k) + " outside 0.." +
                                std::to_string(sig_.dim()));
  }
  return grades(1u << k);
}

Multivector Multivector::grades(std::uint32_t grade_mask) const {
  Multivector out(sig_);
  for (Blade b = 0; b < size(); ++b) {
    if ((grade_mask >> blade_grade(b)) & 1u) out.coeffs_[b] = coeffs_[b];
  }
  return out;
}

Multivector Multivector::even_part() const { return grades(0x55u); }

Multivector Multivector::odd_part() const { return grades(0xAAu); }

Multivector Multivector::reverse() const {
  Multivector out = *this;
  for (Blade b = 0; b < size(); ++b) {
    const int k = blade_grade(b);
    if ((k * (k - 1) / 2) & 1) out.coeffs_[b] = -out.coeffs_[b];
  }
  return out;
}

Multivector Multivector::involute() const {
  Multivector out = *this;
  for (Blade b = 0; b < size(); ++b) {
    if (blade_grade(b) & 1) out.coeffs_[b] = -out.coeffs_[b];
  }
  return out;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double Multivector::coeff_norm() const {
  double s = 0.0;
  for (double c : coeffs()) s += c * c;
  return std::sqrt(s);
}

std::uint32_t Multivector::grades_present(double tol) const {
  std::uint32_t mask = 0;
  for (Blade b = 0; b < size(); ++b) {
    if (std::abs(coeffs_[b]) > tol) mask |= 1u << blade_grade(b);
  }
  return mask;
}

bool Multivector::is_homogeneous(int k, double tol) const {
  return (grades_present(tol) & ~(1u << k)) == 0;
}

bool Multivector::is_even(double tol) const { return (grades_present(tol) & 0xAAu) == 0; }

Multivector Multivector::operator-() const {
  Multivector out = *this;
  out *= -1.0;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same(*this, o, "operator+");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same(*this, o, "operator-");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] *= s;
  return *this;
}

std::string Multivector::to_string() const {
  std::ostringstream os;
  os.precision(10);
  bool first = true;
  for (Blade b = 0; b < size(); ++b) {
    if (coeffs_[b] == 0.0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[b];
    if (b != 0) {
      os << "*e";
      for (int i = 0; i < sig_.dim(); ++i) {
        if ((b >> i) & 1u) os << i;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(Multivector a, double s) { return a *= s; }
Multivector operator*(double s, Multivector a) { return a *= s; }
Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }
Multivector operator+(Multivector a, double s) { return a.with(0, a[0] + s); }
Multivector operator+(double s, Multivector a) { return a.with(0, a[0] + s); }
Multivector operator-(Multivector a, double s) { return a.with(0, a[0] - s); }
Multivector operator-(double s, const Multivector& a) {
  return (-a).with(0, s - a[0]);
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  require_same(a, b, "geometric_product");
  return graded_product(a, b, [](int, int, int) { return true; });
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  require_same(a, b, "outer_product");
  return graded_product(a, b, [](int r, int s, int k) { return k == r + s; });
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  require_same(a, b, "inner_product");
  return graded_product(a, b, [](int r, int s, int k) { return k == std::abs(r - s); });
}

double scalar_product(const Multivector& a, const Multivector& b) {
  require_same(a, b, "scalar_product");
  const SignTable& table = sign_table(a.signature());
  double s = 0.0;
  for (Blade i = 0; i < a.size(); ++i) s += table[i][i] * a[i] * b[i];
  return s;
}

Multivector sandwich(const Multivector& v, const Multivector& a) {
  require_same(v, a, "sandwich");
  return v * a * v.reverse();
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  require_same(a, b, "max_abs_diff");
  double m = 0.0;
  for (Blade i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Multivector embed(const Multivector& mv, const Signature& target) {
  const Signature& src = mv.signature();
  if (src.dim() > target.dim()) {
    throw std::invalid_argument("embed: target dimension smaller than source");
  }
  const std::uint32_t low = (1u << src.dim()) - 1u;
  if ((target.negative_mask() & low) != src.negative_mask()) {
    throw std::invalid_argument("embed: leading metric of target differs from source");
  }
  std::array<double, kMaxBlades> out{};
  std::copy(mv.coeffs().begin(), mv.coeffs().end(), out.begin());
  return Multivector(target, std::span<const double>(out.data(), target.blade_count()));
}

Multivector restrict_to(const Multivector& mv, const Signature& target, double tol) {
  const Signature& src = mv.signature();
  if (target.dim() > src.dim()) {
    throw std::invalid_argument("restrict_to: target dimension larger than source");
  }
  const std::uint32_t low = (1u << target.dim()) - 1u;
  if ((src.negative_mask() & low) != target.negative_mask()) {
    throw std::invalid_argument("restrict_to: leading metric of source differs from target");
  }
  for (Blade b = target.blade_count(); b < mv.size(); ++b) {
    if (std::abs(mv[b]) > tol) {
      throw std::invalid_argument("restrict_to: multivector has components outside target");
    }
  }
  return Multivector(target, mv.coeffs().first(target.blade_count()));
}

Rotor::Rotor(Multivector value, double tol) : value_(std::move(value)) {
  if (!value_.is_even(tol)) {
    throw std::invalid_argument("Rotor: odd-grade components present");
  }
  const Multivector norm = value_ * value_.reverse();
  if (!approx_equal(norm, Multivector::scalar(value_.signature(), 1.0), tol)) {
    throw std::invalid_argument("Rotor: R reverse(R) != 1 (got " + norm.to_string() + ")");
  }
}

Rotor Rotor::identity(const Signature& sig) {
  return Rotor(Multivector::scalar(sig, 1.0), Unchecked{});
}

Rotor rotor_exp(const Multivector& bivector, double lambda) {
  const double tol = default_tolerance();
  const double scale = std::max(1.0, bivector.max_abs());
  if (!bivector.is_homogeneous(2, tol * scale)) {
    throw std::invalid_argument("rotor_exp: argument is not a bivector");
  }
  const Multivector b = bivector.grade(2);
  if (!outer_product(b, b).is_zero(tol * scale * scale)) {
    throw std::invalid_argument(
        "rotor_exp: bivector is not a blade (B^B != 0); general exponentials are unsupported");
  }
  const double b2 = (b * b).scalar_part();
  const double half = 0.5 * lambda;
  Multivector r(b.signature());
  if (std::abs(b2) <= tol * scale * scale) {
    r = 1.0 - half * b;
  } else if (b2 < 0.0) {
    const double mag = std::sqrt(-b2);
    r = std::cos(half * mag) - (std::sin(half * mag) / mag) * b;
  } else {
    const double mag = std::sqrt(b2);
    r = std::cosh(half * mag) - (std::sinh(half * mag) / mag) * b;
  }
  return Rotor(std::move(r), 1e-8 * std::max(1.0, r.max_abs() * r.max_abs()));
}

}  // namespace tga
