#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

namespace tga {

/// Largest supported vector-space dimension (64 blades).
inline constexpr int kMaxDim = 6;
inline constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxDim;

/// Componentwise absolute tolerance used by every approximate comparison.
/// Defaults to 1e-10; the TWISTOR_GA_TOL environment variable overrides it.
double default_tolerance();

/// Metric signature of a real Clifford algebra.
///
/// Basis vector i squares to -1 when bit i of `negative_mask` is set and to +1
/// otherwise. `canonical(p, q)` puts the p positive vectors first; the two
/// named algebras of this library fix their own orderings:
///   spacetime():  (g0, g1, g2, g3)        = (+, -, -, -)
///   conformal():  (g0, g1, g2, g3, e, eb) = (+, -, -, -, +, -)
/// so a spacetime multivector embeds into the conformal algebra by zero
/// padding bits 4 and 5.
class Signature {
 public:
  static Signature canonical(int p, int q);
  static Signature from_squares(std::initializer_list<int> squares);
  static Signature spacetime();
  static Signature conformal();

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t blade_count() const { return std::size_t{1} << dim(); }
  std::uint32_t negative_mask() const { return negative_mask_; }

  /// Square of basis vector i: +1 or -1.
  int square(int i) const { return (negative_mask_ >> i) & 1u ? -1 : 1; }

  bool operator==(const Signature&) const = default;

  std::string to_string() const;

 private:
  Signature(int p, int q, std::uint32_t negative_mask)
      : p_(p), q_(q), negative_mask_(negative_mask) {}

  int p_ = 0;
  int q_ = 0;
  std::uint32_t negative_mask_ = 0;
};

/// Blade index: bit k set means basis vector e_k is a factor, in ascending order.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

/// Sign of the product of basis blades a*b in the given signature
/// (reordering sign times the metric factors of the shared vectors).
int blade_product_sign(const Signature& sig, Blade a, Blade b);

/// Dense multivector over the 2^dim basis blades of Cl(p,q).
class Multivector {
 public:
  explicit Multivector(const Signature& sig);
  Multivector(const Signature& sig, std::span<const double> coeffs);

  static Multivector scalar(const Signature& sig, double value);
  static Multivector basis_vector(const Signature& sig, int index);
  static Multivector blade(const Signature& sig, Blade mask, double coeff = 1.0);
  /// Grade-1 element sum_i components[i] e_i.
  static Multivector vector(const Signature& sig, std::span<const double> components);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return sig_.blade_count(); }
  std::span<const double> coeffs() const { return {coeffs_.data(), size()}; }
  double operator[](Blade b) const { return coeffs_[b]; }
  double scalar_part() const { return coeffs_[0]; }

  /// Copy with one blade coefficient replaced.
  Multivector with(Blade b, double value) const;

  Multivector grade(int k) const;
  /// Projection onto the given grades (bitmask over grades 0..dim).
  Multivector grades(std::uint32_t grade_mask) const;
  Multivector even_part() const;
  Multivector odd_part() const;
  Multivector reverse() const;
  /// Grade involution (odd grades negated).
  Multivector involute() const;

  /// Largest absolute coefficient.
  double max_abs() const;
  /// Euclidean norm of the coefficient vector.
  double coeff_norm() const;
  bool is_zero(double tol) const { return max_abs() <= tol; }
  /// Bitmask of grades carrying a coefficient above tol.
  std::uint32_t grades_present(double tol) const;
  bool is_homogeneous(int k, double tol) const;
  bool is_even(double tol) const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  std::string to_string() const;

 private:
  Signature sig_;
  std::array<double, kMaxBlades> coeffs_{};
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(Multivector a, double s);
Multivector operator*(double s, Multivector a);
Multivector operator/(Multivector a, double s);
Multivector operator+(Multivector a, double s);
Multivector operator+(double s, Multivector a);
Multivector operator-(Multivector a, double s);
Multivector operator-(double s, const Multivector& a);

/// Geometric product. Throws std::invalid_argument on signature mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

/// Outer product: <a_r b_s>_{r+s}, extended bilinearly over grades.
Multivector outer_product(const Multivector& a, const Multivector& b);
/// Inner product: <a_r b_s>_{|r-s|}, extended bilinearly over grades.
Multivector inner_product(const Multivector& a, const Multivector& b);

/// Scalar part of the geometric product, <ab>_0, without forming ab.
double scalar_product(const Multivector& a, const Multivector& b);

/// V A reverse(V).
Multivector sandwich(const Multivector& v, const Multivector& a);

/// Componentwise |a - b| <= tol. Throws on signature mismatch.
bool approx_equal(const Multivector& a, const Multivector& b, double tol);
double max_abs_diff(const Multivector& a, const Multivector& b);

/// Zero-pads a multivector into a larger signature whose leading basis
/// vectors share the metric of `mv`'s signature.
Multivector embed(const Multivector& mv, const Signature& target);
/// Inverse of embed: drops blades involving vectors beyond the target dimension.
/// Throws std::invalid_argument if any dropped coefficient exceeds tol.
Multivector restrict_to(const Multivector& mv, const Signature& target, double tol);

/// Even, unit-reverse multivector (R reverse(R) = 1).
class Rotor {
 public:
  /// Validates evenness and normalization at `tol`; throws std::invalid_argument.
  explicit Rotor(Multivector value, double tol = 1e-10);
  static Rotor identity(const Signature& sig);

  const Multivector& value() const { return value_; }
  const Signature& signature() const { return value_.signature(); }
  Rotor reverse() const { return Rotor(value_.reverse(), Unchecked{}); }
  Multivector apply(const Multivector& a) const { return sandwich(value_, a); }

  friend Rotor operator*(const Rotor& a, const Rotor& b) {
    return Rotor(a.value_ * b.value_, Unchecked{});
  }
  friend Rotor operator-(const Rotor& r) { return Rotor(-r.value_, Unchecked{}); }

 private:
  struct Unchecked {};
  Rotor(Multivector value, Unchecked) : value_(std::move(value)) {}

  Multivector value_;
};

/// R(lambda) = exp(-lambda B / 2) for a 2-blade B (B ^ B = 0).
/// Uses the closed form selected by the sign of the scalar B^2.
/// Throws std::invalid_argument when B is not a pure bivector blade.
Rotor rotor_exp(const Multivector& bivector, double lambda);

}  // namespace tga
