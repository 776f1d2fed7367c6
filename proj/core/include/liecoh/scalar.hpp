#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liecoh {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept in lowest terms with positive denominators, so two
/// Scalars are mathematically equal iff they compare equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar from_fraction(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Accepts `p`, `p/q`, `p/q+r/si`, `r/si`, `i`, `-i` (no whitespace).
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// re^2 + im^2
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Rendering: `p/q` for reals, `(p/q + r/s i)` otherwise.
  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// Total order used only for canonical sorting (re first, then im).
bool canonical_less(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Coefficient vector over a basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(int dim);
Vector unit_vector(int dim, int i);
bool is_zero(const Vector& v);

}  // namespace liecoh
