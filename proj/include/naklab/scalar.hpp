#pragma once

// Exact scalars: rationals backed by GMP and Gaussian rationals a + b*i.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace naklab {

using Rational = mpq_class;

/// Thrown for malformed user input (model files, monomial syntax, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (optional sign). The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" with q > 0 and gcd(p, q) = 1. Integers print as "p/1".
std::string rational_fraction_string(const Rational& q);

/// Short form: integers print without a denominator.
std::string rational_string(const Rational& q);

Rational factorial(int n);

/// p/q in canonical form.
Rational fraction(long p, long q);

/// Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}                    // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}                     // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  /// i^k for any integer k.
  static Scalar i_power(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  /// "p/q", "r/s*i" or "p/q+r/s*i".
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace naklab
