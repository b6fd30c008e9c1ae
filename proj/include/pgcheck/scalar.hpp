#pragma once

// Exact ground coefficients: Gaussian rationals a + b*i with arbitrary-precision
// rational parts.  Plain rationals are the b == 0 subring; every value is kept
// in canonical form (reduced fractions, positive denominators), so equality is
// plain component equality.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgcheck {

class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long v) : re_(static_cast<long>(v)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den) : re_(mpq_class(num, den)), im_(0) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    re_.canonicalize();
  }
  explicit Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar from_decimal_string(const std::string& digits) {
    return Scalar(mpq_class(mpz_class(digits, 10)), 0);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
  Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
  Scalar operator*(const Scalar& o) const {
    return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    return Scalar((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  double to_double() const { return re_.get_d(); }

  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag = imag_str();
    if (re_ == 0) return imag;
    return re_.get_str() + (im_ > 0 ? "+" : "") + imag;
  }

  // True when printing this value next to a monomial needs parentheses.
  bool needs_parens() const { return re_ != 0 && im_ != 0; }

 private:
  std::string imag_str() const {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }

  mpq_class re_, im_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline std::string to_string(const Scalar& s) { return s.str(); }
inline Scalar scale(const Scalar& s, const Scalar& c) { return s * c; }

// Dual numbers a + b*eps with eps^2 = 0, used for exact first-order derivatives.
struct DualScalar {
  Scalar a, b;

  DualScalar() = default;
  DualScalar(Scalar a_, Scalar b_ = Scalar(0)) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  DualScalar operator-() const { return DualScalar(-a, -b); }
  DualScalar operator+(const DualScalar& o) const { return DualScalar(a + o.a, b + o.b); }
  DualScalar operator-(const DualScalar& o) const { return DualScalar(a - o.a, b - o.b); }
  DualScalar operator*(const DualScalar& o) const {
    return DualScalar(a * o.a, a * o.b + b * o.a);
  }
  bool operator==(const DualScalar& o) const { return a == o.a && b == o.b; }
  bool operator!=(const DualScalar& o) const { return !(*this == o); }

  std::string str() const { return "(" + a.str() + ") + (" + b.str() + ")*eps"; }
};

inline bool is_zero(const DualScalar& s) { return s.is_zero(); }
inline std::string to_string(const DualScalar& s) { return s.str(); }
inline DualScalar scale(const DualScalar& s, const Scalar& c) {
  return DualScalar(s.a * c, s.b * c);
}

}  // namespace pgcheck
