#pragma once

// Rational functions num/den over the polynomial ring.  The representation is
// reduced only where cheap (monomial content, leading-coefficient scaling);
// equality is decided by cross-multiplication, which is all verification needs.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "pgcheck/poly.hpp"

namespace pgcheck {

class RatFunc {
 public:
  RatFunc() : num_(Poly({}, false)), den_(Poly::constant({}, false, Scalar(1))) {}

  explicit RatFunc(Poly num) : num_(std::move(num)), den_(one_like(num_)) { normalize(); }

  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    num_.require_compatible(den_);
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
  }

  static RatFunc constant(std::vector<std::string> vars, const Scalar& c) {
    return RatFunc(Poly::constant(std::move(vars), false, c));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
  RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
  RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

  // a/b == c/d  iff  a*d == c*b.
  bool operator==(const RatFunc& o) const { return (num_ * o.den_) == (o.num_ * den_); }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc scaled(const Scalar& c) const { return RatFunc(num_.scaled(c), den_); }

  RatFunc derivative(size_t i) const {
    return RatFunc(num_.derivative(i) * den_ - num_ * den_.derivative(i), den_ * den_);
  }

  // The exact constant value, when the function reduces to one.
  std::optional<Scalar> constant_value() const {
    if (num_.is_zero()) return Scalar(0);
    Scalar c = num_.leading_coeff() / den_.leading_coeff();
    if (num_ == den_.scaled(c)) return c;
    return std::nullopt;
  }

  bool is_constant() const { return constant_value().has_value(); }

  std::string str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  static Poly one_like(const Poly& p) {
    return Poly::constant(p.vars(), p.laurent(), Scalar(1));
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = one_like(den_);
      return;
    }
    // Cancel the common monomial content, then scale the denominator's leading
    // coefficient to one.
    Exponents cn = num_.monomial_content();
    Exponents cd = den_.monomial_content();
    Exponents shift(cn.size());
    bool any = false;
    for (size_t k = 0; k < cn.size(); ++k) {
      shift[k] = -std::min(cn[k], cd[k]);
      if (shift[k] != 0) any = true;
    }
    if (any) {
      num_ = num_.shifted(shift);
      den_ = den_.shifted(shift);
    }
    Scalar lead = den_.leading_coeff();
    if (!lead.is_one()) {
      Scalar inv = Scalar(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly num_, den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline std::string to_string(const RatFunc& f) { return f.str(); }
inline RatFunc scale(const RatFunc& f, const Scalar& c) { return f.scaled(c); }
inline RatFunc derivative(const RatFunc& f, size_t i) { return f.derivative(i); }

inline RatFunc ring_zero_like(const RatFunc& f) { return RatFunc(Poly(f.vars(), false)); }
inline RatFunc ring_one_like(const RatFunc& f) { return RatFunc::constant(f.vars(), Scalar(1)); }
inline RatFunc ring_constant_like(const RatFunc& f, const Scalar& c) {
  return RatFunc::constant(f.vars(), c);
}
inline RatFunc ring_variable_like(const RatFunc& f, size_t i) {
  return RatFunc(Poly::variable(f.vars(), false, i));
}

}  // namespace pgcheck
