#pragma once

// Sparse multivariate polynomials (and Laurent polynomials) over Scalar.
// Terms are keyed by exponent vectors in graded-lex order; zero coefficients
// are never stored, so structural equality is canonical-form equality.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/scalar.hpp"

namespace pgcheck {

using Exponents = std::vector<int>;

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class Poly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexLess>;

  Poly() = default;
  Poly(std::vector<std::string> vars, bool laurent)
      : vars_(std::move(vars)), laurent_(laurent) {}

  static Poly constant(std::vector<std::string> vars, bool laurent, const Scalar& c) {
    Poly p(std::move(vars), laurent);
    if (!c.is_zero()) p.terms_[Exponents(p.vars_.size(), 0)] = c;
    return p;
  }

  static Poly variable(std::vector<std::string> vars, bool laurent, size_t index) {
    Poly p(std::move(vars), laurent);
    if (index >= p.vars_.size()) throw std::invalid_argument("Poly: variable index out of range");
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_[e] = Scalar(1);
    return p;
  }

  static Poly monomial(std::vector<std::string> vars, bool laurent, Exponents exps,
                       const Scalar& c) {
    Poly p(std::move(vars), laurent);
    if (exps.size() != p.vars_.size()) throw std::invalid_argument("Poly: exponent arity");
    p.check_exponents(exps);
    if (!c.is_zero()) p.terms_[std::move(exps)] = c;
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  bool laurent() const { return laurent_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool compatible(const Poly& o) const { return vars_ == o.vars_ && laurent_ == o.laurent_; }

  void require_compatible(const Poly& o) const {
    if (!compatible(o)) throw std::invalid_argument("Poly: mismatched variable lists");
  }

  Poly operator-() const {
    Poly r(vars_, laurent_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Poly operator+(const Poly& o) const {
    require_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) {
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
    return r;
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    require_compatible(o);
    Poly r(vars_, laurent_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e(ea.size());
        for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        Scalar c = ca * cb;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
          if (!c.is_zero()) r.terms_[std::move(e)] = c;
        } else {
          it->second += c;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

  bool operator==(const Poly& o) const {
    return vars_ == o.vars_ && laurent_ == o.laurent_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Scalar& c) const {
    Poly r(vars_, laurent_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_[e] = coef * c;
    return r;
  }

  // d/dx_i, term-by-term power rule.  Exact in both polynomial and Laurent mode.
  Poly derivative(size_t i) const {
    if (i >= vars_.size()) throw std::invalid_argument("Poly: derivative index out of range");
    Poly r(vars_, laurent_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponents d = e;
      d[i] -= 1;
      Scalar nc = c * Scalar(e[i]);
      auto it = r.terms_.find(d);
      if (it == r.terms_.end()) r.terms_[std::move(d)] = nc;
      else it->second += nc;
    }
    return r;
  }

  // Substitute exact values for all variables.  Negative exponents require a
  // nonzero base.
  Scalar eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("Poly: eval arity");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (size_t k = 0; k < e.size(); ++k) {
        int n = e[k];
        Scalar base = point[k];
        if (n < 0) {
          base = Scalar(1) / base;
          n = -n;
        }
        for (int j = 0; j < n; ++j) t = t * base;
      }
      acc += t;
    }
    return acc;
  }

  // Nonzero constant content iff the polynomial is a constant.
  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
  }

  const Scalar& leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
    return terms_.rbegin()->second;
  }

  long total_degree() const {
    long d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      long s = 0;
      for (int x : e) s += x;
      if (first || s > d) d = s;
      first = false;
    }
    return d;
  }

  // Componentwise minimum of exponents; identity exponent for the zero polynomial.
  Exponents monomial_content() const {
    Exponents m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (first) {
        m = e;
        first = false;
      } else {
        for (size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
      }
    }
    return m;
  }

  Poly shifted(const Exponents& by) const {
    Poly r(vars_, laurent_);
    for (const auto& [e, c] : terms_) {
      Exponents d(e.size());
      for (size_t k = 0; k < e.size(); ++k) d[k] = e[k] + by[k];
      r.check_exponents(d);
      r.terms_[std::move(d)] = c;
    }
    return r;
  }

  // Canonical printing: terms in descending graded-lex order, explicit * and ^.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono = monomial_str(it->first);
      const Scalar& c = it->second;
      bool negative = false;
      std::string piece;
      if (c.needs_parens()) {
        piece = "(" + c.str() + ")";
        if (!mono.empty()) piece += "*" + mono;
      } else {
        std::string cs = c.str();
        if (!cs.empty() && cs[0] == '-') {
          negative = true;
          cs = cs.substr(1);
        }
        if (mono.empty()) {
          piece = cs;
        } else if (cs == "1") {
          piece = mono;
        } else {
          piece = cs + "*" + mono;
        }
      }
      if (out.empty()) {
        out = (negative ? "-" : "") + piece;
      } else {
        out += (negative ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  std::string monomial_str(const Exponents& e) const {
    std::string out;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars_[k];
      if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
    return out;
  }

  void check_exponents(const Exponents& e) const {
    if (laurent_) return;
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("Poly: negative exponent outside Laurent mode");
    }
  }

  std::vector<std::string> vars_;
  bool laurent_ = false;
  TermMap terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Poly& p) { return p.str(); }
inline Poly scale(const Poly& p, const Scalar& c) { return p.scaled(c); }
inline Poly derivative(const Poly& p, size_t i) { return p.derivative(i); }

// Context propagation: build related ring elements from any value (zero
// included), since Poly carries its variable list and mode.
inline Poly ring_zero_like(const Poly& p) { return Poly(p.vars(), p.laurent()); }
inline Poly ring_one_like(const Poly& p) {
  return Poly::constant(p.vars(), p.laurent(), Scalar(1));
}
inline Poly ring_constant_like(const Poly& p, const Scalar& c) {
  return Poly::constant(p.vars(), p.laurent(), c);
}
inline Poly ring_variable_like(const Poly& p, size_t i) {
  return Poly::variable(p.vars(), p.laurent(), i);
}

}  // namespace pgcheck
