#pragma once

// Multivector fields and differential forms with exact coefficients on one
// affine chart.  The coefficient ring R is Poly (polynomial or Laurent) or
// RatFunc; every field keeps a zero coefficient around as ring context.
//
// Conventions, shared with the exterior module and pinned here once:
//  * the field bracket on decomposables is
//      [X_1^..^X_p, Y_1^..^Y_q] = sum (-1)^{s+t} [X_s,Y_t] ^ rest,
//    with [X, f] = X(f) and [f, g] = 0;
//  * <sharp(pi, xi), eta> = pi(xi, eta);
//  * the interior product contracts the first slot, and
//    iota_{X^Y} phi = iota_Y iota_X phi = phi(X, Y, .);
//  * multivector/form evaluation is the determinant pairing;
//  * under these conventions the bracket square of a bivector eats two extra
//    factors relative to the Jacobiator of its Poisson bracket:
//      [pi,pi](df,dg,dh) = 2 Jac(f,g,h),
//    and for the inverse of a twisted symplectic form the closed identity is
//      [pi,pi] = -2 (wedge^3 sharp) phi.
//    The -2 is frozen below (kTwistFactor) and anchored by the nondegenerate
//    fixtures in the test suite.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/lie.hpp"
#include "pgcheck/multivector.hpp"
#include "pgcheck/poly.hpp"
#include "pgcheck/ratfunc.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

inline constexpr long kTwistFactor = -2;

enum class Variance { multivector, form };

template <class R>
struct PolyField {
  std::vector<std::string> chart;
  Variance variance = Variance::multivector;
  int grade = 0;
  std::map<IndexTuple, R> terms;
  R zero;  // ring context (variable list, mode)

  PolyField() = default;
  // Grades above the chart dimension are allowed but force the zero field
  // (no strictly increasing tuple exists), which intermediate results use.
  PolyField(std::vector<std::string> chart_, Variance v, int g, R zero_)
      : chart(std::move(chart_)), variance(v), grade(g), zero(std::move(zero_)) {
    if (g < 0) throw std::invalid_argument("PolyField: negative grade");
  }

  size_t dim() const { return chart.size(); }
  bool is_zero() const { return terms.empty(); }

  void require_chart(const PolyField& o) const {
    if (chart != o.chart || variance != o.variance)
      throw std::invalid_argument("PolyField: chart or variance mismatch");
  }

  void add_term(IndexTuple t, const R& c) {
    if (static_cast<int>(t.size()) != grade)
      throw std::invalid_argument("PolyField: tuple length != grade");
    using pgcheck::is_zero;
    if (is_zero(c)) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(std::move(t), c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  const R& coeff(const IndexTuple& t) const {
    auto it = terms.find(t);
    return it == terms.end() ? zero : it->second;
  }

  PolyField operator-() const {
    PolyField r(chart, variance, grade, zero);
    for (const auto& [t, c] : terms) r.terms.emplace(t, -c);
    return r;
  }
  PolyField operator+(const PolyField& o) const {
    require_chart(o);
    if (grade != o.grade) throw std::invalid_argument("PolyField: grade mismatch in sum");
    PolyField r = *this;
    for (const auto& [t, c] : o.terms) r.add_term(t, c);
    return r;
  }
  PolyField operator-(const PolyField& o) const { return *this + (-o); }
  PolyField& operator+=(const PolyField& o) { *this = *this + o; return *this; }
  PolyField& operator-=(const PolyField& o) { *this = *this - o; return *this; }

  bool operator==(const PolyField& o) const {
    if (chart != o.chart || variance != o.variance || grade != o.grade) return false;
    PolyField diff = *this - o;
    return diff.is_zero();
  }
  bool operator!=(const PolyField& o) const { return !(*this == o); }

  PolyField scaled(const Scalar& c) const {
    PolyField r(chart, variance, grade, zero);
    if (c.is_zero()) return r;
    for (const auto& [t, coeff_] : terms) r.add_term(t, scale(coeff_, c));
    return r;
  }

  PolyField times(const R& f) const {
    PolyField r(chart, variance, grade, zero);
    for (const auto& [t, c] : terms) r.add_term(t, c * f);
    return r;
  }

  std::string str() const {
    if (terms.empty()) return "0";
    const char* prefix = variance == Variance::multivector ? "D" : "d";
    std::string out;
    for (const auto& [t, c] : terms) {
      std::string mono;
      for (int idx : t) {
        if (!mono.empty()) mono += "^";
        mono += prefix + chart[static_cast<size_t>(idx)];
      }
      std::string piece = "(" + to_string(c) + ")";
      if (!mono.empty()) piece += "*" + mono;
      out += out.empty() ? piece : " + " + piece;
    }
    return out;
  }
};

template <class R>
PolyField<R> pf_zero(const std::vector<std::string>& chart, Variance v, int grade,
                     const R& zero) {
  return PolyField<R>(chart, v, grade, zero);
}

template <class R>
PolyField<R> pf_function(const std::vector<std::string>& chart, Variance v, const R& f) {
  PolyField<R> r(chart, v, 0, ring_zero_like(f));
  r.add_term({}, f);
  return r;
}

template <class R>
PolyField<R> pf_basis(const std::vector<std::string>& chart, Variance v, int i, const R& zero) {
  PolyField<R> r(chart, v, 1, zero);
  r.add_term({i}, ring_one_like(zero));
  return r;
}

template <class R>
PolyField<R> wedge_field(const PolyField<R>& a, const PolyField<R>& b) {
  a.require_chart(b);
  PolyField<R> r(a.chart, a.variance, a.grade + b.grade, a.zero);
  for (const auto& [ta, ca] : a.terms)
    for (const auto& [tb, cb] : b.terms) {
      IndexTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      int sign = sort_tuple_sign(t);
      if (sign == 0) continue;
      R c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(std::move(t), c);
    }
  return r;
}

namespace detail {

template <class R>
R det_laplace(const std::vector<std::vector<R>>& m, const R& /*zero*/, size_t size) {
  if (size == 1) return m[0][0];
  // expand along the first row
  std::vector<std::vector<R>> sub(size - 1, std::vector<R>(size - 1, m[0][0]));
  R acc = m[0][0] - m[0][0];
  for (size_t col = 0; col < size; ++col) {
    for (size_t i = 1; i < size; ++i) {
      size_t cc = 0;
      for (size_t j = 0; j < size; ++j) {
        if (j == col) continue;
        sub[i - 1][cc++] = m[i][j];
      }
    }
    R minor = det_laplace(sub, m[0][0], size - 1);
    R term = m[0][col] * minor;
    acc = (col % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

// Determinant pairing of a grade-p field against p fields of grade one and
// the opposite variance.
template <class R>
R eval_field(const PolyField<R>& P, const std::vector<PolyField<R>>& args) {
  if (static_cast<int>(args.size()) != P.grade)
    throw std::invalid_argument("eval_field: arity mismatch");
  R acc = P.zero;
  for (const auto& [t, c] : P.terms) {
    size_t p = t.size();
    if (p == 0) {
      acc = acc + c;
      continue;
    }
    std::vector<std::vector<R>> m(p, std::vector<R>(p, P.zero));
    for (size_t s = 0; s < p; ++s)
      for (size_t u = 0; u < p; ++u) m[s][u] = args[s].coeff({t[u]});
    acc = acc + c * detail::det_laplace(m, P.zero, p);
  }
  return acc;
}

// Interior product by a grade-one field of the opposite variance; contracts
// the first slot.
template <class R>
PolyField<R> interior(const PolyField<R>& X, const PolyField<R>& P) {
  if (X.grade != 1) throw std::invalid_argument("interior: grade-one contraction only");
  if (X.variance == P.variance)
    throw std::invalid_argument("interior: contraction needs the opposite variance");
  if (P.grade == 0) return pf_zero(P.chart, P.variance, 0, P.zero);
  PolyField<R> r(P.chart, P.variance, P.grade - 1, P.zero);
  for (const auto& [t, c] : P.terms) {
    for (size_t pos = 0; pos < t.size(); ++pos) {
      const R& xv = X.coeff({t[pos]});
      using pgcheck::is_zero;
      if (is_zero(xv)) continue;
      IndexTuple rest;
      rest.reserve(t.size() - 1);
      for (size_t u = 0; u < t.size(); ++u)
        if (u != pos) rest.push_back(t[u]);
      R v = c * xv;
      if (pos % 2 != 0) v = -v;
      r.add_term(std::move(rest), v);
    }
  }
  return r;
}

// iota_{X^Y} phi = iota_Y (iota_X phi) = phi(X, Y, ...)
template <class R>
PolyField<R> interior_pair(const PolyField<R>& X, const PolyField<R>& Y, const PolyField<R>& P) {
  return interior(Y, interior(X, P));
}

template <class R>
PolyField<R> de_rham(const PolyField<R>& w) {
  if (w.variance != Variance::form) throw std::invalid_argument("de_rham: forms only");
  PolyField<R> r(w.chart, Variance::form, w.grade + 1, w.zero);
  for (const auto& [t, c] : w.terms) {
    for (size_t k = 0; k < w.dim(); ++k) {
      R dc = derivative(c, k);
      using pgcheck::is_zero;
      if (is_zero(dc)) continue;
      IndexTuple tup;
      tup.reserve(t.size() + 1);
      tup.push_back(static_cast<int>(k));
      tup.insert(tup.end(), t.begin(), t.end());
      int sign = sort_tuple_sign(tup);
      if (sign == 0) continue;
      if (sign < 0) dc = -dc;
      r.add_term(std::move(tup), dc);
    }
  }
  return r;
}

// d applied to a function (a grade-0 value in the coefficient ring).
template <class R>
PolyField<R> d_function(const std::vector<std::string>& chart, const R& f) {
  PolyField<R> r(chart, Variance::form, 1, ring_zero_like(f));
  for (size_t k = 0; k < chart.size(); ++k) r.add_term({static_cast<int>(k)}, derivative(f, k));
  return r;
}

// Cartan formula L_X = iota_X d + d iota_X on forms.
template <class R>
PolyField<R> lie_derivative(const PolyField<R>& X, const PolyField<R>& w) {
  return interior(X, de_rham(w)) + de_rham(interior(X, w));
}

// sharp(pi): 1-forms to vector fields, <sharp(xi), eta> = pi(xi, eta).
template <class R>
PolyField<R> sharp(const PolyField<R>& pi, const PolyField<R>& xi) {
  if (pi.grade != 2 || pi.variance != Variance::multivector)
    throw std::invalid_argument("sharp: bivector expected");
  if (xi.grade != 1 || xi.variance != Variance::form)
    throw std::invalid_argument("sharp: one-form expected");
  if (pi.chart != xi.chart) throw std::invalid_argument("sharp: chart mismatch");
  PolyField<R> r(pi.chart, Variance::multivector, 1, pi.zero);
  for (const auto& [t, c] : pi.terms) {
    int a = t[0], b = t[1];
    r.add_term({b}, c * xi.coeff({a}));
    r.add_term({a}, -(c * xi.coeff({b})));
  }
  return r;
}

// Full antisymmetric matrix of the bivector: M[b][a] = Pi^{ab}, so that
// sharp(xi) = M xi in coordinates.
template <class R>
Mat<R> sharp_matrix(const PolyField<R>& pi) {
  size_t n = pi.dim();
  Mat<R> m = mat_filled(n, n, pi.zero);
  for (const auto& [t, c] : pi.terms) {
    size_t a = static_cast<size_t>(t[0]), b = static_cast<size_t>(t[1]);
    m[b][a] = m[b][a] + c;
    m[a][b] = m[a][b] - c;
  }
  return m;
}

// --- the Gerstenhaber engine -------------------------------------------------
//
// One decomposable-term bracket routine shared by the tangent algebroid
// (vector fields; anchor = identity) and cotangent algebroids (1-forms with a
// Koszul-type bracket; anchor = sharp).  Legs of each term are the grade-one
// basis fields, with the term's coefficient folded into the first leg.

template <class R>
using LegBracket = std::function<PolyField<R>(const PolyField<R>&, const PolyField<R>&)>;
template <class R>
using AnchorDerivative = std::function<R(const PolyField<R>&, const R&)>;

template <class R>
PolyField<R> gerstenhaber_bracket(const PolyField<R>& P, const PolyField<R>& Q,
                                  const LegBracket<R>& leg_bracket,
                                  const AnchorDerivative<R>& anchor) {
  P.require_chart(Q);
  int p = P.grade, q = Q.grade;
  int rg = p + q - 1;
  PolyField<R> r(P.chart, P.variance, rg >= 0 ? rg : 0, P.zero);
  if (p == 0 && q == 0) return r;

  if (q == 0) {
    // [X_1^..^X_p, g] = sum_s (-1)^{p-1-s} X_s(g) X_1^..(s omitted)..^X_p
    for (const auto& [I, a] : P.terms) {
      for (const auto& [J, g] : Q.terms) {
        (void)J;
        for (int s = 0; s < p; ++s) {
          PolyField<R> leg = pf_basis(P.chart, P.variance, I[static_cast<size_t>(s)], P.zero);
          R v = anchor(leg, g);
          using pgcheck::is_zero;
          if (is_zero(v)) continue;
          v = v * a;
          IndexTuple rest;
          for (int u = 0; u < p; ++u)
            if (u != s) rest.push_back(I[static_cast<size_t>(u)]);
          int sign = sort_tuple_sign(rest);  // already increasing, kept for safety
          int par = ((p - 1 - s) % 2 == 0) ? 1 : -1;
          if (sign * par < 0) v = -v;
          r.add_term(std::move(rest), v);
        }
      }
    }
    return r;
  }
  if (p == 0) {
    // graded antisymmetry: [f, Q] = (-1)^q [Q, f]
    PolyField<R> rev = gerstenhaber_bracket(Q, P, leg_bracket, anchor);
    return (q % 2 == 0) ? rev : -rev;
  }

  for (const auto& [I, a] : P.terms) {
    for (const auto& [J, b] : Q.terms) {
      for (int s = 0; s < p; ++s) {
        for (int t = 0; t < q; ++t) {
          PolyField<R> left = pf_basis(P.chart, P.variance, I[static_cast<size_t>(s)], P.zero);
          PolyField<R> right = pf_basis(P.chart, P.variance, J[static_cast<size_t>(t)], P.zero);
          if (s == 0) left = left.times(a);
          if (t == 0) right = right.times(b);
          PolyField<R> br = leg_bracket(left, right);
          if (br.is_zero()) continue;
          IndexTuple restP, restQ;
          for (int u = 0; u < p; ++u)
            if (u != s) restP.push_back(I[static_cast<size_t>(u)]);
          for (int u = 0; u < q; ++u)
            if (u != t) restQ.push_back(J[static_cast<size_t>(u)]);
          int outer = ((s + t) % 2 == 0) ? 1 : -1;
          for (const auto& [bt, bc] : br.terms) {
            IndexTuple tup;
            tup.reserve(1 + restP.size() + restQ.size());
            tup.push_back(bt[0]);
            tup.insert(tup.end(), restP.begin(), restP.end());
            tup.insert(tup.end(), restQ.begin(), restQ.end());
            int sign = sort_tuple_sign(tup);
            if (sign == 0) continue;
            R v = bc;
            if (s != 0) v = v * a;
            if (t != 0) v = v * b;
            if (outer * sign < 0) v = -v;
            r.add_term(std::move(tup), v);
          }
        }
      }
    }
  }
  return r;
}

// Lie bracket of two vector fields (grade-one multivector fields).
template <class R>
PolyField<R> field_bracket(const PolyField<R>& u, const PolyField<R>& v) {
  if (u.grade != 1 || v.grade != 1) throw std::invalid_argument("field_bracket: grade one");
  PolyField<R> r(u.chart, Variance::multivector, 1, u.zero);
  for (size_t a = 0; a < u.dim(); ++a) {
    const R& ua = u.coeff({static_cast<int>(a)});
    const R& va = v.coeff({static_cast<int>(a)});
    using pgcheck::is_zero;
    bool uz = is_zero(ua), vz = is_zero(va);
    if (uz && vz) continue;
    for (size_t b = 0; b < u.dim(); ++b) {
      R acc = u.zero;
      if (!uz) acc = acc + ua * derivative(v.coeff({static_cast<int>(b)}), a);
      if (!vz) acc = acc - va * derivative(u.coeff({static_cast<int>(b)}), a);
      r.add_term({static_cast<int>(b)}, acc);
    }
  }
  return r;
}

// X(f) for a vector field X.
template <class R>
R field_derivative(const PolyField<R>& X, const R& f) {
  R acc = X.zero;
  for (size_t a = 0; a < X.dim(); ++a) {
    const R& xa = X.coeff({static_cast<int>(a)});
    using pgcheck::is_zero;
    if (is_zero(xa)) continue;
    acc = acc + xa * derivative(f, a);
  }
  return acc;
}

// The Schouten-Nijenhuis bracket of multivector fields.
template <class R>
PolyField<R> sn_bracket(const PolyField<R>& P, const PolyField<R>& Q) {
  if (P.variance != Variance::multivector || Q.variance != Variance::multivector)
    throw std::invalid_argument("sn_bracket: multivector fields only");
  return gerstenhaber_bracket<R>(
      P, Q, [](const PolyField<R>& a, const PolyField<R>& b) { return field_bracket(a, b); },
      [](const PolyField<R>& x, const R& f) { return field_derivative(x, f); });
}

template <class R>
CheckReport is_poisson(const PolyField<R>& pi) {
  PolyField<R> s = sn_bracket(pi, pi);
  if (s.is_zero()) return CheckReport::pass("poisson");
  return CheckReport::fail("poisson", "[pi,pi] = " + s.str());
}

template <class R>
PolyField<R> lichnerowicz(const PolyField<R>& pi, const PolyField<R>& P) {
  return sn_bracket(pi, P);
}

// Koszul bracket of one-forms induced by a bivector.
template <class R>
PolyField<R> koszul_bracket(const PolyField<R>& pi, const PolyField<R>& xi,
                            const PolyField<R>& eta) {
  PolyField<R> lhs = lie_derivative(sharp(pi, xi), eta) - lie_derivative(sharp(pi, eta), xi);
  R pairing = eval_field(pi, {xi, eta});
  return lhs - d_function(pi.chart, pairing);
}

// Koszul bracket with the closed-three-form correction term.
template <class R>
PolyField<R> twisted_koszul_bracket(const PolyField<R>& pi, const PolyField<R>& phi,
                                    const PolyField<R>& xi, const PolyField<R>& eta) {
  return koszul_bracket(pi, xi, eta) + interior_pair(sharp(pi, xi), sharp(pi, eta), phi);
}

// Gerstenhaber bracket on forms regarded as sections of a cotangent algebroid
// with anchor sharp(pi) and the (possibly twisted) Koszul bracket on legs.
template <class R>
PolyField<R> form_algebroid_bracket(const PolyField<R>& pi, const PolyField<R>* phi,
                                    const PolyField<R>& P, const PolyField<R>& Q) {
  LegBracket<R> lb;
  if (phi == nullptr) {
    lb = [&pi](const PolyField<R>& a, const PolyField<R>& b) {
      return koszul_bracket(pi, a, b);
    };
  } else {
    lb = [&pi, phi](const PolyField<R>& a, const PolyField<R>& b) {
      return twisted_koszul_bracket(pi, *phi, a, b);
    };
  }
  AnchorDerivative<R> an = [&pi](const PolyField<R>& xi, const R& f) {
    return field_derivative(sharp(pi, xi), f);
  };
  return gerstenhaber_bracket<R>(P, Q, lb, an);
}

// (wedge^3 sharp) phi: the trivector (xi,eta,zeta) -> phi(sharp xi, sharp eta, sharp zeta).
template <class R>
PolyField<R> wedge3_sharp(const PolyField<R>& pi, const PolyField<R>& phi) {
  if (phi.grade != 3 || phi.variance != Variance::form)
    throw std::invalid_argument("wedge3_sharp: three-form expected");
  size_t n = pi.dim();
  std::vector<PolyField<R>> images;
  images.reserve(n);
  for (size_t a = 0; a < n; ++a)
    images.push_back(sharp(pi, pf_basis(pi.chart, Variance::form, static_cast<int>(a), pi.zero)));
  PolyField<R> w(pi.chart, Variance::multivector, 3, pi.zero);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        R v = eval_field(phi, {images[a], images[b], images[c]});
        w.add_term({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}, v);
      }
  return w;
}

// Twisted Poisson verification: d phi = 0 and [pi,pi] = kTwistFactor * (wedge^3 sharp) phi.
template <class R>
CheckReport check_twisted(const PolyField<R>& pi, const PolyField<R>& phi) {
  std::vector<CheckReport> subs;
  PolyField<R> dphi = de_rham(phi);
  if (dphi.is_zero())
    subs.push_back(CheckReport::pass("phi_closed"));
  else
    subs.push_back(CheckReport::fail("phi_closed", "d(phi) = " + dphi.str()));
  PolyField<R> lhs = sn_bracket(pi, pi);
  PolyField<R> rhs = wedge3_sharp(pi, phi).scaled(Scalar(kTwistFactor));
  PolyField<R> res = lhs - rhs;
  if (res.is_zero())
    subs.push_back(CheckReport::pass("twist_identity"));
  else
    subs.push_back(CheckReport::fail("twist_identity",
                                     "[pi,pi] - " + std::to_string(kTwistFactor) +
                                         "*(^3 sharp)phi = " + res.str()));
  return aggregate("twisted_poisson", std::move(subs));
}

// The three structures on one-forms attached to a twisted pair (pi, phi).
template <class R>
struct TwistedCotangent {
  PolyField<R> pi, phi;

  PolyField<R> bracket(const PolyField<R>& xi, const PolyField<R>& eta) const {
    return twisted_koszul_bracket(pi, phi, xi, eta);
  }
  PolyField<R> anchor(const PolyField<R>& xi) const { return sharp(pi, xi); }
  PolyField<R> delta_function(const R& f) const { return d_function(pi.chart, f); }
  PolyField<R> delta_one_form(const PolyField<R>& eta) const {
    return de_rham(eta) - interior(sharp(pi, eta), phi);
  }
  // Leibniz extension to two-forms: split f dx_a ^ dx_b = (f dx_a) ^ dx_b.
  PolyField<R> delta_two_form(const PolyField<R>& w) const {
    if (w.grade != 2) throw std::invalid_argument("delta_two_form: grade-two form expected");
    PolyField<R> out(pi.chart, Variance::form, 3, pi.zero);
    for (const auto& [t, c] : w.terms) {
      PolyField<R> first(pi.chart, Variance::form, 1, pi.zero);
      first.add_term({t[0]}, c);
      PolyField<R> second = pf_basis(pi.chart, Variance::form, t[1], pi.zero);
      out += wedge_field(delta_one_form(first), second);
      out -= wedge_field(first, delta_one_form(second));
    }
    return out;
  }
};

template <class R>
TwistedCotangent<R> twisted_cotangent_structures(const PolyField<R>& pi,
                                                 const PolyField<R>& phi) {
  return TwistedCotangent<R>{pi, phi};
}

// Differential datum of the dual algebroid construction: the action of a
// 2-differential on coordinate functions and on coordinate vector fields.
template <class R>
struct VectorDifferential {
  std::vector<PolyField<R>> on_coords;  // grade one
  std::vector<PolyField<R>> on_fields;  // grade two
};

template <class R>
VectorDifferential<R> lichnerowicz_datum(const PolyField<R>& pi) {
  VectorDifferential<R> d;
  for (size_t a = 0; a < pi.dim(); ++a) {
    R xa = ring_variable_like(pi.zero, a);
    d.on_coords.push_back(
        sn_bracket(pi, pf_function(pi.chart, Variance::multivector, xa)));
    d.on_fields.push_back(
        sn_bracket(pi, pf_basis(pi.chart, Variance::multivector, static_cast<int>(a), pi.zero)));
  }
  return d;
}

// Anchor of the dual algebroid: <rho(xi), f> = <xi, delta f>.
template <class R>
PolyField<R> dual_algebroid_anchor(const VectorDifferential<R>& d,
                                   const std::vector<std::string>& chart,
                                   const PolyField<R>& xi) {
  PolyField<R> r(chart, Variance::multivector, 1, xi.zero);
  for (size_t a = 0; a < chart.size(); ++a) {
    R acc = xi.zero;
    for (size_t b = 0; b < chart.size(); ++b)
      acc = acc + xi.coeff({static_cast<int>(b)}) * d.on_coords[a].coeff({static_cast<int>(b)});
    r.add_term({static_cast<int>(a)}, acc);
  }
  return r;
}

// Bracket on one-forms recovered from the differential datum, evaluated on
// coordinate fields.  The bivector evaluation is oriented so that the
// coboundary datum of a Poisson bivector reproduces its Koszul bracket.
template <class R>
PolyField<R> dual_algebroid_bracket(const VectorDifferential<R>& d,
                                    const std::vector<std::string>& chart,
                                    const PolyField<R>& xi, const PolyField<R>& eta) {
  PolyField<R> rho_xi = dual_algebroid_anchor(d, chart, xi);
  PolyField<R> rho_eta = dual_algebroid_anchor(d, chart, eta);
  PolyField<R> r(chart, Variance::form, 1, xi.zero);
  for (size_t k = 0; k < chart.size(); ++k) {
    R v = eval_field(d.on_fields[k], {eta, xi});
    v = v + field_derivative(rho_xi, eta.coeff({static_cast<int>(k)}));
    v = v - field_derivative(rho_eta, xi.coeff({static_cast<int>(k)}));
    r.add_term({static_cast<int>(k)}, v);
  }
  return r;
}

// Poisson-action diagram: rho is a Lie algebra action by polynomial vector
// fields; the check is rho(delta X) = [pi, rho(X)] for every basis X.
template <class R>
CheckReport poisson_action_check(const LieAlgebra& L, const std::vector<PolyField<R>>& rho,
                                 const Cobracket& delta, const PolyField<R>& pi) {
  if (rho.size() != L.dim) throw std::invalid_argument("poisson_action_check: rho arity");
  std::vector<CheckReport> subs;
  {
    CheckReport hom = CheckReport::pass("action_homomorphism");
    for (size_t i = 0; i < L.dim && hom.passed(); ++i)
      for (size_t j = i + 1; j < L.dim; ++j) {
        PolyField<R> lhs = field_bracket(rho[i], rho[j]);
        PolyField<R> rhs = pf_zero(pi.chart, Variance::multivector, 1, pi.zero);
        for (size_t k = 0; k < L.dim; ++k) rhs += rho[k].scaled(L.c[i][j][k]);
        PolyField<R> res = lhs - rhs;
        if (!res.is_zero()) {
          hom = CheckReport::fail("action_homomorphism",
                                  "rho[" + L.basis_names[i] + "," + L.basis_names[j] +
                                      "] - [rho,rho] = " + res.str());
          break;
        }
      }
    subs.push_back(std::move(hom));
  }
  if (!subs[0].passed()) {
    CheckReport out = aggregate("poisson_action", std::move(subs));
    out.status = Status::error;
    out.detail = "rho is not a Lie algebra action";
    return out;
  }
  CheckReport diag = CheckReport::pass("diagram");
  for (size_t k = 0; k < L.dim && diag.passed(); ++k) {
    PolyField<R> lhs = pf_zero(pi.chart, Variance::multivector, 2, pi.zero);
    for (const auto& [t, c] : delta.delta[k].terms)
      lhs += wedge_field(rho[static_cast<size_t>(t[0])], rho[static_cast<size_t>(t[1])]).scaled(c);
    PolyField<R> rhs = sn_bracket(pi, rho[k]);
    PolyField<R> res = lhs - rhs;
    if (!res.is_zero())
      diag = CheckReport::fail("diagram", "on " + L.basis_names[k] + ": rho(delta X) - [pi, rho X] = " +
                                              res.str());
  }
  subs.push_back(std::move(diag));
  return aggregate("poisson_action", std::move(subs));
}

// Lifts for moving polynomial data into the rational-function coefficient ring.
inline RatFunc lift_to_ratfunc(const Poly& p) {
  if (p.laurent()) throw std::invalid_argument("lift_to_ratfunc: laurent polynomials unsupported");
  return RatFunc(p);
}

inline PolyField<RatFunc> lift_to_ratfunc(const PolyField<Poly>& f) {
  PolyField<RatFunc> r(f.chart, f.variance, f.grade, lift_to_ratfunc(f.zero));
  for (const auto& [t, c] : f.terms) r.add_term(t, lift_to_ratfunc(c));
  return r;
}

}  // namespace pgcheck
