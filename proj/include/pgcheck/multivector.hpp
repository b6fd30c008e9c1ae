#pragma once

// Sparse exterior algebra over an n-dimensional space: maps from strictly
// increasing index tuples to coefficients, one grade per value.
//
// Sign conventions, pinned once for the whole library:
//  * wedge reorders factors to strictly increasing index order and picks up
//    the sorting permutation's parity;
//  * the bracket extending a Lie bracket to the exterior algebra is, on
//    decomposables,
//        [x_1^...^x_p, y_1^...^y_q]
//          = sum_{s,t} (-1)^{s+t} [x_s, y_t] ^ x_1^..^{x_s omitted}..^x_p
//                                           ^ y_1^..^{y_t omitted}..^y_q
//    (1-based s, t), which restricts to the Lie bracket in degree one and
//    satisfies  [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]  and
//    [P, Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R];
//  * grade-0 elements bracket to zero (no anchor on a point);
//  * the pairing of wedges of vectors with wedges of covectors is the plain
//    determinant pairing, without factorial factors.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/lie.hpp"
#include "pgcheck/matrix.hpp"
#include "pgcheck/scalar.hpp"

namespace pgcheck {

using IndexTuple = std::vector<int>;

// Sorts `t` in place; returns 0 if a repeated index makes the wedge vanish,
// otherwise the parity sign (+1/-1) of the sorting permutation.
inline int sort_tuple_sign(IndexTuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && t[j - 1] == t[j]) return 0;
  }
  return sign;
}

template <class S = Scalar>
struct Multivector {
  size_t dim = 0;
  int grade = 0;
  std::map<IndexTuple, S> terms;  // strictly increasing tuples of length == grade

  Multivector() = default;
  Multivector(size_t dim_, int grade_) : dim(dim_), grade(grade_) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(IndexTuple t, const S& coeff) {
    if (static_cast<int>(t.size()) != grade)
      throw std::invalid_argument("Multivector: tuple length != grade");
    if (is_zero_coeff(coeff)) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
      terms.emplace(std::move(t), coeff);
    } else {
      it->second = it->second + coeff;
      if (is_zero_coeff(it->second)) terms.erase(it);
    }
  }

  Multivector operator-() const {
    Multivector r(dim, grade);
    for (const auto& [t, c] : terms) r.terms.emplace(t, -c);
    return r;
  }

  Multivector operator+(const Multivector& o) const {
    require_same_shape(o);
    Multivector r = *this;
    for (const auto& [t, c] : o.terms) r.add_term(t, c);
    return r;
  }

  Multivector operator-(const Multivector& o) const { return *this + (-o); }

  Multivector& operator+=(const Multivector& o) { *this = *this + o; return *this; }
  Multivector& operator-=(const Multivector& o) { *this = *this - o; return *this; }

  bool operator==(const Multivector& o) const {
    return dim == o.dim && grade == o.grade && terms == o.terms;
  }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  Multivector scaled(const Scalar& c) const {
    Multivector r(dim, grade);
    if (c.is_zero()) return r;
    for (const auto& [t, coeff] : terms) {
      S v = scale(coeff, c);
      if (!is_zero_coeff(v)) r.terms.emplace(t, v);
    }
    return r;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms) {
      std::string mono;
      for (int idx : t) {
        if (!mono.empty()) mono += "^";
        mono += names[static_cast<size_t>(idx)];
      }
      std::string cs = to_string(c);
      std::string piece;
      if (mono.empty()) {
        piece = "(" + cs + ")";
      } else if (cs == "1") {
        piece = mono;
      } else {
        piece = "(" + cs + ")*" + mono;
      }
      out += out.empty() ? piece : " + " + piece;
    }
    return out;
  }

  void require_same_shape(const Multivector& o) const {
    if (dim != o.dim || grade != o.grade)
      throw std::invalid_argument("Multivector: shape mismatch");
  }

 private:
  static bool is_zero_coeff(const S& c) {
    using pgcheck::is_zero;
    return is_zero(c);
  }
};

template <class S>
Multivector<S> mv_zero(size_t dim, int grade) {
  return Multivector<S>(dim, grade);
}

// Basis element e_i as a grade-1 multivector.
template <class S>
Multivector<S> mv_basis(size_t dim, int i, const S& one) {
  Multivector<S> r(dim, 1);
  r.add_term({i}, one);
  return r;
}

inline Multivector<Scalar> mv_basis(size_t dim, int i) {
  return mv_basis<Scalar>(dim, i, Scalar(1));
}

// Grade-1 multivector from a coordinate vector.
inline Multivector<Scalar> mv_from_vector(const std::vector<Scalar>& x) {
  Multivector<Scalar> r(x.size(), 1);
  for (size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) r.add_term({static_cast<int>(k)}, x[k]);
  return r;
}

template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.dim != b.dim) throw std::invalid_argument("wedge: mismatched parents");
  Multivector<S> r(a.dim, a.grade + b.grade);
  for (const auto& [ta, ca] : a.terms) {
    for (const auto& [tb, cb] : b.terms) {
      IndexTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      int sign = sort_tuple_sign(t);
      if (sign == 0) continue;
      S c = ca * cb;
      r.add_term(std::move(t), sign < 0 ? -c : c);
    }
  }
  return r;
}

template <class S>
Multivector<S> wedge_all(const std::vector<Multivector<S>>& factors, size_t dim) {
  if (factors.empty()) throw std::invalid_argument("wedge_all: empty");
  Multivector<S> acc = factors[0];
  if (acc.dim != dim) throw std::invalid_argument("wedge_all: dim");
  for (size_t k = 1; k < factors.size(); ++k) acc = wedge(acc, factors[k]);
  return acc;
}

// The graded bracket on the exterior algebra of a Lie algebra, extended
// fiberwise over any coefficient ring S that Scalar acts on.
template <class S>
Multivector<S> schouten(const LieAlgebra& L, const Multivector<S>& P, const Multivector<S>& Q) {
  if (P.dim != L.dim || Q.dim != L.dim)
    throw std::invalid_argument("schouten: mismatched parents");
  int p = P.grade, q = Q.grade;
  Multivector<S> r(L.dim, p + q - 1 >= 0 ? p + q - 1 : 0);
  if (p == 0 || q == 0) return r;  // scalars are central over a point
  for (const auto& [I, a] : P.terms) {
    for (const auto& [J, b] : Q.terms) {
      S ab = a * b;
      for (int s = 0; s < p; ++s) {
        for (int t = 0; t < q; ++t) {
          size_t i = static_cast<size_t>(I[static_cast<size_t>(s)]);
          size_t j = static_cast<size_t>(J[static_cast<size_t>(t)]);
          int outer = ((s + t) % 2 == 0) ? 1 : -1;
          for (size_t k = 0; k < L.dim; ++k) {
            const Scalar& ck = L.c[i][j][k];
            if (ck.is_zero()) continue;
            IndexTuple tup;
            tup.reserve(static_cast<size_t>(p + q - 1));
            tup.push_back(static_cast<int>(k));
            for (int s2 = 0; s2 < p; ++s2)
              if (s2 != s) tup.push_back(I[static_cast<size_t>(s2)]);
            for (int t2 = 0; t2 < q; ++t2)
              if (t2 != t) tup.push_back(J[static_cast<size_t>(t2)]);
            int sign = sort_tuple_sign(tup);
            if (sign == 0) continue;
            S v = scale(ab, ck);
            if (outer * sign < 0) v = -v;
            r.add_term(std::move(tup), v);
          }
        }
      }
    }
  }
  return r;
}

// Functorial action of a linear map on each wedge factor.  The matrix maps
// source coordinates to target coordinates (columns indexed by the source).
template <class S, class T>
Multivector<S> apply_linear(const Mat<T>& m, const Multivector<S>& P) {
  if (m.empty() || m[0].size() != P.dim) throw std::invalid_argument("apply_linear: shape");
  size_t out_dim = m.size();
  Multivector<S> r(out_dim, P.grade);
  for (const auto& [t, c] : P.terms) {
    // Expand the image of each leg and walk the cartesian product.
    std::vector<std::vector<std::pair<int, T>>> legs;
    legs.reserve(t.size());
    for (int idx : t) {
      std::vector<std::pair<int, T>> img;
      for (size_t k = 0; k < out_dim; ++k) {
        const T& e = m[k][static_cast<size_t>(idx)];
        if (!is_zero(e)) img.emplace_back(static_cast<int>(k), e);
      }
      legs.push_back(std::move(img));
    }
    if (P.grade == 0) {
      r.add_term(t, c);
      continue;
    }
    std::vector<size_t> pick(legs.size(), 0);
    bool done = false;
    for (const auto& l : legs)
      if (l.empty()) done = true;
    while (!done) {
      IndexTuple tup;
      tup.reserve(legs.size());
      S coeff = c;
      for (size_t li = 0; li < legs.size(); ++li) {
        tup.push_back(legs[li][pick[li]].first);
        coeff = coeff * legs[li][pick[li]].second;
      }
      int sign = sort_tuple_sign(tup);
      if (sign != 0) r.add_term(std::move(tup), sign < 0 ? -coeff : coeff);
      // advance odometer
      size_t li = 0;
      for (; li < legs.size(); ++li) {
        if (++pick[li] < legs[li].size()) break;
        pick[li] = 0;
      }
      if (li == legs.size()) done = true;
    }
  }
  return r;
}

// Determinant pairing of a grade-p multivector with p covectors given as
// dense coordinate rows.
inline Scalar eval_on_covectors(const Multivector<Scalar>& P,
                                const std::vector<std::vector<Scalar>>& xis) {
  if (static_cast<int>(xis.size()) != P.grade)
    throw std::invalid_argument("eval_on_covectors: arity");
  Scalar acc(0);
  for (const auto& [t, c] : P.terms) {
    // det of the p x p matrix xis[s][t_u]
    size_t p = t.size();
    Mat<Scalar> m = mat_filled(p, p, Scalar(0));
    for (size_t s = 0; s < p; ++s)
      for (size_t u = 0; u < p; ++u) m[s][u] = xis[s][static_cast<size_t>(t[u])];
    acc += c * (p == 0 ? Scalar(1) : mat_det(m));
  }
  return acc;
}

// [X, P] for every basis vector X vanishes: the element is invariant.
template <class S>
bool is_ad_invariant(const LieAlgebra& L, const Multivector<S>& P, const S& one,
                     std::string* witness = nullptr) {
  for (size_t k = 0; k < L.dim; ++k) {
    Multivector<S> res = schouten(L, mv_basis<S>(L.dim, static_cast<int>(k), one), P);
    if (!res.is_zero()) {
      if (witness)
        *witness = "[" + L.basis_names[k] + ", -] residual " + res.str(L.basis_names);
      return false;
    }
  }
  return true;
}

inline bool is_ad_invariant(const LieAlgebra& L, const Multivector<Scalar>& P,
                            std::string* witness = nullptr) {
  return is_ad_invariant<Scalar>(L, P, Scalar(1), witness);
}

template <class S>
Multivector<S> mv_cast(const Multivector<Scalar>& P, const S& one) {
  Multivector<S> r(P.dim, P.grade);
  for (const auto& [t, c] : P.terms) r.add_term(t, scale(one, c));
  return r;
}

}  // namespace pgcheck
