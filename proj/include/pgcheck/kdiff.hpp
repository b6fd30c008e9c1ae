#pragma once

// Degree k-1 derivations of the exterior Gerstenhaber algebra of a Lie
// algebra, stored by their action on degree one and extended by the Leibniz
// rule  d(P^Q) = dP^Q + (-1)^{p(k-1)} P^dQ.

#include <string>
#include <vector>

#include "pgcheck/multivector.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

template <class S = Scalar>
struct KDifferential {
  int k = 2;                               // image grade on degree one
  size_t dim = 0;
  std::vector<Multivector<S>> on_basis;    // on_basis[i] = d(e_i), grade k

  static KDifferential zero(size_t dim, int k) {
    KDifferential d;
    d.k = k;
    d.dim = dim;
    d.on_basis.assign(dim, Multivector<S>(dim, k));
    return d;
  }

  Multivector<S> apply_element(const Multivector<S>& x) const {
    if (x.grade != 1) throw std::invalid_argument("KDifferential: element grade");
    Multivector<S> r(dim, k);
    for (const auto& [t, c] : x.terms) {
      Multivector<S> img = on_basis[static_cast<size_t>(t[0])];
      for (auto& [tt, cc] : img.terms) cc = cc * c;
      r += img;
    }
    return r;
  }
};

using CobracketMap = KDifferential<Scalar>;

// Coboundary differential ad(P) = [P, .] restricted to degree one.
template <class S>
KDifferential<S> coboundary_differential(const LieAlgebra& L, const Multivector<S>& P,
                                         const S& one) {
  KDifferential<S> d;
  d.k = P.grade;
  d.dim = L.dim;
  for (size_t i = 0; i < L.dim; ++i)
    d.on_basis.push_back(schouten(L, P, mv_basis<S>(L.dim, static_cast<int>(i), one)));
  return d;
}

inline KDifferential<Scalar> coboundary_differential(const LieAlgebra& L,
                                                     const Multivector<Scalar>& P) {
  return coboundary_differential<Scalar>(L, P, Scalar(1));
}

// Leibniz extension of d to a homogeneous multivector.
template <class S>
Multivector<S> extend_derivation(const KDifferential<S>& d, const Multivector<S>& P) {
  if (P.dim != d.dim) throw std::invalid_argument("extend_derivation: mismatched parents");
  int p = P.grade;
  int out_grade = p + d.k - 1;
  Multivector<S> r(d.dim, out_grade >= 0 ? out_grade : 0);
  if (out_grade < 0) return r;
  if (p == 0) return r;  // derivations kill scalars over a point
  for (const auto& [t, c] : P.terms) {
    for (int s = 0; s < p; ++s) {
      // sign (-1)^{s(k-1)} from moving d across the first s factors
      int par = ((d.k - 1) % 2 != 0) && (s % 2 != 0) ? -1 : 1;
      Multivector<S> img = d.on_basis[static_cast<size_t>(t[static_cast<size_t>(s)])];
      if (img.is_zero()) continue;
      // wedge: e_{t_0} ^ ... ^ e_{t_{s-1}} ^ img ^ e_{t_{s+1}} ^ ...
      for (const auto& [ti, ci] : img.terms) {
        IndexTuple tup;
        tup.reserve(static_cast<size_t>(p - 1) + ti.size());
        for (int u = 0; u < s; ++u) tup.push_back(t[static_cast<size_t>(u)]);
        tup.insert(tup.end(), ti.begin(), ti.end());
        for (int u = s + 1; u < p; ++u) tup.push_back(t[static_cast<size_t>(u)]);
        int sign = sort_tuple_sign(tup);
        if (sign == 0) continue;
        S v = c * ci;
        if (par * sign < 0) v = -v;
        r.add_term(std::move(tup), v);
      }
    }
  }
  return r;
}

// d[X,Y] = [dX,Y] + [X,dY] on all basis pairs.  Degree one suffices: both
// sides extend to derivations in each slot, so the identity propagates by
// the Leibniz rules.
template <class S>
CheckReport is_k_differential(const LieAlgebra& L, const KDifferential<S>& d, const S& one) {
  CheckReport r = CheckReport::pass(
      "k_differential", "checked on basis pairs; higher grades follow by the Leibniz rules");
  for (size_t i = 0; i < L.dim && r.passed(); ++i) {
    for (size_t j = i + 1; j < L.dim; ++j) {
      Multivector<S> lhs(L.dim, d.k);
      for (size_t m = 0; m < L.dim; ++m) {
        if (L.c[i][j][m].is_zero()) continue;
        lhs += d.on_basis[m].scaled(L.c[i][j][m]);
      }
      Multivector<S> rhs =
          schouten(L, d.on_basis[i], mv_basis<S>(L.dim, static_cast<int>(j), one)) +
          schouten(L, mv_basis<S>(L.dim, static_cast<int>(i), one), d.on_basis[j]);
      Multivector<S> res = lhs - rhs;
      if (!res.is_zero()) {
        r = CheckReport::fail("k_differential",
                              "d[" + L.basis_names[i] + "," + L.basis_names[j] +
                                  "] - ([d.,.]+[.,d.]) = " + res.str(L.basis_names));
        break;
      }
    }
  }
  return r;
}

inline CheckReport is_k_differential(const LieAlgebra& L, const KDifferential<Scalar>& d) {
  return is_k_differential<Scalar>(L, d, Scalar(1));
}

// [d1, d2] = d1 d2 - (-1)^{(k-1)(l-1)} d2 d1, acting on degree one.
template <class S>
KDifferential<S> graded_commutator(const KDifferential<S>& d1, const KDifferential<S>& d2) {
  if (d1.dim != d2.dim) throw std::invalid_argument("graded_commutator: mismatched parents");
  KDifferential<S> r;
  r.k = d1.k + d2.k - 1;
  r.dim = d1.dim;
  bool flip = ((d1.k - 1) % 2 != 0) && ((d2.k - 1) % 2 != 0);
  for (size_t i = 0; i < d1.dim; ++i) {
    Multivector<S> first = extend_derivation(d1, d2.on_basis[i]);
    Multivector<S> second = extend_derivation(d2, d1.on_basis[i]);
    r.on_basis.push_back(flip ? first + second : first - second);
  }
  return r;
}

}  // namespace pgcheck
