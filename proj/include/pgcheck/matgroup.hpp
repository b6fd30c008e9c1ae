#pragma once

// Exact checks on rational matrix groups: translated bivectors, the
// coboundary bivector pi_g = (L_g)_* r - (R_g)_* r, the multiplicativity
// identity, and the group cocycle g -> Ad_g r - r.
//
// Tangent spaces at every point are identified with the ambient n x n matrix
// space; bivector values live in the second wedge power of that space, with
// matrix units E_ab as the coordinate basis (flat index a*n + b).

#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/chevalley.hpp"
#include "pgcheck/multivector.hpp"
#include "pgcheck/report.hpp"
#include "pgcheck/rng.hpp"

namespace pgcheck {

enum class GroupKind { GL, SL };

struct GroupPoint {
  Mat<Scalar> m;
  GroupKind kind = GroupKind::GL;

  GroupPoint() = default;
  GroupPoint(Mat<Scalar> mat, GroupKind k) : m(std::move(mat)), kind(k) {
    Scalar det = mat_det(m);
    if (det.is_zero()) throw std::invalid_argument("GroupPoint: singular matrix");
    if (kind == GroupKind::SL && !(det == Scalar(1)))
      throw std::invalid_argument("GroupPoint: determinant is not one");
  }

  size_t n() const { return m.size(); }

  GroupPoint inverse() const {
    return GroupPoint(mat_inverse(m, Scalar(0), Scalar(1)), kind);
  }

  GroupPoint operator*(const GroupPoint& o) const { return GroupPoint(mat_mul(m, o.m), kind); }

  bool operator==(const GroupPoint& o) const { return kind == o.kind && mat_equal(m, o.m); }
};

struct TangentBivector {
  GroupPoint base;
  Multivector<Scalar> value;  // dimension n*n

  bool operator==(const TangentBivector& o) const {
    return base == o.base && value == o.value;
  }
};

namespace detail {

// Linear map on the matrix space sending E_ab to B * E_ab (left) or
// E_ab * B (right), as an n^2 x n^2 matrix in the flat coordinates.
template <class T>
Mat<T> left_mult_matrix(const Mat<T>& B, const T& zero) {
  size_t n = B.size();
  Mat<T> M = mat_filled(n * n, n * n, zero);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t i = 0; i < n; ++i) M[i * n + b][a * n + b] = B[i][a];
  return M;
}

template <class T>
Mat<T> right_mult_matrix(const Mat<T>& B, const T& zero) {
  size_t n = B.size();
  Mat<T> M = mat_filled(n * n, n * n, zero);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t j = 0; j < n; ++j) M[a * n + j][a * n + b] = B[b][j];
  return M;
}

}  // namespace detail

// Embedding of an abstract wedge-square over a matrix Lie algebra basis into
// flat matrix-space coordinates.
inline Multivector<Scalar> embed_bivector(const std::vector<Mat<Scalar>>& basis_matrices,
                                          const Multivector<Scalar>& r) {
  if (basis_matrices.empty()) throw std::invalid_argument("embed_bivector: empty basis");
  size_t n = basis_matrices[0].size();
  Mat<Scalar> embed = mat_filled(n * n, basis_matrices.size(), Scalar(0));
  for (size_t k = 0; k < basis_matrices.size(); ++k)
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) embed[a * n + b][k] = basis_matrices[k][a][b];
  return apply_linear(embed, r);
}

enum class Side { left, right };

inline TangentBivector translate(const TangentBivector& t, Side side, const GroupPoint& by) {
  if (by.n() * by.n() != t.value.dim) throw std::invalid_argument("translate: size mismatch");
  TangentBivector out;
  if (side == Side::left) {
    out.base = by * t.base;
    out.value = apply_linear(detail::left_mult_matrix(by.m, Scalar(0)), t.value);
  } else {
    out.base = t.base * by;
    out.value = apply_linear(detail::right_mult_matrix(by.m, Scalar(0)), t.value);
  }
  return out;
}

// pi_g = (L_g)_* r - (R_g)_* r, legs gX versus Xg.
inline TangentBivector coboundary_pi(const Multivector<Scalar>& r_embedded,
                                     const GroupPoint& g) {
  TangentBivector out;
  out.base = g;
  out.value = apply_linear(detail::left_mult_matrix(g.m, Scalar(0)), r_embedded) -
              apply_linear(detail::right_mult_matrix(g.m, Scalar(0)), r_embedded);
  return out;
}

// (R_h)_* pi_g + (L_g)_* pi_h = pi_{gh}; an algebraic identity for coboundary
// bivectors, so failure indicates an implementation bug rather than bad data.
inline CheckReport check_multiplicative(const Multivector<Scalar>& r_embedded,
                                        const GroupPoint& g, const GroupPoint& h) {
  TangentBivector lhs1 = translate(coboundary_pi(r_embedded, g), Side::right, h);
  TangentBivector lhs2 = translate(coboundary_pi(r_embedded, h), Side::left, g);
  TangentBivector rhs = coboundary_pi(r_embedded, g * h);
  Multivector<Scalar> res = lhs1.value + lhs2.value - rhs.value;
  if (res.is_zero()) return CheckReport::pass("multiplicative");
  return CheckReport::fail("multiplicative", "nonzero residual with " +
                                                 std::to_string(res.terms.size()) + " terms");
}

// pi~(g) = (R_g^{-1})_* pi_g = Ad_g r - r.
inline Multivector<Scalar> cocycle_tilde(const Multivector<Scalar>& r_embedded,
                                         const GroupPoint& g) {
  Mat<Scalar> ad = mat_mul(detail::left_mult_matrix(g.m, Scalar(0)),
                           detail::right_mult_matrix(g.inverse().m, Scalar(0)));
  return apply_linear(ad, r_embedded) - r_embedded;
}

// pi~(gh) = pi~(g) + Ad_g pi~(h).
inline CheckReport check_cocycle_identity(const Multivector<Scalar>& r_embedded,
                                          const GroupPoint& g, const GroupPoint& h) {
  Mat<Scalar> ad = mat_mul(detail::left_mult_matrix(g.m, Scalar(0)),
                           detail::right_mult_matrix(g.inverse().m, Scalar(0)));
  Multivector<Scalar> lhs = cocycle_tilde(r_embedded, g * h);
  Multivector<Scalar> rhs = cocycle_tilde(r_embedded, g) +
                            apply_linear(ad, cocycle_tilde(r_embedded, h));
  Multivector<Scalar> res = lhs - rhs;
  if (res.is_zero()) return CheckReport::pass("group_cocycle");
  return CheckReport::fail("group_cocycle",
                           "nonzero residual with " + std::to_string(res.terms.size()) + " terms");
}

// First-order value of pi~ along 1 + eps X over the dual numbers: the exact
// directional derivative of the cocycle at the identity.
inline Multivector<Scalar> cocycle_derivative(const Multivector<Scalar>& r_embedded,
                                              const Mat<Scalar>& X) {
  size_t n = X.size();
  Mat<DualScalar> g = mat_identity(n, DualScalar(Scalar(0)), DualScalar(Scalar(1)));
  Mat<DualScalar> ginv = g;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      g[i][j].b = X[i][j];
      ginv[i][j].b = -X[i][j];
    }
  Mat<DualScalar> ad = mat_mul(detail::left_mult_matrix(g, DualScalar(Scalar(0))),
                               detail::right_mult_matrix(ginv, DualScalar(Scalar(0))));
  Multivector<DualScalar> lifted = mv_cast<DualScalar>(r_embedded, DualScalar(Scalar(1)));
  Multivector<DualScalar> tilde = apply_linear(ad, lifted) - lifted;
  Multivector<Scalar> out(lifted.dim, 2);
  for (const auto& [t, c] : tilde.terms) {
    if (!c.a.is_zero())
      throw std::runtime_error("cocycle_derivative: zeroth-order part is nonzero");
    out.add_term(t, c.b);
  }
  return out;
}

// Exactness-preserving random sampling: small integer entries, resampled
// until invertible; for SL the first column is scaled by 1/det.
inline GroupPoint random_group_point(size_t n, GroupKind kind, SplitMix64& rng) {
  for (;;) {
    Mat<Scalar> m = mat_filled(n, n, Scalar(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = Scalar(rng.range(-2, 2));
    Scalar det = mat_det(m);
    if (det.is_zero()) continue;
    if (kind == GroupKind::SL) {
      Scalar inv = Scalar(1) / det;
      for (size_t i = 0; i < n; ++i) m[i][0] = m[i][0] * inv;
    }
    return GroupPoint(std::move(m), kind);
  }
}

}  // namespace pgcheck
