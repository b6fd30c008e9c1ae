#pragma once

// Shared generators and independent oracles for the test suites.
//
// Random Lie algebras are produced from known-valid families conjugated by a
// random invertible basis change, which preserves the Jacobi identity exactly.

#include <string>
#include <vector>

#include "pgcheck/pgcheck.hpp"

namespace pgtest {

using namespace pgcheck;

// Independent parity oracle: count inversion pairs directly.
inline int inversion_sign(const std::vector<int>& t) {
  int inv = 0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

inline LieAlgebra heisenberg3() {
  LieAlgebra L = LieAlgebra::abelian(3, {"p", "q", "z"});
  L.set_bracket(0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  return L;
}

inline LieAlgebra solvable2() {
  LieAlgebra L = LieAlgebra::abelian(2, {"a", "b"});
  L.set_bracket(0, 1, {Scalar(0), Scalar(1)});
  return L;
}

// [e1,e2] = e2, [e1,e3] = lambda e3, [e2,e3] = 0.
inline LieAlgebra solvable3(const Scalar& lambda) {
  LieAlgebra L = LieAlgebra::abelian(3);
  L.set_bracket(0, 1, {Scalar(0), Scalar(1), Scalar(0)});
  L.set_bracket(0, 2, {Scalar(0), Scalar(0), lambda});
  return L;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra L = LieAlgebra::abelian(a.dim + b.dim);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (size_t k = 0; k < a.dim; ++k) L.c[i][j][k] = a.c[i][j][k];
  for (size_t i = 0; i < b.dim; ++i)
    for (size_t j = 0; j < b.dim; ++j)
      for (size_t k = 0; k < b.dim; ++k) L.c[a.dim + i][a.dim + j][a.dim + k] = b.c[i][j][k];
  return L;
}

// Conjugate the structure constants by an invertible matrix (new basis
// vectors are the columns of M).
inline LieAlgebra change_basis(const LieAlgebra& L, const Mat<Scalar>& M) {
  Mat<Scalar> inv = mat_inverse(M, Scalar(0), Scalar(1));
  LieAlgebra out = LieAlgebra::abelian(L.dim);
  for (size_t a = 0; a < L.dim; ++a) {
    std::vector<Scalar> va(L.dim), vb(L.dim);
    for (size_t k = 0; k < L.dim; ++k) va[k] = M[k][a];
    for (size_t b = 0; b < L.dim; ++b) {
      for (size_t k = 0; k < L.dim; ++k) vb[k] = M[k][b];
      std::vector<Scalar> coords = mat_vec(inv, L.bracket(va, vb));
      for (size_t k = 0; k < L.dim; ++k) out.c[a][b][k] = coords[k];
    }
  }
  return out;
}

inline Mat<Scalar> random_invertible(size_t n, SplitMix64& rng) {
  for (;;) {
    Mat<Scalar> m = mat_filled(n, n, Scalar(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = Scalar(rng.range(-2, 2));
    if (!mat_det(m).is_zero()) return m;
  }
}

// A valid Lie algebra of dimension <= 4, random family + random basis change.
inline LieAlgebra random_lie_algebra(SplitMix64& rng, size_t max_dim = 4) {
  LieAlgebra base;
  switch (rng.below(6)) {
    case 0: base = LieAlgebra::abelian(2 + rng.below(max_dim - 1)); break;
    case 1: base = heisenberg3(); break;
    case 2: base = solvable2(); break;
    case 3: base = solvable3(Scalar(rng.range(-2, 2))); break;
    case 4: base = chevalley_sl(2).L; break;
    default:
      base = max_dim >= 4 ? direct_sum(solvable2(), solvable2()) : heisenberg3();
      break;
  }
  if (base.dim > max_dim) base = solvable2();
  return change_basis(base, random_invertible(base.dim, rng));
}

inline Multivector<Scalar> random_multivector(size_t dim, int grade, SplitMix64& rng,
                                              int terms = 2) {
  Multivector<Scalar> m(dim, grade);
  if (grade == 0) {
    m.add_term({}, rng.rational());
    return m;
  }
  if (static_cast<size_t>(grade) > dim) return m;
  for (int t = 0; t < terms; ++t) {
    IndexTuple tup;
    // random strictly increasing tuple
    std::vector<int> pool;
    for (size_t k = 0; k < dim; ++k) pool.push_back(static_cast<int>(k));
    for (int g = 0; g < grade; ++g) {
      size_t pick = rng.below(pool.size() - static_cast<size_t>(grade - g - 1));
      tup.push_back(pool[pick]);
      pool.erase(pool.begin(), pool.begin() + static_cast<long>(pick) + 1);
    }
    m.add_term(tup, rng.rational());
  }
  return m;
}

inline Poly random_poly(const std::vector<std::string>& vars, SplitMix64& rng, int max_deg = 2,
                        int terms = 3, bool laurent = false) {
  Poly p(vars, laurent);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int d = 0; d < budget; ++d) {
      size_t v = rng.below(vars.size());
      e[v] += laurent && rng.below(2) == 0 ? -1 : 1;
    }
    p += Poly::monomial(vars, laurent, e, rng.rational());
  }
  return p;
}

inline PolyField<Poly> random_field(const std::vector<std::string>& chart, Variance v, int grade,
                                    SplitMix64& rng, int terms = 2, int max_deg = 2) {
  Poly zero(chart, false);
  PolyField<Poly> f(chart, v, grade, zero);
  if (static_cast<size_t>(grade) > chart.size()) return f;
  for (int t = 0; t < terms; ++t) {
    IndexTuple tup;
    std::vector<int> pool;
    for (size_t k = 0; k < chart.size(); ++k) pool.push_back(static_cast<int>(k));
    for (int g = 0; g < grade; ++g) {
      size_t pick = rng.below(pool.size() - static_cast<size_t>(grade - g - 1));
      tup.push_back(pool[pick]);
      pool.erase(pool.begin(), pool.begin() + static_cast<long>(pick) + 1);
    }
    f.add_term(tup, random_poly(chart, rng, max_deg, 2));
  }
  return f;
}

// The Dubrovin bivector on the chart (x, y, z).
inline PolyField<Poly> dubrovin() {
  std::vector<std::string> ch = {"x", "y", "z"};
  Poly zero(ch, false);
  PolyField<Poly> pi(ch, Variance::multivector, 2, zero);
  pi.add_term({0, 1}, parse_poly("x*y - 2*z", ch));
  pi.add_term({1, 2}, parse_poly("y*z - 2*x", ch));
  pi.add_term({0, 2}, parse_poly("-(z*x - 2*y)", ch));
  return pi;
}

// Poisson bracket of two functions through the bivector.
template <class R>
R poisson_bracket(const PolyField<R>& pi, const R& f, const R& g) {
  std::vector<std::string> ch = pi.chart;
  return eval_field(pi, {d_function(ch, f), d_function(ch, g)});
}

// The standard symplectic bivector D1^D2 + D3^D4 on a four-chart.
inline PolyField<Poly> symplectic4(const std::vector<std::string>& ch) {
  Poly zero(ch, false);
  PolyField<Poly> pi(ch, Variance::multivector, 2, zero);
  pi.add_term({0, 1}, Poly::constant(ch, false, Scalar(1)));
  pi.add_term({2, 3}, Poly::constant(ch, false, Scalar(1)));
  return pi;
}

// The quasi-Nijenhuis fixture: N = Q# o (pi#)^{-1} for Q = x3 D1^D2 + x1 D1^D4,
// phi solved from the torsion identity.
struct PqnFixture {
  std::vector<std::string> chart = {"x1", "x2", "x3", "x4"};
  PolyField<Poly> pi, piN, phi;
  TensorN<Poly> N;

  PqnFixture() : pi(symplectic4(chart)), piN(symplectic4(chart)), phi(chart, Variance::form, 3, Poly(chart, false)) {
    Poly zero(chart, false);
    piN = PolyField<Poly>(chart, Variance::multivector, 2, zero);
    piN.add_term({0, 1}, parse_poly("x3", chart));
    piN.add_term({0, 3}, parse_poly("x1", chart));
    N.chart = chart;
    N.zero = zero;
    N.m = mat_filled(4, 4, zero);
    N.m[0][0] = parse_poly("x3", chart);
    N.m[1][1] = parse_poly("x3", chart);
    N.m[3][1] = parse_poly("x1", chart);
    N.m[0][2] = parse_poly("x1", chart);
    phi = PolyField<Poly>(chart, Variance::form, 3, zero);
    phi.add_term({0, 1, 2}, parse_poly("x3", chart));
  }
};

}  // namespace pgtest
