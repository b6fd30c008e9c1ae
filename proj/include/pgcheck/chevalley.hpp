#pragma once

// Built-in construction of sl_n: basis {E_ij, i != j} + {H_i = E_ii - E_{i+1,i+1}},
// structure constants derived from matrix commutators, trace form K(x,y) = tr(xy).
// The Chevalley data enumerates the positive roots (i<j) with e = E_ij, f = E_ji;
// under the trace form every pairing (e,f) equals one.  Pairings are exposed as
// data so a caller can rescale them when using a different invariant form.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgcheck/lie.hpp"
#include "pgcheck/matrix.hpp"

namespace pgcheck {

struct ChevalleyData {
  std::vector<std::pair<size_t, size_t>> positive_roots;  // (i, j) with i < j
  std::vector<size_t> e_index;                            // basis index of e_alpha
  std::vector<size_t> f_index;                            // basis index of f_alpha
  std::vector<size_t> cartan_index;                       // basis indices of h_1..h_{n-1}
  std::vector<Scalar> pairing;                            // (e_alpha, f_alpha)
};

struct SlData {
  size_t n = 0;
  LieAlgebra L;
  ChevalleyData chev;
  BilinearForm trace_form;
  std::vector<Mat<Scalar>> basis_matrices;  // the defining n x n matrices
};

namespace detail {

inline Mat<Scalar> matrix_unit(size_t n, size_t i, size_t j) {
  Mat<Scalar> m = mat_filled(n, n, Scalar(0));
  m[i][j] = Scalar(1);
  return m;
}

inline Mat<Scalar> commutator(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> ab = mat_mul(a, b), ba = mat_mul(b, a);
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab.size(); ++j) ab[i][j] = ab[i][j] - ba[i][j];
  return ab;
}

inline Scalar trace_of_product(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Scalar t(0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < a.size(); ++k) t += a[i][k] * b[k][i];
  return t;
}

// Coordinates of a traceless matrix in the {E_ij} + {H_i} basis: off-diagonal
// entries directly, diagonal via partial sums.
inline std::vector<Scalar> sl_coordinates(const Mat<Scalar>& m,
                                          const std::vector<std::pair<size_t, size_t>>& offdiag,
                                          size_t n) {
  std::vector<Scalar> x(offdiag.size() + (n - 1), Scalar(0));
  for (size_t a = 0; a < offdiag.size(); ++a) x[a] = m[offdiag[a].first][offdiag[a].second];
  Scalar partial(0);
  for (size_t i = 0; i + 1 < n; ++i) {
    partial += m[i][i];
    x[offdiag.size() + i] = partial;
  }
  return x;
}

}  // namespace detail

inline SlData chevalley_sl(size_t n) {
  if (n < 2) throw std::invalid_argument("chevalley_sl: n must be at least 2");
  SlData data;
  data.n = n;

  // Basis order: e_alpha block (i<j, lex), f_alpha block (mirrored), Cartan block.
  std::vector<std::pair<size_t, size_t>> offdiag;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) offdiag.emplace_back(i, j);
  size_t roots = offdiag.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) offdiag.emplace_back(j, i);

  size_t dim = offdiag.size() + (n - 1);
  LieAlgebra L;
  L.dim = dim;
  for (auto [i, j] : offdiag)
    L.basis_names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (size_t i = 0; i + 1 < n; ++i) L.basis_names.push_back("H" + std::to_string(i + 1));
  L.c.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(0))));

  for (auto [i, j] : offdiag) data.basis_matrices.push_back(detail::matrix_unit(n, i, j));
  for (size_t i = 0; i + 1 < n; ++i) {
    Mat<Scalar> h = mat_filled(n, n, Scalar(0));
    h[i][i] = Scalar(1);
    h[i + 1][i + 1] = Scalar(-1);
    data.basis_matrices.push_back(h);
  }

  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b) {
      Mat<Scalar> br = detail::commutator(data.basis_matrices[a], data.basis_matrices[b]);
      L.c[a][b] = detail::sl_coordinates(br, offdiag, n);
    }
  data.L = std::move(L);

  data.trace_form.claims_invariant = true;
  data.trace_form.claims_nondegenerate = true;
  data.trace_form.matrix = mat_filled(dim, dim, Scalar(0));
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b)
      data.trace_form.matrix[a][b] =
          detail::trace_of_product(data.basis_matrices[a], data.basis_matrices[b]);

  for (size_t r = 0; r < roots; ++r) {
    auto [i, j] = offdiag[r];
    data.chev.positive_roots.emplace_back(i, j);
    data.chev.e_index.push_back(r);
    data.chev.f_index.push_back(roots + r);
    data.chev.pairing.push_back(data.trace_form.matrix[r][roots + r]);
  }
  for (size_t i = 0; i + 1 < n; ++i) data.chev.cartan_index.push_back(2 * roots + i);
  return data;
}

struct CompactBasis {
  Mat<Scalar> change;   // columns: new basis vectors in the original coordinates
  LieAlgebra algebra;   // structure constants in the new basis (all real)
};

// Real basis X = e - f, Y = i(e + f), T = i h of the compact form inside the
// complexification.  Throws when the conjugated constants fail to be real,
// which would indicate an internal inconsistency.
inline CompactBasis compact_basis(const SlData& data) {
  const LieAlgebra& L = data.L;
  size_t dim = L.dim;
  size_t roots = data.chev.positive_roots.size();
  CompactBasis out;
  out.change = mat_filled(dim, dim, Scalar(0));

  std::vector<std::string> names;
  for (size_t r = 0; r < roots; ++r) {
    auto [i, j] = data.chev.positive_roots[r];
    std::string tag = std::to_string(i + 1) + std::to_string(j + 1);
    names.push_back("X" + tag);
  }
  for (size_t r = 0; r < roots; ++r) {
    auto [i, j] = data.chev.positive_roots[r];
    names.push_back("Y" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  for (size_t i = 0; i + 1 < data.n; ++i) names.push_back("T" + std::to_string(i + 1));

  for (size_t r = 0; r < roots; ++r) {
    out.change[data.chev.e_index[r]][r] = Scalar(1);
    out.change[data.chev.f_index[r]][r] = Scalar(-1);
    out.change[data.chev.e_index[r]][roots + r] = Scalar::i();
    out.change[data.chev.f_index[r]][roots + r] = Scalar::i();
  }
  for (size_t i = 0; i + 1 < data.n; ++i)
    out.change[data.chev.cartan_index[i]][2 * roots + i] = Scalar::i();

  Mat<Scalar> inv = mat_inverse(out.change, Scalar(0), Scalar(1));

  LieAlgebra K;
  K.dim = dim;
  K.basis_names = std::move(names);
  K.c.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(0))));
  for (size_t a = 0; a < dim; ++a) {
    std::vector<Scalar> va(dim), vb(dim);
    for (size_t k = 0; k < dim; ++k) va[k] = out.change[k][a];
    for (size_t b = 0; b < dim; ++b) {
      for (size_t k = 0; k < dim; ++k) vb[k] = out.change[k][b];
      std::vector<Scalar> br = L.bracket(va, vb);
      std::vector<Scalar> coords = mat_vec(inv, br);
      for (size_t k = 0; k < dim; ++k) {
        if (!coords[k].is_real())
          throw std::runtime_error("compact_basis: conjugated constants are not real");
        K.c[a][b][k] = coords[k];
      }
    }
  }
  out.algebra = std::move(K);
  return out;
}

}  // namespace pgcheck
