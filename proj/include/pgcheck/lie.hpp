#pragma once

// Finite-dimensional Lie algebras over exact scalars, given by structure
// constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.

#include <string>
#include <vector>

#include "pgcheck/matrix.hpp"
#include "pgcheck/report.hpp"
#include "pgcheck/scalar.hpp"

namespace pgcheck {

struct LieAlgebra {
  size_t dim = 0;
  std::vector<std::string> basis_names;
  // c[i][j][k]: coefficient of e_k in [e_i, e_j].
  std::vector<std::vector<std::vector<Scalar>>> c;

  static LieAlgebra abelian(size_t n, std::vector<std::string> names = {}) {
    LieAlgebra L;
    L.dim = n;
    if (names.empty())
      for (size_t k = 0; k < n; ++k) names.push_back("e" + std::to_string(k + 1));
    L.basis_names = std::move(names);
    L.c.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
    return L;
  }

  // Set [e_i, e_j] = v and the antisymmetric mirror.
  void set_bracket(size_t i, size_t j, const std::vector<Scalar>& v) {
    for (size_t k = 0; k < dim; ++k) {
      c[i][j][k] = v[k];
      c[j][i][k] = -v[k];
    }
  }

  std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    std::vector<Scalar> r(dim, Scalar(0));
    for (size_t i = 0; i < dim; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (y[j].is_zero()) continue;
        Scalar f = x[i] * y[j];
        for (size_t k = 0; k < dim; ++k) r[k] += f * c[i][j][k];
      }
    }
    return r;
  }

  std::string element_str(const std::vector<Scalar>& x) const {
    std::string out;
    for (size_t k = 0; k < dim; ++k) {
      if (x[k].is_zero()) continue;
      bool negative = false;
      std::string piece;
      if (x[k].needs_parens()) {
        piece = "(" + x[k].str() + ")*" + basis_names[k];
      } else {
        std::string cs = x[k].str();
        if (!cs.empty() && cs[0] == '-') {
          negative = true;
          cs = cs.substr(1);
        }
        piece = (cs == "1") ? basis_names[k] : cs + "*" + basis_names[k];
      }
      if (out.empty())
        out = (negative ? "-" : "") + piece;
      else
        out += (negative ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
  }
};

// Matrix of ad_x acting on the basis: column j holds [x, e_j].
inline Mat<Scalar> ad_matrix(const LieAlgebra& L, const std::vector<Scalar>& x) {
  Mat<Scalar> m = mat_filled(L.dim, L.dim, Scalar(0));
  for (size_t j = 0; j < L.dim; ++j)
    for (size_t i = 0; i < L.dim; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t k = 0; k < L.dim; ++k) m[k][j] += x[i] * L.c[i][j][k];
    }
  return m;
}

// Antisymmetry and the Jacobi identity, expanded through the constants.
inline CheckReport validate_lie_algebra(const LieAlgebra& L) {
  size_t n = L.dim;
  if (L.c.size() != n) return CheckReport::error("lie_algebra", "constants table dimension mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (L.c[i].size() != n) return CheckReport::error("lie_algebra", "constants table dimension mismatch");
    for (size_t j = 0; j < n; ++j)
      if (L.c[i][j].size() != n)
        return CheckReport::error("lie_algebra", "constants table dimension mismatch");
  }

  std::vector<CheckReport> subs;
  {
    CheckReport r = CheckReport::pass("antisymmetry");
    for (size_t i = 0; i < n && r.passed(); ++i)
      for (size_t j = 0; j < n && r.passed(); ++j)
        for (size_t k = 0; k < n; ++k) {
          Scalar res = L.c[i][j][k] + L.c[j][i][k];
          if (!res.is_zero()) {
            r = CheckReport::fail("antisymmetry",
                                  "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                      std::to_string(k) + "] + mirror = " + res.str());
            break;
          }
        }
    subs.push_back(std::move(r));
  }
  {
    CheckReport r = CheckReport::pass("jacobi");
    for (size_t i = 0; i < n && r.passed(); ++i)
      for (size_t j = i + 1; j < n && r.passed(); ++j)
        for (size_t k = j + 1; k < n && r.passed(); ++k)
          for (size_t l = 0; l < n; ++l) {
            Scalar res(0);
            for (size_t m = 0; m < n; ++m) {
              res += L.c[i][j][m] * L.c[m][k][l];
              res += L.c[j][k][m] * L.c[m][i][l];
              res += L.c[k][i][m] * L.c[m][j][l];
            }
            if (!res.is_zero()) {
              r = CheckReport::fail(
                  "jacobi", "[[" + L.basis_names[i] + "," + L.basis_names[j] + "]," +
                                L.basis_names[k] + "] + cyclic has residual " + res.str() +
                                " on " + L.basis_names[l]);
              break;
            }
          }
    subs.push_back(std::move(r));
  }
  return aggregate("lie_algebra", std::move(subs));
}

struct BilinearForm {
  Mat<Scalar> matrix;
  bool claims_invariant = false;
  bool claims_nondegenerate = false;

  Scalar eval(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
    Scalar acc(0);
    for (size_t i = 0; i < matrix.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < matrix.size(); ++j) acc += x[i] * matrix[i][j] * y[j];
    }
    return acc;
  }
};

// Symmetry always; invariance K([x,y],z) + K(y,[x,z]) = 0 and nondegeneracy
// (exact determinant) when claimed.
inline CheckReport validate_bilinear(const LieAlgebra& L, const BilinearForm& K) {
  std::vector<CheckReport> subs;
  {
    CheckReport r = CheckReport::pass("symmetric");
    for (size_t i = 0; i < L.dim && r.passed(); ++i)
      for (size_t j = 0; j < L.dim; ++j) {
        Scalar res = K.matrix[i][j] - K.matrix[j][i];
        if (!res.is_zero()) {
          r = CheckReport::fail("symmetric", "K[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "] asymmetry " + res.str());
          break;
        }
      }
    subs.push_back(std::move(r));
  }
  if (K.claims_invariant) {
    CheckReport r = CheckReport::pass("invariant");
    for (size_t x = 0; x < L.dim && r.passed(); ++x)
      for (size_t y = 0; y < L.dim && r.passed(); ++y)
        for (size_t z = 0; z < L.dim; ++z) {
          // K([e_x, e_y], e_z) + K(e_y, [e_x, e_z])
          Scalar res(0);
          for (size_t m = 0; m < L.dim; ++m) {
            res += L.c[x][y][m] * K.matrix[m][z];
            res += K.matrix[y][m] * L.c[x][z][m];
          }
          if (!res.is_zero()) {
            r = CheckReport::fail("invariant", "invariance residual " + res.str() + " on (" +
                                                   L.basis_names[x] + "," + L.basis_names[y] +
                                                   "," + L.basis_names[z] + ")");
            break;
          }
        }
    subs.push_back(std::move(r));
  }
  if (K.claims_nondegenerate) {
    if (mat_invertible(K.matrix))
      subs.push_back(CheckReport::pass("nondegenerate"));
    else
      subs.push_back(CheckReport::fail("nondegenerate", "det K = 0"));
  }
  return aggregate("bilinear_form", std::move(subs));
}

}  // namespace pgcheck
