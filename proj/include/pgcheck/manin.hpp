#pragma once

// Manin pairs and quasi-triples at the algebra level: a double with an
// invariant nondegenerate pairing, a Lagrangian subalgebra g and an isotropic
// complement h, and the extraction of the quasi-bialgebra (g, F, phi).
//
// With a pairing-normalized dual basis eps^i of h (<g_i, eps^j> = delta_ij),
// the h-component of [eps^i, eps^j] transported to g* gives the cobracket F,
// and phi^{ijk} = <pr_g [eps^i, eps^j], eps^k>.  The signs are fixed so the
// direct-sum double with its diagonal/antidiagonal splitting reproduces the
// quarter-Cartan trilinear form; extract_quasi cross-checks its own output
// against the quasi-bialgebra axioms and refuses to return silently on a
// mismatch.

#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/bialgebra.hpp"
#include "pgcheck/lie.hpp"
#include "pgcheck/matrix.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

struct ManinData {
  LieAlgebra d;
  BilinearForm pairing;
  std::vector<std::vector<Scalar>> g_basis;  // n vectors of dimension 2n
  std::vector<std::vector<Scalar>> h_basis;
};

inline CheckReport validate_manin(const ManinData& m) {
  size_t dim = m.d.dim;
  if (dim % 2 != 0) return CheckReport::error("manin", "dimension not even");
  size_t n = dim / 2;
  if (m.g_basis.size() != n || m.h_basis.size() != n)
    return CheckReport::error("manin", "expected " + std::to_string(n) + " basis vectors per leg");

  std::vector<CheckReport> subs;
  subs.push_back(validate_lie_algebra(m.d));
  {
    BilinearForm K = m.pairing;
    K.claims_invariant = true;
    K.claims_nondegenerate = true;
    subs.push_back(validate_bilinear(m.d, K));
  }
  auto isotropy = [&](const char* name, const std::vector<std::vector<Scalar>>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        Scalar v = m.pairing.eval(basis[i], basis[j]);
        if (!v.is_zero())
          return CheckReport::fail(name, "pairing(" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ") = " + v.str());
      }
    return CheckReport::pass(name);
  };
  subs.push_back(isotropy("g_isotropic", m.g_basis));
  subs.push_back(isotropy("h_isotropic", m.h_basis));

  {
    // closure of [g, g] in span(g): appending a bracket must not raise the rank
    CheckReport r = CheckReport::pass("g_subalgebra");
    Mat<Scalar> rows = m.g_basis;
    size_t base_rank = mat_rank(rows);
    for (size_t i = 0; i < n && r.passed(); ++i)
      for (size_t j = i + 1; j < n; ++j) {
        Mat<Scalar> ext = rows;
        ext.push_back(m.d.bracket(m.g_basis[i], m.g_basis[j]));
        if (mat_rank(ext) != base_rank) {
          r = CheckReport::fail("g_subalgebra",
                                "[g_" + std::to_string(i + 1) + ", g_" + std::to_string(j + 1) +
                                    "] escapes the span of g");
          break;
        }
      }
    if (base_rank != n && r.passed())
      r = CheckReport::fail("g_subalgebra", "g basis is not independent");
    subs.push_back(std::move(r));
  }
  {
    Mat<Scalar> combined = mat_filled(dim, dim, Scalar(0));
    for (size_t c = 0; c < n; ++c)
      for (size_t k = 0; k < dim; ++k) {
        combined[k][c] = m.g_basis[c][k];
        combined[k][n + c] = m.h_basis[c][k];
      }
    if (mat_invertible(combined))
      subs.push_back(CheckReport::pass("complement"));
    else
      subs.push_back(CheckReport::fail("complement", "g + h does not span the double"));
  }
  return aggregate("manin", std::move(subs));
}

struct ExtractedQuasi {
  LieAlgebra g;        // structure constants in the g_basis coordinates
  QuasiBialgebra q;    // cobracket F and element phi of grade three
  CheckReport verification;
};

inline ExtractedQuasi extract_quasi(const ManinData& m) {
  CheckReport valid = validate_manin(m);
  if (!valid.passed())
    throw std::invalid_argument("extract_quasi: validation failed: " +
                                valid.residual_witness.value_or(valid.detail));
  size_t dim = m.d.dim;
  size_t n = dim / 2;

  // Normalize h to the pairing-dual basis eps of g.
  Mat<Scalar> P = mat_filled(n, n, Scalar(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) P[i][j] = m.pairing.eval(m.g_basis[i], m.h_basis[j]);
  Mat<Scalar> C = mat_transpose(mat_inverse(P, Scalar(0), Scalar(1)));
  std::vector<std::vector<Scalar>> eps(n, std::vector<Scalar>(dim, Scalar(0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t mm = 0; mm < n; ++mm)
      for (size_t k = 0; k < dim; ++k) eps[j][k] += C[j][mm] * m.h_basis[mm][k];

  // Coordinates in the combined basis [g | eps].
  Mat<Scalar> B = mat_filled(dim, dim, Scalar(0));
  for (size_t c = 0; c < n; ++c)
    for (size_t k = 0; k < dim; ++k) {
      B[k][c] = m.g_basis[c][k];
      B[k][n + c] = eps[c][k];
    }
  Mat<Scalar> Binv = mat_inverse(B, Scalar(0), Scalar(1));

  // Structure constants of g in its own basis.
  LieAlgebra g = LieAlgebra::abelian(n);
  g.basis_names.clear();
  for (size_t i = 0; i < n; ++i) g.basis_names.push_back("g" + std::to_string(i + 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<Scalar> coords = mat_vec(Binv, m.d.bracket(m.g_basis[i], m.g_basis[j]));
      for (size_t k = 0; k < n; ++k) g.c[i][j][k] = coords[k];
    }

  Cobracket F = Cobracket::zero(n);
  Multivector<Scalar> phi(n, 3);
  std::vector<std::vector<std::vector<Scalar>>> phi_tensor(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      std::vector<Scalar> br = m.d.bracket(eps[i], eps[j]);
      std::vector<Scalar> coords = mat_vec(Binv, br);
      for (size_t k = 0; k < n; ++k) {
        if (!coords[n + k].is_zero())
          F.delta[k].add_term({static_cast<int>(i), static_cast<int>(j)}, coords[n + k]);
      }
      // g-component of the bracket, paired against eps_k
      std::vector<Scalar> gpart(dim, Scalar(0));
      for (size_t a = 0; a < n; ++a)
        for (size_t kk = 0; kk < dim; ++kk) gpart[kk] += coords[a] * m.g_basis[a][kk];
      for (size_t k = 0; k < n; ++k) {
        Scalar v = m.pairing.eval(gpart, eps[k]);
        phi_tensor[i][j][k] = v;
        phi_tensor[j][i][k] = -v;
      }
    }

  // Total antisymmetry is a consistency requirement on the extraction.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if ((i == j || j == k || i == k) && !phi_tensor[i][j][k].is_zero())
          throw std::runtime_error("extract_quasi: phi fails alternation");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        Scalar v = phi_tensor[i][j][k];
        if (!(phi_tensor[i][k][j] == -v) || !(phi_tensor[j][k][i] == v))
          throw std::runtime_error("extract_quasi: phi fails total antisymmetry");
        if (!v.is_zero())
          phi.add_term({static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)}, v);
      }

  ExtractedQuasi out;
  out.g = std::move(g);
  out.q = QuasiBialgebra{std::move(F), std::move(phi)};
  out.verification = check_quasi_bialgebra(out.g, out.q);
  if (!out.verification.passed())
    throw std::runtime_error(
        "extract_quasi: extracted structure fails the quasi-bialgebra axioms: " +
        out.verification.residual_witness.value_or(""));
  return out;
}

// The double g (+) g with pairing K(u1,v1) - K(u2,v2), diagonal g and the
// halved antidiagonal complement.
inline ManinData direct_sum_double(const LieAlgebra& g, const BilinearForm& K) {
  size_t n = g.dim;
  ManinData m;
  m.d.dim = 2 * n;
  for (const auto& s : g.basis_names) m.d.basis_names.push_back(s + "_1");
  for (const auto& s : g.basis_names) m.d.basis_names.push_back(s + "_2");
  m.d.c.assign(2 * n, std::vector<std::vector<Scalar>>(2 * n,
                                                       std::vector<Scalar>(2 * n, Scalar(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        m.d.c[i][j][k] = g.c[i][j][k];
        m.d.c[n + i][n + j][n + k] = g.c[i][j][k];
      }
  m.pairing.matrix = mat_filled(2 * n, 2 * n, Scalar(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      m.pairing.matrix[i][j] = K.matrix[i][j];
      m.pairing.matrix[n + i][n + j] = -K.matrix[i][j];
    }
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> gv(2 * n, Scalar(0)), hv(2 * n, Scalar(0));
    gv[i] = Scalar(1);
    gv[n + i] = Scalar(1);
    hv[i] = Scalar(1, 2);
    hv[n + i] = Scalar(-1, 2);
    m.g_basis.push_back(std::move(gv));
    m.h_basis.push_back(std::move(hv));
  }
  return m;
}

// phi(u,v,w) = (1/4) K(u, [v,w]) on the diagonal copy of g, converted to an
// element of the third wedge power via K-duality.  Requires the direct-sum
// double shape (two commuting copies, pairing K (+) -K, diagonal g,
// antidiagonal h).
inline Multivector<Scalar> phi_quarter(const ManinData& m) {
  size_t dim = m.d.dim;
  if (dim % 2 != 0) throw std::invalid_argument("phi_quarter: dimension not even");
  size_t n = dim / 2;
  auto shape_error = [](const std::string& why) {
    return std::invalid_argument("phi_quarter: not a direct-sum double: " + why);
  };
  for (size_t a = 0; a < dim; ++a)
    for (size_t b = 0; b < dim; ++b)
      for (size_t k = 0; k < dim; ++k) {
        bool same_block = (a < n && b < n && k < n) || (a >= n && b >= n && k >= n);
        if (!same_block && !m.d.c[a][b][k].is_zero()) throw shape_error("cross-block brackets");
      }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k)
        if (!(m.d.c[n + i][n + j][n + k] == m.d.c[i][j][k]))
          throw shape_error("the two copies differ");
      if (!(m.pairing.matrix[n + i][n + j] == -m.pairing.matrix[i][j]) ||
          !m.pairing.matrix[i][n + j].is_zero() || !m.pairing.matrix[n + i][j].is_zero())
        throw shape_error("pairing is not K (+) -K");
    }
  if (m.g_basis.size() != n || m.h_basis.size() != n) throw shape_error("basis sizes");
  Mat<Scalar> X = mat_filled(n, n, Scalar(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t k = 0; k < n; ++k) {
      if (!(m.g_basis[a][k] == m.g_basis[a][n + k])) throw shape_error("g is not diagonal");
      X[k][a] = m.g_basis[a][k];
      if (!(m.h_basis[a][n + k] == -m.h_basis[a][k])) throw shape_error("h is not antidiagonal");
    }

  // K and the bracket of g expressed in the g_basis coordinates.
  Mat<Scalar> Kp = mat_filled(n, n, Scalar(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Scalar acc(0);
      for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) acc += X[u][a] * m.pairing.matrix[u][v] * X[v][b];
      Kp[a][b] = acc;
    }
  Mat<Scalar> Xinv = mat_inverse(X, Scalar(0), Scalar(1));
  std::vector<std::vector<std::vector<Scalar>>> cg(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0))));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      std::vector<Scalar> xa(n), xb(n);
      for (size_t k = 0; k < n; ++k) {
        xa[k] = X[k][a];
        xb[k] = X[k][b];
      }
      // bracket inside one copy
      std::vector<Scalar> br(n, Scalar(0));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (xa[i].is_zero() || xb[j].is_zero()) continue;
          Scalar f = xa[i] * xb[j];
          for (size_t k = 0; k < n; ++k) br[k] += f * m.d.c[i][j][k];
        }
      cg[a][b] = mat_vec(Xinv, br);
    }

  Mat<Scalar> W = mat_inverse(Kp, Scalar(0), Scalar(1));  // rows: K-dual basis coords
  auto Keval = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Scalar acc(0);
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) acc += x[u] * Kp[u][v] * y[v];
    return acc;
  };
  auto gbracket = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    std::vector<Scalar> r(n, Scalar(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (x[i].is_zero() || y[j].is_zero()) continue;
        Scalar f = x[i] * y[j];
        for (size_t k = 0; k < n; ++k) r[k] += f * cg[i][j][k];
      }
    return r;
  };

  Multivector<Scalar> phi(n, 3);
  Scalar quarter(1, 4);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        Scalar v = quarter * Keval(W[a], gbracket(W[b], W[c]));
        if (!v.is_zero())
          phi.add_term({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}, v);
      }
  return phi;
}

// Classical double of a Lie bialgebra: d = g (+) g* with the canonical pairing
// and the coadjoint mixed bracket.  Used as the Manin-triple control.
inline ManinData drinfeld_double(const LieAlgebra& g, const Cobracket& delta) {
  size_t n = g.dim;
  LieAlgebra dual = dual_bracket(g, delta);
  ManinData m;
  m.d.dim = 2 * n;
  for (const auto& s : g.basis_names) m.d.basis_names.push_back(s);
  for (const auto& s : g.basis_names) m.d.basis_names.push_back(s + "*");
  m.d.c.assign(2 * n, std::vector<std::vector<Scalar>>(2 * n,
                                                       std::vector<Scalar>(2 * n, Scalar(0))));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        m.d.c[i][j][k] = g.c[i][j][k];
        m.d.c[n + i][n + j][n + k] = dual.c[i][j][k];
      }
  // [x, xi] = ad*_x xi - ad*_xi x
  for (size_t x = 0; x < n; ++x)
    for (size_t i = 0; i < n; ++i) {
      for (size_t mm = 0; mm < n; ++mm) {
        Scalar gpart = dual.c[i][mm][x];     // <ad*_xi x, .> with a sign folded in
        Scalar dpart = -g.c[x][mm][i];       // coadjoint action of g on g*
        m.d.c[x][n + i][mm] = gpart;
        m.d.c[n + i][x][mm] = -gpart;
        m.d.c[x][n + i][n + mm] = dpart;
        m.d.c[n + i][x][n + mm] = -dpart;
      }
    }
  m.pairing.matrix = mat_filled(2 * n, 2 * n, Scalar(0));
  for (size_t k = 0; k < n; ++k) {
    m.pairing.matrix[k][n + k] = Scalar(1);
    m.pairing.matrix[n + k][k] = Scalar(1);
  }
  for (size_t i = 0; i < n; ++i) {
    std::vector<Scalar> gv(2 * n, Scalar(0)), hv(2 * n, Scalar(0));
    gv[i] = Scalar(1);
    hv[n + i] = Scalar(1);
    m.g_basis.push_back(std::move(gv));
    m.h_basis.push_back(std::move(hv));
  }
  return m;
}

}  // namespace pgcheck
