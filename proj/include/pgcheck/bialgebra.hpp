#pragma once

// Cobrackets, Lie bialgebra axioms, dual brackets and classical r-matrices.
//
// The pairing between wedge powers of the dual and of the algebra is the
// determinant pairing <xi^eta, X^Y> = xi(X) eta(Y) - xi(Y) eta(X), with no
// half factor; dual structure constants are read off coefficient-wise.

#include <string>
#include <vector>

#include "pgcheck/chevalley.hpp"
#include "pgcheck/kdiff.hpp"
#include "pgcheck/multivector.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

struct Cobracket {
  size_t dim = 0;
  std::vector<Multivector<Scalar>> delta;  // delta[i] = image of e_i in grade two

  static Cobracket zero(size_t dim) {
    Cobracket d;
    d.dim = dim;
    d.delta.assign(dim, Multivector<Scalar>(dim, 2));
    return d;
  }

  KDifferential<Scalar> as_differential() const {
    KDifferential<Scalar> d;
    d.k = 2;
    d.dim = dim;
    d.on_basis = delta;
    return d;
  }

  Cobracket scaled(const Scalar& c) const {
    Cobracket r;
    r.dim = dim;
    for (const auto& m : delta) r.delta.push_back(m.scaled(c));
    return r;
  }
};

// delta = [r, .] restricted to degree one.
inline Cobracket coboundary_cobracket(const LieAlgebra& L, const Multivector<Scalar>& r) {
  if (r.grade != 2) throw std::invalid_argument("coboundary_cobracket: grade two expected");
  Cobracket d;
  d.dim = L.dim;
  for (size_t i = 0; i < L.dim; ++i)
    d.delta.push_back(schouten(L, r, mv_basis(L.dim, static_cast<int>(i))));
  return d;
}

// delta([X,Y]) = [delta X, Y] + [X, delta Y] on all basis pairs.
inline CheckReport check_cocycle(const LieAlgebra& L, const Cobracket& d) {
  CheckReport r = is_k_differential(L, d.as_differential());
  r.name = "cocycle";
  return r;
}

// The derivation extension of delta squares to zero; degree one suffices,
// higher degrees follow from the Leibniz rule.
inline CheckReport check_delta_squared(const LieAlgebra& L, const Cobracket& d) {
  KDifferential<Scalar> kd = d.as_differential();
  for (size_t i = 0; i < L.dim; ++i) {
    Multivector<Scalar> res = extend_derivation(kd, d.delta[i]);
    if (!res.is_zero())
      return CheckReport::fail("delta_squared", "delta^2(" + L.basis_names[i] +
                                                    ") = " + res.str(L.basis_names));
  }
  return CheckReport::pass("delta_squared",
                           "checked on degree one; higher degrees follow by the Leibniz rule");
}

// Bracket on the dual: <[xi_i, xi_j]*, e_k> = <xi_i ^ xi_j, delta e_k>.
inline LieAlgebra dual_bracket(const LieAlgebra& L, const Cobracket& d) {
  LieAlgebra dual = LieAlgebra::abelian(L.dim);
  dual.basis_names.clear();
  for (const auto& n : L.basis_names) dual.basis_names.push_back(n + "*");
  for (size_t i = 0; i < L.dim; ++i)
    for (size_t j = 0; j < L.dim; ++j)
      for (size_t k = 0; k < L.dim; ++k) {
        IndexTuple t = {static_cast<int>(i), static_cast<int>(j)};
        int sign = sort_tuple_sign(t);
        if (sign == 0) continue;
        auto it = d.delta[k].terms.find(t);
        if (it == d.delta[k].terms.end()) continue;
        dual.c[i][j][k] = sign < 0 ? -it->second : it->second;
      }
  return dual;
}

// s = [r,r] must be ad-invariant; triangular when s vanishes.
inline CheckReport check_r_matrix(const LieAlgebra& L, const Multivector<Scalar>& r) {
  Multivector<Scalar> s = schouten(L, r, r);
  bool triangular = s.is_zero();
  std::string witness;
  if (!is_ad_invariant(L, s, &witness))
    return CheckReport::fail("r_matrix", witness, "[r,r] is not ad-invariant");
  return CheckReport::pass("r_matrix", triangular ? "triangular: [r,r] = 0"
                                                  : "triangular: false ([r,r] != 0)");
}

// r = sum over positive roots of e_alpha ^ f_alpha / (e_alpha, f_alpha).
inline Multivector<Scalar> chevalley_r_matrix(const SlData& data) {
  Multivector<Scalar> r(data.L.dim, 2);
  for (size_t a = 0; a < data.chev.positive_roots.size(); ++a) {
    if (data.chev.pairing[a].is_zero())
      throw std::domain_error("chevalley_r_matrix: zero pairing");
    Scalar lambda = Scalar(1) / data.chev.pairing[a];
    Multivector<Scalar> term =
        wedge(mv_basis(data.L.dim, static_cast<int>(data.chev.e_index[a])),
              mv_basis(data.L.dim, static_cast<int>(data.chev.f_index[a])));
    r += term.scaled(lambda);
  }
  return r;
}

// r_hat = (1/2) sum lambda_alpha X_alpha ^ Y_alpha, expressed in the compact
// basis; its image under the change of basis equals i*r.
inline Multivector<Scalar> compact_r_matrix(const SlData& data, const CompactBasis& cb) {
  size_t roots = data.chev.positive_roots.size();
  Multivector<Scalar> r_hat(data.L.dim, 2);
  for (size_t a = 0; a < roots; ++a) {
    Scalar lambda = Scalar(1) / data.chev.pairing[a];
    Multivector<Scalar> term = wedge(mv_basis(data.L.dim, static_cast<int>(a)),
                                     mv_basis(data.L.dim, static_cast<int>(roots + a)));
    r_hat += term.scaled(lambda * Scalar(1, 2));
  }
  Multivector<Scalar> image = apply_linear(cb.change, r_hat);
  Multivector<Scalar> expected = chevalley_r_matrix(data).scaled(Scalar::i());
  if (!(image == expected))
    throw std::runtime_error("compact_r_matrix: change-of-basis image differs from i*r");
  return r_hat;
}

struct QuasiBialgebra {
  Cobracket delta;
  Multivector<Scalar> phi;  // grade three
};

// (i) cocycle, (ii) delta^2 = [phi, .] on degree one, (iii) delta(phi) = 0.
inline CheckReport check_quasi_bialgebra(const LieAlgebra& L, const QuasiBialgebra& q) {
  std::vector<CheckReport> subs;
  subs.push_back(check_cocycle(L, q.delta));

  KDifferential<Scalar> kd = q.delta.as_differential();
  CheckReport sq = CheckReport::pass("delta_squared_is_ad_phi");
  for (size_t i = 0; i < L.dim; ++i) {
    Multivector<Scalar> lhs = extend_derivation(kd, q.delta.delta[i]);
    Multivector<Scalar> rhs = schouten(L, q.phi, mv_basis(L.dim, static_cast<int>(i)));
    Multivector<Scalar> res = lhs - rhs;
    if (!res.is_zero()) {
      sq = CheckReport::fail("delta_squared_is_ad_phi",
                             "delta^2(" + L.basis_names[i] + ") - [phi, " + L.basis_names[i] +
                                 "] = " + res.str(L.basis_names));
      break;
    }
  }
  subs.push_back(std::move(sq));

  Multivector<Scalar> dphi = extend_derivation(kd, q.phi);
  if (dphi.is_zero())
    subs.push_back(CheckReport::pass("delta_phi_zero"));
  else
    subs.push_back(CheckReport::fail("delta_phi_zero", "delta(phi) = " + dphi.str(L.basis_names)));

  return aggregate("quasi_bialgebra", std::move(subs));
}

}  // namespace pgcheck
