#pragma once

// (1,1)-tensors with exact polynomial entries: Nijenhuis torsion, the
// compatibility conditions with a Poisson bivector, the deformed bivector
// pi_N, the degree-0 derivation i_N, the deformed differential d_N, and the
// combined Poisson (quasi-)Nijenhuis verdicts.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/polyfield.hpp"

namespace pgcheck {

// N(e_a) = sum_b m[b][a] e_b; the transpose acts on one-forms.
template <class R>
struct TensorN {
  std::vector<std::string> chart;
  Mat<R> m;
  R zero;

  size_t dim() const { return chart.size(); }

  PolyField<R> apply(const PolyField<R>& X) const {
    if (X.grade != 1 || X.variance != Variance::multivector)
      throw std::invalid_argument("TensorN: vector field expected");
    PolyField<R> r(chart, Variance::multivector, 1, zero);
    for (size_t b = 0; b < dim(); ++b) {
      R acc = zero;
      for (size_t a = 0; a < dim(); ++a) acc = acc + m[b][a] * X.coeff({static_cast<int>(a)});
      r.add_term({static_cast<int>(b)}, acc);
    }
    return r;
  }

  PolyField<R> apply_transpose(const PolyField<R>& xi) const {
    if (xi.grade != 1 || xi.variance != Variance::form)
      throw std::invalid_argument("TensorN: one-form expected");
    PolyField<R> r(chart, Variance::form, 1, zero);
    for (size_t a = 0; a < dim(); ++a) {
      R acc = zero;
      for (size_t b = 0; b < dim(); ++b) acc = acc + m[b][a] * xi.coeff({static_cast<int>(b)});
      r.add_term({static_cast<int>(a)}, acc);
    }
    return r;
  }
};

template <class R>
TensorN<R> tensor_scalar_multiple(const std::vector<std::string>& chart, const R& f) {
  TensorN<R> n;
  n.chart = chart;
  n.zero = ring_zero_like(f);
  n.m = mat_filled(chart.size(), chart.size(), n.zero);
  for (size_t k = 0; k < chart.size(); ++k) n.m[k][k] = f;
  return n;
}

// T(X,Y) = [NX,NY] - N([NX,Y] + [X,NY] - N[X,Y]) for arbitrary fields.
template <class R>
PolyField<R> torsion_eval(const TensorN<R>& N, const PolyField<R>& X, const PolyField<R>& Y) {
  PolyField<R> nx = N.apply(X), ny = N.apply(Y);
  PolyField<R> inner = field_bracket(nx, Y) + field_bracket(X, ny) - N.apply(field_bracket(X, Y));
  return field_bracket(nx, ny) - N.apply(inner);
}

// Coordinate table T[i][j], antisymmetric in (i, j).
template <class R>
std::vector<std::vector<PolyField<R>>> torsion(const TensorN<R>& N) {
  size_t n = N.dim();
  std::vector<std::vector<PolyField<R>>> T(
      n, std::vector<PolyField<R>>(n, pf_zero(N.chart, Variance::multivector, 1, N.zero)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      PolyField<R> t = torsion_eval(N, pf_basis(N.chart, Variance::multivector,
                                                static_cast<int>(i), N.zero),
                                    pf_basis(N.chart, Variance::multivector,
                                             static_cast<int>(j), N.zero));
      T[i][j] = t;
      T[j][i] = -t;
    }
  return T;
}

template <class R>
bool torsion_is_zero(const TensorN<R>& N, std::string* witness = nullptr) {
  auto T = torsion(N);
  for (size_t i = 0; i < N.dim(); ++i)
    for (size_t j = i + 1; j < N.dim(); ++j)
      if (!T[i][j].is_zero()) {
        if (witness)
          *witness = "T(" + N.chart[i] + "," + N.chart[j] + ") = " + T[i][j].str();
        return false;
      }
  return true;
}

// i_N: replace one argument slot at a time by its N-image.
template <class R>
PolyField<R> i_N(const TensorN<R>& N, const PolyField<R>& w) {
  if (w.variance != Variance::form) throw std::invalid_argument("i_N: forms only");
  PolyField<R> r(w.chart, Variance::form, w.grade, w.zero);
  if (w.grade == 0) return r;  // empty sum
  for (const auto& [t, c] : w.terms) {
    for (size_t slot = 0; slot < t.size(); ++slot) {
      PolyField<R> img =
          N.apply_transpose(pf_basis(w.chart, Variance::form, t[slot], w.zero));
      for (const auto& [it, ic] : img.terms) {
        IndexTuple tup = t;
        tup[slot] = it[0];
        int sign = sort_tuple_sign(tup);
        if (sign == 0) continue;
        R v = c * ic;
        if (sign < 0) v = -v;
        r.add_term(std::move(tup), v);
      }
    }
  }
  return r;
}

// d_N = i_N d - d i_N; on grade zero this is i_N of the differential.
template <class R>
PolyField<R> d_N(const TensorN<R>& N, const PolyField<R>& w) {
  return i_N(N, de_rham(w)) - de_rham(i_N(N, w));
}

template <class R>
PolyField<R> d_N_function(const TensorN<R>& N, const R& f) {
  return i_N(N, d_function(N.chart, f));
}

template <class R>
PolyField<R> pi_N(const PolyField<R>& pi, const TensorN<R>& N);

// Compatibility of (pi, N): the sharp maps intertwine, and the Koszul bracket
// of pi_N agrees with the N-deformation of the Koszul bracket of pi on all
// coordinate one-form pairs (both sides are function-linear after expansion,
// so coordinate pairs suffice).
template <class R>
CheckReport check_compatible(const PolyField<R>& pi, const TensorN<R>& N) {
  std::vector<CheckReport> subs;
  Mat<R> Pi = sharp_matrix(pi);
  Mat<R> lhs = mat_mul(N.m, Pi);
  Mat<R> rhs = mat_mul(Pi, mat_transpose(N.m));
  bool sharp_ok = mat_equal(lhs, rhs);
  if (sharp_ok) {
    subs.push_back(CheckReport::pass("sharp_intertwine"));
  } else {
    std::string w;
    for (size_t i = 0; i < lhs.size() && w.empty(); ++i)
      for (size_t j = 0; j < lhs.size(); ++j)
        if (!(lhs[i][j] == rhs[i][j])) {
          w = "(N pi# - pi# N*)[" + std::to_string(i) + "][" + std::to_string(j) +
              "] = " + to_string(lhs[i][j] - rhs[i][j]);
          break;
        }
    subs.push_back(CheckReport::fail("sharp_intertwine", w));
  }
  if (!sharp_ok) {
    subs.push_back(CheckReport::skipped("deformed_bracket", "pi_N is not defined"));
    return aggregate("compatibility", std::move(subs));
  }

  PolyField<R> piN = pi_N(pi, N);
  CheckReport br = CheckReport::pass("deformed_bracket");
  for (size_t i = 0; i < N.dim() && br.passed(); ++i)
    for (size_t j = i + 1; j < N.dim(); ++j) {
      PolyField<R> a = pf_basis(pi.chart, Variance::form, static_cast<int>(i), pi.zero);
      PolyField<R> b = pf_basis(pi.chart, Variance::form, static_cast<int>(j), pi.zero);
      PolyField<R> left = koszul_bracket(piN, a, b);
      PolyField<R> right = koszul_bracket(pi, N.apply_transpose(a), b) +
                           koszul_bracket(pi, a, N.apply_transpose(b)) -
                           N.apply_transpose(koszul_bracket(pi, a, b));
      PolyField<R> res = left - right;
      if (!res.is_zero()) {
        br = CheckReport::fail("deformed_bracket", "on (d" + pi.chart[i] + ", d" + pi.chart[j] +
                                                       "): " + res.str());
        break;
      }
    }
  subs.push_back(std::move(br));
  return aggregate("compatibility", std::move(subs));
}

// pi_N# = N pi#; antisymmetry of the result certifies the intertwine condition.
template <class R>
PolyField<R> pi_N(const PolyField<R>& pi, const TensorN<R>& N) {
  Mat<R> PiN = mat_mul(N.m, sharp_matrix(pi));
  size_t n = N.dim();
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      if (!(PiN[a][b] == -PiN[b][a]))
        throw std::domain_error("pi_N: N pi# is not antisymmetric (incompatible pair)");
    }
  }
  PolyField<R> r(pi.chart, Variance::multivector, 2, pi.zero);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      r.add_term({static_cast<int>(a), static_cast<int>(b)}, PiN[b][a]);
  return r;
}

// Poisson Nijenhuis: Poisson pi, vanishing torsion, compatibility; on success
// the pair (pi, pi_N) is verified bi-Hamiltonian.
template <class R>
CheckReport check_pn(const PolyField<R>& pi, const TensorN<R>& N) {
  std::vector<CheckReport> subs;
  subs.push_back(is_poisson(pi));
  {
    std::string w;
    if (torsion_is_zero(N, &w))
      subs.push_back(CheckReport::pass("torsion_free"));
    else
      subs.push_back(CheckReport::fail("torsion_free", w));
  }
  subs.push_back(check_compatible(pi, N));
  bool all = true;
  for (const auto& s : subs) all = all && s.passed();
  if (all) {
    PolyField<R> piN = pi_N(pi, N);
    PolyField<R> mixed = sn_bracket(pi, piN);
    PolyField<R> squared = sn_bracket(piN, piN);
    if (mixed.is_zero() && squared.is_zero())
      subs.push_back(CheckReport::pass("bi_hamiltonian"));
    else
      subs.push_back(CheckReport::fail(
          "bi_hamiltonian", mixed.is_zero() ? "[pi_N,pi_N] = " + squared.str()
                                            : "[pi,pi_N] = " + mixed.str()));
  } else {
    subs.push_back(CheckReport::skipped("bi_hamiltonian", "prerequisites failed"));
  }
  return aggregate("poisson_nijenhuis", std::move(subs));
}

// Poisson quasi-Nijenhuis: closed phi and i_N phi, compatibility, and torsion
// measured by the sharp image of the contracted three-form.
template <class R>
CheckReport check_pqn(const PolyField<R>& pi, const TensorN<R>& N, const PolyField<R>& phi) {
  std::vector<CheckReport> subs;
  subs.push_back(is_poisson(pi));
  subs.push_back(check_compatible(pi, N));
  {
    PolyField<R> dphi = de_rham(phi);
    subs.push_back(dphi.is_zero() ? CheckReport::pass("phi_closed")
                                  : CheckReport::fail("phi_closed", "d(phi) = " + dphi.str()));
  }
  {
    PolyField<R> dinphi = de_rham(i_N(N, phi));
    subs.push_back(dinphi.is_zero()
                       ? CheckReport::pass("i_N_phi_closed")
                       : CheckReport::fail("i_N_phi_closed", "d(i_N phi) = " + dinphi.str()));
  }
  {
    CheckReport tr = CheckReport::pass("torsion_identity");
    auto T = torsion(N);
    for (size_t i = 0; i < N.dim() && tr.passed(); ++i)
      for (size_t j = i + 1; j < N.dim(); ++j) {
        PolyField<R> contraction = interior_pair(
            pf_basis(pi.chart, Variance::multivector, static_cast<int>(i), pi.zero),
            pf_basis(pi.chart, Variance::multivector, static_cast<int>(j), pi.zero), phi);
        PolyField<R> rhs = sharp(pi, contraction);
        PolyField<R> res = T[i][j] - rhs;
        if (!res.is_zero()) {
          tr = CheckReport::fail("torsion_identity",
                                 "T(" + pi.chart[i] + "," + pi.chart[j] +
                                     ") - pi#(iota phi) = " + res.str());
          break;
        }
      }
    subs.push_back(std::move(tr));
  }
  return aggregate("poisson_quasi_nijenhuis", std::move(subs));
}

// The two bracket identities of the nondegenerate picture:
// [pi, pi_N] = 0 and [pi_N, pi_N] = kTwistFactor * (wedge^3 sharp) phi
// (the prefactor matches the twisted identity under this library's bracket
// normalization; the nondegenerate fixture in the tests anchors it).
template <class R>
CheckReport check_nondegenerate_identities(const PolyField<R>& pi, const TensorN<R>& N,
                           const PolyField<R>& phi) {
  std::vector<CheckReport> subs;
  PolyField<R> piN = pi_N(pi, N);
  {
    PolyField<R> mixed = sn_bracket(pi, piN);
    subs.push_back(mixed.is_zero()
                       ? CheckReport::pass("mixed_bracket_vanishes")
                       : CheckReport::fail("mixed_bracket_vanishes", "[pi,pi_N] = " + mixed.str()));
  }
  {
    PolyField<R> lhs = sn_bracket(piN, piN);
    PolyField<R> rhs = wedge3_sharp(pi, phi).scaled(Scalar(kTwistFactor));
    PolyField<R> res = lhs - rhs;
    subs.push_back(res.is_zero()
                       ? CheckReport::pass("deformed_square_identity")
                       : CheckReport::fail("deformed_square_identity",
                                           "[pi_N,pi_N] - " + std::to_string(kTwistFactor) +
                                               "*(^3 sharp)phi = " + res.str()));
  }
  return aggregate("nondegenerate_identities", std::move(subs));
}

// An operator on forms of every grade, e.g. d_N.
template <class R>
using FormOperator = std::function<PolyField<R>(const PolyField<R>&)>;

template <class R>
FormOperator<R> d_N_operator(const TensorN<R>& N) {
  return [N](const PolyField<R>& w) { return d_N(N, w); };
}

// [delta, d] = delta d + d delta must vanish; both sides are differentials,
// so coordinate functions and coordinate one-forms generate the check.
template <class R>
CheckReport check_anticommutes_with_d(const std::vector<std::string>& chart, const R& zero,
                             const FormOperator<R>& delta) {
  for (size_t k = 0; k < chart.size(); ++k) {
    PolyField<R> xk = pf_function(chart, Variance::form, ring_variable_like(zero, k));
    PolyField<R> res = delta(de_rham(xk)) + de_rham(delta(xk));
    if (!res.is_zero())
      return CheckReport::fail("anticommutes_with_d", "on " + chart[k] + ": " + res.str());
  }
  for (size_t k = 0; k < chart.size(); ++k) {
    PolyField<R> dxk = pf_basis(chart, Variance::form, static_cast<int>(k), zero);
    PolyField<R> res = delta(de_rham(dxk)) + de_rham(delta(dxk));
    if (!res.is_zero())
      return CheckReport::fail("anticommutes_with_d", "on d" + chart[k] + ": " + res.str());
  }
  return CheckReport::pass("anticommutes_with_d",
                           "checked on coordinate functions and one-forms; "
                           "general arguments follow by the derivation rules");
}

// Quasi-bialgebroid coherence of ((T*M)_pi, d_N, phi): d_N is a derivation of
// the Koszul bracket, d_N^2 = [phi, .] on generators, and d_N phi = 0.
template <class R>
CheckReport qn_coherence(const PolyField<R>& pi, const TensorN<R>& N, const PolyField<R>& phi) {
  std::vector<CheckReport> subs;
  size_t n = pi.dim();
  {
    CheckReport r = CheckReport::pass("bracket_derivation");
    for (size_t i = 0; i < n && r.passed(); ++i)
      for (size_t j = i + 1; j < n; ++j) {
        PolyField<R> a = pf_basis(pi.chart, Variance::form, static_cast<int>(i), pi.zero);
        PolyField<R> b = pf_basis(pi.chart, Variance::form, static_cast<int>(j), pi.zero);
        PolyField<R> lhs = d_N(N, koszul_bracket(pi, a, b));
        PolyField<R> rhs = form_algebroid_bracket<R>(pi, nullptr, d_N(N, a), b) +
                           form_algebroid_bracket<R>(pi, nullptr, a, d_N(N, b));
        PolyField<R> res = lhs - rhs;
        if (!res.is_zero()) {
          r = CheckReport::fail("bracket_derivation",
                                "on (d" + pi.chart[i] + ", d" + pi.chart[j] + "): " + res.str());
          break;
        }
      }
    subs.push_back(std::move(r));
  }
  {
    CheckReport r = CheckReport::pass("square_is_ad_phi");
    for (size_t k = 0; k < n && r.passed(); ++k) {
      R xk = ring_variable_like(pi.zero, k);
      PolyField<R> f = pf_function(pi.chart, Variance::form, xk);
      PolyField<R> lhs = d_N(N, d_N_function(N, xk));
      PolyField<R> rhs = form_algebroid_bracket<R>(pi, nullptr, phi, f);
      PolyField<R> res = lhs - rhs;
      if (!res.is_zero()) {
        r = CheckReport::fail("square_is_ad_phi", "on " + pi.chart[k] + ": " + res.str());
        break;
      }
    }
    for (size_t k = 0; k < n && r.passed(); ++k) {
      PolyField<R> dxk = pf_basis(pi.chart, Variance::form, static_cast<int>(k), pi.zero);
      PolyField<R> lhs = d_N(N, d_N(N, dxk));
      PolyField<R> rhs = form_algebroid_bracket<R>(pi, nullptr, phi, dxk);
      PolyField<R> res = lhs - rhs;
      if (!res.is_zero()) {
        r = CheckReport::fail("square_is_ad_phi", "on d" + pi.chart[k] + ": " + res.str());
        break;
      }
    }
    subs.push_back(std::move(r));
  }
  {
    PolyField<R> res = d_N(N, phi);
    subs.push_back(res.is_zero() ? CheckReport::pass("d_N_phi_zero")
                                 : CheckReport::fail("d_N_phi_zero", "d_N(phi) = " + res.str()));
  }
  return aggregate("quasi_bialgebroid_coherence", std::move(subs));
}

}  // namespace pgcheck
