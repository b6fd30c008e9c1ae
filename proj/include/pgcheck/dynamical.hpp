#pragma once

// Dynamical r-matrices r: h* -> wedge^2 g with rational-function coefficients
// in the coordinates dual to a chosen abelian subalgebra basis.  The defining
// condition is that
//     sum_i h_i ^ dr/dlambda_i + (1/2)[r, r]
// is a constant over h* with ad-invariant value.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgcheck/kdiff.hpp"
#include "pgcheck/multivector.hpp"
#include "pgcheck/ratfunc.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

struct DynamicalR {
  LieAlgebra g;
  std::vector<size_t> cartan;            // basis indices of h
  std::vector<std::string> lambda_names; // dual coordinates, one per h basis vector
  Multivector<RatFunc> r;                // grade two, coefficients in Q(lambda)

  DynamicalR(LieAlgebra g_, std::vector<size_t> cartan_, std::vector<std::string> lambdas,
             Multivector<RatFunc> r_)
      : g(std::move(g_)), cartan(std::move(cartan_)), lambda_names(std::move(lambdas)),
        r(std::move(r_)) {
    if (cartan.size() != lambda_names.size())
      throw std::invalid_argument("DynamicalR: one dual coordinate per Cartan element");
    for (size_t a : cartan)
      for (size_t b : cartan)
        for (size_t k = 0; k < g.dim; ++k)
          if (!g.c[a][b][k].is_zero())
            throw std::invalid_argument("DynamicalR: chosen subalgebra is not abelian");
    if (r.grade != 2 || r.dim != g.dim)
      throw std::invalid_argument("DynamicalR: r must be a wedge-square over g");
  }

  RatFunc one() const { return RatFunc::constant(lambda_names, Scalar(1)); }
};

// Entrywise d/dlambda_i.
inline Multivector<RatFunc> lambda_derivative(const Multivector<RatFunc>& m, size_t i) {
  Multivector<RatFunc> out(m.dim, m.grade);
  for (const auto& [t, c] : m.terms) out.add_term(t, c.derivative(i));
  return out;
}

// sum_i h_i ^ dr/dlambda_i + (1/2) [r, r], computed fiberwise over Q(lambda).
inline Multivector<RatFunc> cdybe_residual(const DynamicalR& d) {
  Multivector<RatFunc> acc(d.g.dim, 3);
  for (size_t i = 0; i < d.cartan.size(); ++i) {
    Multivector<RatFunc> h =
        mv_basis<RatFunc>(d.g.dim, static_cast<int>(d.cartan[i]), d.one());
    acc += wedge(h, lambda_derivative(d.r, i));
  }
  acc += schouten(d.g, d.r, d.r).scaled(Scalar(1, 2));
  return acc;
}

// Constant residual with ad-invariant value.
inline CheckReport check_dynamical(const DynamicalR& d) {
  Multivector<RatFunc> res = cdybe_residual(d);
  Multivector<Scalar> constant_part(d.g.dim, 3);
  for (const auto& [t, c] : res.terms) {
    auto v = c.constant_value();
    if (!v.has_value()) {
      std::string names;
      for (int idx : t) names += (names.empty() ? "" : "^") + d.g.basis_names[idx];
      return CheckReport::fail("dynamical",
                               "non-constant residual coefficient on " + names + ": " + c.str());
    }
    if (!v->is_zero()) constant_part.add_term(t, *v);
  }
  std::string witness;
  if (!is_ad_invariant(d.g, constant_part, &witness))
    return CheckReport::fail("dynamical", witness, "constant residual is not invariant");
  return CheckReport::pass("dynamical", constant_part.is_zero()
                                            ? "residual vanishes identically"
                                            : "residual is the constant invariant " +
                                                  constant_part.str(d.g.basis_names));
}

// Floating-point spot check of the hyperbolic-cotangent coefficient family
// c(lambda) = coth(lambda) on a rank-one Cartan: evaluates c' + c^2 at sample
// points and reports whether it stays constant.  Non-certifying by design;
// the exact machinery never consumes these values.
inline CheckReport numeric_coth_spotcheck(size_t samples, std::uint64_t seed) {
  if (samples < 2) samples = 2;
  long double base = 0;
  long double max_dev = 0;
  std::uint64_t state = seed;
  for (size_t k = 0; k < samples; ++k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    long double lambda = 0.5L + static_cast<long double>(state % 1000) / 250.0L;
    long double c = 1.0L / std::tanh(lambda);
    long double dc = 1.0L - c * c;
    long double v = dc + c * c;
    if (k == 0)
      base = v;
    else
      max_dev = std::max(max_dev, std::fabs(static_cast<double>(v - base)) + 0.0L);
  }
  CheckReport r = max_dev < 1e-9L
                      ? CheckReport::pass("dynamical_coth_numeric")
                      : CheckReport::fail("dynamical_coth_numeric",
                                          "residual coefficient drifts by " +
                                              std::to_string(static_cast<double>(max_dev)));
  r.detail = "numeric, non-certifying: coth(lambda) family sampled at " +
             std::to_string(samples) + " points";
  return r;
}

}  // namespace pgcheck
