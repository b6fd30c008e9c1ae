#pragma once

// Command dispatch over ingested documents.  Each command produces one
// CheckReport; `all` aggregates every check whose sections are present and
// marks the others skipped, sorted by check name for stable output.

#include <algorithm>
#include <chrono>
#include <string>
#include <variant>
#include <vector>

#include "pgcheck/document.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

struct RunOptions {
  std::optional<std::uint64_t> seed;     // overrides matrix_group.seed
  std::optional<std::size_t> samples;    // overrides matrix_group.samples
  bool numeric_dynamical = false;
};

namespace detail {

inline CheckReport missing(const std::string& check, const std::string& section) {
  return CheckReport::error(check, "missing section '" + section + "' required by this check");
}

inline CheckReport run_check_lie(const Document& doc) {
  if (!doc.lie) return missing("lie_algebra", "lie_algebra");
  std::vector<CheckReport> subs;
  subs.push_back(validate_lie_algebra(*doc.lie));
  if (doc.form) subs.push_back(validate_bilinear(*doc.lie, *doc.form));
  return aggregate("check-lie", std::move(subs));
}

inline CheckReport run_check_rmatrix(const Document& doc) {
  if (!doc.lie) return missing("check-rmatrix", "lie_algebra");
  if (!doc.r_matrix) return missing("check-rmatrix", "r_matrix");
  CheckReport r = check_r_matrix(*doc.lie, *doc.r_matrix);
  r.name = "check-rmatrix";
  return r;
}

inline CheckReport run_check_bialgebra(const Document& doc) {
  if (!doc.lie) return missing("check-bialgebra", "lie_algebra");
  if (!doc.cobracket) return missing("check-bialgebra", "cobracket");
  std::vector<CheckReport> subs;
  subs.push_back(check_cocycle(*doc.lie, *doc.cobracket));
  subs.push_back(check_delta_squared(*doc.lie, *doc.cobracket));
  CheckReport dual = validate_lie_algebra(dual_bracket(*doc.lie, *doc.cobracket));
  dual.name = "dual_jacobi";
  subs.push_back(std::move(dual));
  return aggregate("check-bialgebra", std::move(subs));
}

inline CheckReport run_check_quasi(const Document& doc) {
  if (!doc.lie) return missing("check-quasi", "lie_algebra");
  if (!doc.cobracket) return missing("check-quasi", "cobracket");
  if (!doc.phi) return missing("check-quasi", "phi");
  CheckReport r = check_quasi_bialgebra(*doc.lie, QuasiBialgebra{*doc.cobracket, *doc.phi});
  r.name = "check-quasi";
  return r;
}

inline CheckReport run_manin_extract(const Document& doc) {
  if (!doc.manin) return missing("manin-extract", "manin");
  std::vector<CheckReport> subs;
  subs.push_back(validate_manin(*doc.manin));
  if (subs[0].passed()) {
    try {
      ExtractedQuasi ex = extract_quasi(*doc.manin);
      CheckReport got = ex.verification;
      got.detail = "F, phi extracted; phi = " + ex.q.phi.str(ex.g.basis_names);
      subs.push_back(std::move(got));
    } catch (const std::exception& e) {
      subs.push_back(CheckReport::error("extraction", e.what()));
    }
  } else {
    subs.push_back(CheckReport::skipped("extraction", "validation failed"));
  }
  return aggregate("manin-extract", std::move(subs));
}

inline CheckReport run_check_poisson(const Document& doc) {
  if (!doc.poisson) return missing("check-poisson", "poisson");
  CheckReport r = std::visit([](const auto& pi) { return is_poisson(pi); }, doc.poisson->pi);
  r.name = "check-poisson";
  return r;
}

inline CheckReport run_check_twisted(const Document& doc) {
  if (!doc.poisson) return missing("check-twisted", "poisson");
  if (!doc.three_form) return missing("check-twisted", "three_form");
  CheckReport r = std::visit(
      [&](const auto& pi) {
        using R = typename std::decay_t<decltype(pi)>;
        return check_twisted(pi, std::get<R>(*doc.three_form));
      },
      doc.poisson->pi);
  r.name = "check-twisted";
  return r;
}

inline CheckReport run_check_dynamical(const Document& doc, const RunOptions& opt) {
  if (!doc.lie) return missing("check-dynamical", "lie_algebra");
  if (!doc.dynamical) return missing("check-dynamical", "dynamical");
  std::vector<CheckReport> subs;
  subs.push_back(check_dynamical(*doc.dynamical));
  if (opt.numeric_dynamical) {
    if (doc.dynamical->cartan.size() == 1)
      subs.push_back(numeric_coth_spotcheck(opt.samples.value_or(8),
                                            opt.seed.value_or(1)));
    else
      subs.push_back(CheckReport::skipped("dynamical_coth_numeric",
                                          "numeric spot check supports rank one only"));
  }
  return aggregate("check-dynamical", std::move(subs));
}

inline CheckReport run_check_multiplicative(const Document& doc, const RunOptions& opt) {
  if (!doc.matrix_group) return missing("check-multiplicative", "matrix_group");
  const MatrixGroupSection& s = *doc.matrix_group;
  std::size_t samples = opt.samples.value_or(s.samples);
  SplitMix64 rng(opt.seed.value_or(s.seed));
  std::vector<CheckReport> subs;
  CheckReport mult = CheckReport::pass(
      "multiplicative", std::to_string(samples) + " random pairs, exact arithmetic");
  CheckReport coc = CheckReport::pass(
      "group_cocycle", std::to_string(samples) + " random pairs, exact arithmetic");
  for (std::size_t k = 0; k < samples; ++k) {
    GroupPoint g = random_group_point(s.n, s.kind, rng);
    GroupPoint h = random_group_point(s.n, s.kind, rng);
    CheckReport m = check_multiplicative(s.r_embedded, g, h);
    if (!m.passed() && mult.passed())
      mult = CheckReport::fail("multiplicative",
                               m.residual_witness.value_or("") + " (sample " +
                                   std::to_string(k) + ")");
    CheckReport c = check_cocycle_identity(s.r_embedded, g, h);
    if (!c.passed() && coc.passed())
      coc = CheckReport::fail("group_cocycle", c.residual_witness.value_or("") + " (sample " +
                                                   std::to_string(k) + ")");
  }
  subs.push_back(std::move(mult));
  subs.push_back(std::move(coc));
  return aggregate("check-multiplicative", std::move(subs));
}

inline CheckReport run_check_action(const Document& doc) {
  if (!doc.lie) return missing("check-action", "lie_algebra");
  if (!doc.cobracket) return missing("check-action", "cobracket");
  if (!doc.poisson) return missing("check-action", "poisson");
  if (!doc.action_rho) return missing("check-action", "action");
  CheckReport r = std::visit(
      [&](const auto& pi) {
        using F = std::decay_t<decltype(pi)>;
        std::vector<F> rho;
        for (const auto& v : *doc.action_rho) rho.push_back(std::get<F>(v));
        return poisson_action_check(*doc.lie, rho, *doc.cobracket, pi);
      },
      doc.poisson->pi);
  r.name = "check-action";
  return r;
}

}  // namespace detail

// The Nijenhuis family needs the matching tensor alternative; dispatch on the
// Poisson section's coefficient ring.
namespace detail {

template <class R>
CheckReport nij_dispatch(const Document& doc, const std::string& which, const PolyField<R>& pi) {
  const TensorN<R>& N = std::get<TensorN<R>>(*doc.tensor_n);
  if (which == "check-pn") {
    CheckReport r = check_pn(pi, N);
    r.name = "check-pn";
    return r;
  }
  const PolyField<R>& phi = std::get<PolyField<R>>(*doc.three_form);
  if (which == "check-pqn") {
    CheckReport r = check_pqn(pi, N, phi);
    r.name = "check-pqn";
    return r;
  }
  CheckReport r = check_nondegenerate_identities(pi, N, phi);
  r.name = "check-prop310";
  return r;
}

inline CheckReport run_nijenhuis(const Document& doc, const std::string& which) {
  if (!doc.poisson) return missing(which, "poisson");
  if (!doc.tensor_n) return missing(which, "tensor_n");
  if (which != "check-pn" && !doc.three_form) return missing(which, "three_form");
  return std::visit([&](const auto& pi) { return nij_dispatch(doc, which, pi); },
                    doc.poisson->pi);
}

}  // namespace detail

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "check-lie",      "check-rmatrix",        "check-bialgebra", "check-quasi",
      "dualize",        "manin-extract",        "check-poisson",   "check-twisted",
      "check-pn",       "check-pqn",            "check-prop310",   "check-dynamical",
      "check-multiplicative", "check-action",   "all"};
  return names;
}

// Section signatures deciding what `all` runs.  A three-form without a
// (1,1)-tensor marks twisted data, whose bivector is deliberately not Poisson,
// so check-poisson applies only outside that configuration.
inline bool command_applicable(const Document& doc, const std::string& cmd) {
  bool twisted_data = doc.poisson && doc.three_form && !doc.tensor_n;
  if (cmd == "check-lie") return doc.lie.has_value();
  if (cmd == "check-rmatrix") return doc.lie && doc.r_matrix;
  if (cmd == "check-bialgebra") return doc.lie && doc.cobracket;
  if (cmd == "check-quasi") return doc.lie && doc.cobracket && doc.phi;
  if (cmd == "manin-extract") return doc.manin.has_value();
  if (cmd == "check-poisson") return doc.poisson && !twisted_data;
  if (cmd == "check-twisted") return twisted_data;
  if (cmd == "check-pn") return doc.poisson && doc.tensor_n && !doc.three_form;
  if (cmd == "check-pqn") return doc.poisson && doc.tensor_n && doc.three_form;
  if (cmd == "check-prop310") return doc.poisson && doc.tensor_n && doc.three_form;
  if (cmd == "check-dynamical") return doc.lie && doc.dynamical;
  if (cmd == "check-multiplicative") return doc.matrix_group.has_value();
  if (cmd == "check-action") return doc.lie && doc.cobracket && doc.poisson && doc.action_rho;
  return false;
}

inline CheckReport run_command(const Document& doc, const std::string& cmd,
                               const RunOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  if (cmd == "check-lie") r = detail::run_check_lie(doc);
  else if (cmd == "check-rmatrix") r = detail::run_check_rmatrix(doc);
  else if (cmd == "check-bialgebra") r = detail::run_check_bialgebra(doc);
  else if (cmd == "check-quasi") r = detail::run_check_quasi(doc);
  else if (cmd == "manin-extract") r = detail::run_manin_extract(doc);
  else if (cmd == "check-poisson") r = detail::run_check_poisson(doc);
  else if (cmd == "check-twisted") r = detail::run_check_twisted(doc);
  else if (cmd == "check-pn" || cmd == "check-pqn" || cmd == "check-prop310")
    r = detail::run_nijenhuis(doc, cmd);
  else if (cmd == "check-dynamical") r = detail::run_check_dynamical(doc, opt);
  else if (cmd == "check-multiplicative") r = detail::run_check_multiplicative(doc, opt);
  else if (cmd == "check-action") r = detail::run_check_action(doc);
  else if (cmd == "all") {
    std::vector<std::string> checks;
    for (const std::string& c : command_names())
      if (c != "all" && c != "dualize") checks.push_back(c);
    std::sort(checks.begin(), checks.end());
    std::vector<CheckReport> subs;
    for (const std::string& c : checks) {
      if (command_applicable(doc, c))
        subs.push_back(run_command(doc, c, opt));
      else
        subs.push_back(CheckReport::skipped(c, "section not present"));
    }
    r = aggregate("all", std::move(subs));
  } else {
    r = CheckReport::error(cmd, "unknown command");
  }
  auto t1 = std::chrono::steady_clock::now();
  r.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

// The dual structure constants rendered as a lie_algebra document section.
// The starred display names are mapped to parseable identifiers so the output
// is itself a loadable document.
inline nlohmann::ordered_json dualize_to_json(const LieAlgebra& dual) {
  LieAlgebra out_alg = dual;
  for (auto& name : out_alg.basis_names) {
    std::string fixed;
    for (char c : name) fixed += (c == '*') ? std::string("_dual") : std::string(1, c);
    name = fixed;
  }
  nlohmann::ordered_json out;
  out["lie_algebra"]["basis"] = out_alg.basis_names;
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  for (size_t i = 0; i < out_alg.dim; ++i)
    for (size_t j = i + 1; j < out_alg.dim; ++j) {
      std::vector<Scalar> v(out_alg.dim);
      bool nonzero = false;
      for (size_t k = 0; k < out_alg.dim; ++k) {
        v[k] = out_alg.c[i][j][k];
        nonzero = nonzero || !v[k].is_zero();
      }
      if (!nonzero) continue;
      table["[" + out_alg.basis_names[i] + "," + out_alg.basis_names[j] + "]"] =
          out_alg.element_str(v);
    }
  out["lie_algebra"]["brackets"] = std::move(table);
  return out;
}

inline int exit_code_for(const CheckReport& r) {
  switch (r.status) {
    case Status::pass:
    case Status::skipped:
      return 0;
    case Status::fail:
      return 1;
    case Status::error:
      return 2;
  }
  return 2;
}

}  // namespace pgcheck
