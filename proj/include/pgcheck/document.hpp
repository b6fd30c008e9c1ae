#pragma once

// Declarative structure documents (.pg files): JSON with bracket tables,
// wedge-word term maps and expression strings.  Ingestion resolves every
// expression eagerly; schema or parse problems throw IngestError (exit code 2
// in the CLI), while failed mathematical checks are ordinary fail reports
// (exit code 1).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgcheck/bialgebra.hpp"
#include "pgcheck/chevalley.hpp"
#include "pgcheck/dynamical.hpp"
#include "pgcheck/lie.hpp"
#include "pgcheck/manin.hpp"
#include "pgcheck/matgroup.hpp"
#include "pgcheck/nijenhuis.hpp"
#include "pgcheck/parse.hpp"
#include "pgcheck/polyfield.hpp"
#include "pgcheck/report.hpp"

namespace pgcheck {

struct IngestError : std::runtime_error {
  explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

inline size_t resolve_name(const std::vector<std::string>& names, const std::string& n,
                           const std::string& where) {
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == n) return k;
  throw IngestError(where + ": unknown name '" + n + "'");
}

// "a^b^c" -> indices with the parity sign of sorting.
inline std::pair<IndexTuple, int> parse_wedge_word(const std::string& key,
                                                   const std::vector<std::string>& names,
                                                   const std::string& where) {
  IndexTuple t;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t caret = key.find('^', pos);
    std::string part = trim(key.substr(pos, caret == std::string::npos ? std::string::npos
                                                                       : caret - pos));
    if (part.empty()) throw IngestError(where + ": empty factor in wedge word '" + key + "'");
    t.push_back(static_cast<int>(resolve_name(names, part, where)));
    if (caret == std::string::npos) break;
    pos = caret + 1;
  }
  int sign = sort_tuple_sign(t);
  if (sign == 0) throw IngestError(where + ": repeated factor in wedge word '" + key + "'");
  return {t, sign};
}

// "[a,b]" or "{a,b}" -> pair of indices.
inline std::pair<size_t, size_t> parse_pair_key(const std::string& key, char open, char close,
                                                const std::vector<std::string>& names,
                                                const std::string& where) {
  std::string k = trim(key);
  if (k.size() < 5 || k.front() != open || k.back() != close)
    throw IngestError(where + ": malformed bracket key '" + key + "'");
  std::string inner = k.substr(1, k.size() - 2);
  size_t comma = inner.find(',');
  if (comma == std::string::npos)
    throw IngestError(where + ": malformed bracket key '" + key + "'");
  size_t a = resolve_name(names, trim(inner.substr(0, comma)), where);
  size_t b = resolve_name(names, trim(inner.substr(comma + 1)), where);
  return {a, b};
}

inline Multivector<Scalar> parse_terms_map(const nlohmann::json& j, size_t dim, int grade,
                                           const std::vector<std::string>& names,
                                           const std::string& where) {
  Multivector<Scalar> m(dim, grade);
  if (!j.is_object()) throw IngestError(where + ": expected an object of wedge-word terms");
  for (const auto& [key, value] : j.items()) {
    auto [t, sign] = parse_wedge_word(key, names, where);
    if (static_cast<int>(t.size()) != grade)
      throw IngestError(where + ": key '" + key + "' has grade " + std::to_string(t.size()) +
                        ", expected " + std::to_string(grade));
    Scalar c = parse_scalar(value.get<std::string>());
    if (sign < 0) c = -c;
    m.add_term(std::move(t), c);
  }
  return m;
}

}  // namespace detail

using FieldVariant = std::variant<PolyField<Poly>, PolyField<RatFunc>>;
using TensorVariant = std::variant<TensorN<Poly>, TensorN<RatFunc>>;

struct PoissonSection {
  std::vector<std::string> chart;
  ExprMode mode = ExprMode::poly;
  FieldVariant pi;
};

struct MatrixGroupSection {
  GroupKind kind = GroupKind::SL;
  size_t n = 2;
  std::vector<std::string> basis_names;
  Multivector<Scalar> r;           // over the algebra basis
  Multivector<Scalar> r_embedded;  // over the flat matrix coordinates
  size_t samples = 25;
  std::uint64_t seed = 1;
};

struct Document {
  std::optional<SlData> sl;  // present when the built-in constructor was used
  std::optional<LieAlgebra> lie;
  std::optional<BilinearForm> form;
  std::optional<Cobracket> cobracket;
  std::optional<Multivector<Scalar>> r_matrix;
  std::optional<Multivector<Scalar>> phi;
  std::optional<ManinData> manin;
  std::optional<PoissonSection> poisson;
  std::optional<FieldVariant> three_form;
  std::optional<TensorVariant> tensor_n;
  std::optional<DynamicalR> dynamical;
  std::optional<MatrixGroupSection> matrix_group;
  std::optional<std::vector<FieldVariant>> action_rho;
};

namespace detail {

inline LieAlgebra ingest_lie_algebra(const nlohmann::json& j, std::optional<SlData>& sl_out,
                                     const std::string& where) {
  if (j.contains("sl")) {
    size_t n = j.at("sl").get<size_t>();
    if (n < 2) throw IngestError(where + ": sl rank parameter must be at least 2");
    sl_out = chevalley_sl(n);
    return sl_out->L;
  }
  if (!j.contains("basis") || !j.contains("brackets"))
    throw IngestError(where + ": expected 'basis' and 'brackets' (or 'sl')");
  std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
  LieAlgebra L = LieAlgebra::abelian(names.size(), names);
  std::vector<std::vector<bool>> given(names.size(), std::vector<bool>(names.size(), false));
  for (const auto& [key, value] : j.at("brackets").items()) {
    auto [a, b] = parse_pair_key(key, '[', ']', names, where);
    std::vector<Scalar> v = parse_linear_combo(value.get<std::string>(), names);
    if (a == b) {
      for (const Scalar& c : v)
        if (!c.is_zero()) throw IngestError(where + ": [" + names[a] + "," + names[a] + "] != 0");
      continue;
    }
    if (given[a][b]) throw IngestError(where + ": duplicate bracket entry '" + key + "'");
    if (given[b][a]) {
      // mirror orientation already given: values must be negatives
      for (size_t k = 0; k < names.size(); ++k)
        if (!(L.c[a][b][k] == v[k]))
          throw IngestError(where + ": brackets for (" + names[a] + "," + names[b] +
                            ") are not antisymmetry-consistent");
      given[a][b] = true;
      continue;
    }
    L.set_bracket(a, b, v);
    given[a][b] = true;
  }
  return L;
}

inline Mat<Scalar> ingest_scalar_matrix(const nlohmann::json& j, size_t dim,
                                        const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw IngestError(where + ": expected a " + std::to_string(dim) + "-row matrix");
  Mat<Scalar> m = mat_filled(dim, dim, Scalar(0));
  for (size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim) throw IngestError(where + ": ragged matrix");
    for (size_t k = 0; k < dim; ++k) m[i][k] = parse_scalar(j[i][k].get<std::string>());
  }
  return m;
}

template <class R>
PolyField<R> ingest_bivector_table(const nlohmann::json& brackets,
                                   const std::vector<std::string>& chart, const R& zero,
                                   ExprMode mode, const std::string& where) {
  PolyField<R> pi(chart, Variance::multivector, 2, zero);
  std::vector<std::vector<bool>> given(chart.size(), std::vector<bool>(chart.size(), false));
  for (const auto& [key, value] : brackets.items()) {
    auto [a, b] = parse_pair_key(key, '{', '}', chart, where);
    Expression e = parse_expression(value.template get<std::string>(), chart, mode);
    R coeff = std::get<R>(e);
    if (a == b) {
      using pgcheck::is_zero;
      if (!is_zero(coeff)) throw IngestError(where + ": {" + chart[a] + "," + chart[a] + "} != 0");
      continue;
    }
    if (given[a][b]) throw IngestError(where + ": duplicate bracket entry '" + key + "'");
    if (given[b][a]) {
      IndexTuple t = {static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
      R existing = pi.coeff(t);
      R expected = (a < b) ? coeff : -coeff;
      if (!(existing == expected))
        throw IngestError(where + ": brackets for (" + chart[a] + "," + chart[b] +
                          ") are not antisymmetry-consistent");
      given[a][b] = true;
      continue;
    }
    if (a < b)
      pi.add_term({static_cast<int>(a), static_cast<int>(b)}, coeff);
    else
      pi.add_term({static_cast<int>(b), static_cast<int>(a)}, -coeff);
    given[a][b] = true;
  }
  return pi;
}

template <class R>
PolyField<R> ingest_field_terms(const nlohmann::json& j, const std::vector<std::string>& chart,
                                Variance v, int grade, const R& zero, ExprMode mode,
                                const std::string& where) {
  PolyField<R> f(chart, v, grade, zero);
  for (const auto& [key, value] : j.items()) {
    auto [t, sign] = parse_wedge_word(key, chart, where);
    if (static_cast<int>(t.size()) != grade)
      throw IngestError(where + ": key '" + key + "' has the wrong grade");
    R coeff = std::get<R>(parse_expression(value.template get<std::string>(), chart, mode));
    if (sign < 0) coeff = -coeff;
    f.add_term(std::move(t), coeff);
  }
  return f;
}

template <class R>
TensorN<R> ingest_tensor(const nlohmann::json& j, const std::vector<std::string>& chart,
                         const R& zero, ExprMode mode, const std::string& where) {
  if (!j.contains("matrix")) throw IngestError(where + ": expected 'matrix'");
  const auto& rows = j.at("matrix");
  size_t n = chart.size();
  if (!rows.is_array() || rows.size() != n) throw IngestError(where + ": matrix shape");
  TensorN<R> t;
  t.chart = chart;
  t.zero = zero;
  t.m = mat_filled(n, n, zero);
  for (size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw IngestError(where + ": ragged matrix");
    for (size_t k = 0; k < n; ++k)
      t.m[i][k] = std::get<R>(parse_expression(rows[i][k].get<std::string>(), chart, mode));
  }
  return t;
}

inline ManinData ingest_manin(const nlohmann::json& j) {
  if (!j.contains("double") || !j.contains("pairing") || !j.contains("g_basis") ||
      !j.contains("h_basis"))
    throw IngestError("manin: expected 'double', 'pairing', 'g_basis', 'h_basis'");
  ManinData m;
  std::optional<SlData> unused;
  m.d = ingest_lie_algebra(j.at("double"), unused, "manin.double");
  m.pairing.matrix = ingest_scalar_matrix(j.at("pairing"), m.d.dim, "manin.pairing");
  for (const auto& s : j.at("g_basis"))
    m.g_basis.push_back(parse_linear_combo(s.get<std::string>(), m.d.basis_names));
  for (const auto& s : j.at("h_basis"))
    m.h_basis.push_back(parse_linear_combo(s.get<std::string>(), m.d.basis_names));
  return m;
}

inline std::vector<std::string> gl_basis_names(size_t n) {
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  return names;
}

inline MatrixGroupSection ingest_matrix_group(const nlohmann::json& j) {
  MatrixGroupSection s;
  std::string kind = j.value("group", "SL");
  if (kind == "SL")
    s.kind = GroupKind::SL;
  else if (kind == "GL")
    s.kind = GroupKind::GL;
  else
    throw IngestError("matrix_group: group must be 'SL' or 'GL'");
  s.n = j.value("n", 2);
  if (s.n < 2) throw IngestError("matrix_group: n must be at least 2");
  s.samples = j.value("samples", 25);
  s.seed = j.value("seed", 1);

  std::vector<Mat<Scalar>> basis;
  if (s.kind == GroupKind::SL) {
    SlData data = chevalley_sl(s.n);
    s.basis_names = data.L.basis_names;
    basis = data.basis_matrices;
  } else {
    s.basis_names = gl_basis_names(s.n);
    for (size_t i = 0; i < s.n; ++i)
      for (size_t jj = 0; jj < s.n; ++jj) basis.push_back(detail::matrix_unit(s.n, i, jj));
  }
  if (!j.contains("r_matrix")) throw IngestError("matrix_group: expected 'r_matrix'");
  s.r = parse_terms_map(j.at("r_matrix"), s.basis_names.size(), 2, s.basis_names,
                        "matrix_group.r_matrix");
  s.r_embedded = embed_bivector(basis, s.r);
  return s;
}

}  // namespace detail

inline Document ingest(const nlohmann::json& j) {
  if (!j.is_object()) throw IngestError("document: top level must be an object");
  Document doc;

  if (j.contains("lie_algebra"))
    doc.lie = detail::ingest_lie_algebra(j.at("lie_algebra"), doc.sl, "lie_algebra");

  if (j.contains("bilinear_form")) {
    if (!doc.lie) throw IngestError("bilinear_form: requires a lie_algebra section");
    BilinearForm f;
    f.matrix = detail::ingest_scalar_matrix(j.at("bilinear_form").at("matrix"), doc.lie->dim,
                                            "bilinear_form");
    f.claims_invariant = j.at("bilinear_form").value("invariant", false);
    f.claims_nondegenerate = j.at("bilinear_form").value("nondegenerate", false);
    doc.form = std::move(f);
  } else if (doc.sl) {
    doc.form = doc.sl->trace_form;
  }

  if (j.contains("cobracket")) {
    if (!doc.lie) throw IngestError("cobracket: requires a lie_algebra section");
    Cobracket d = Cobracket::zero(doc.lie->dim);
    for (const auto& [key, value] : j.at("cobracket").items()) {
      size_t k = detail::resolve_name(doc.lie->basis_names, key, "cobracket");
      d.delta[k] =
          detail::parse_terms_map(value, doc.lie->dim, 2, doc.lie->basis_names, "cobracket");
    }
    doc.cobracket = std::move(d);
  }

  if (j.contains("r_matrix")) {
    if (!doc.lie) throw IngestError("r_matrix: requires a lie_algebra section");
    doc.r_matrix =
        detail::parse_terms_map(j.at("r_matrix"), doc.lie->dim, 2, doc.lie->basis_names,
                                "r_matrix");
  }

  if (j.contains("phi")) {
    if (!doc.lie) throw IngestError("phi: requires a lie_algebra section");
    doc.phi =
        detail::parse_terms_map(j.at("phi"), doc.lie->dim, 3, doc.lie->basis_names, "phi");
  }

  if (j.contains("manin")) doc.manin = detail::ingest_manin(j.at("manin"));

  if (j.contains("poisson")) {
    const auto& p = j.at("poisson");
    if (!p.contains("chart")) throw IngestError("poisson: expected 'chart'");
    PoissonSection s;
    s.chart = p.at("chart").get<std::vector<std::string>>();
    std::string ring = p.value("ring", "poly");
    if (ring == "poly")
      s.mode = ExprMode::poly;
    else if (ring == "laurent")
      s.mode = ExprMode::laurent;
    else if (ring == "ratfunc")
      s.mode = ExprMode::ratfunc;
    else
      throw IngestError("poisson: ring must be poly, laurent or ratfunc");
    const auto& table = p.contains("brackets") ? p.at("brackets") : nlohmann::json::object();
    if (s.mode == ExprMode::ratfunc) {
      RatFunc zero(Poly(s.chart, false));
      s.pi = detail::ingest_bivector_table<RatFunc>(table, s.chart, zero, s.mode, "poisson");
    } else {
      Poly zero(s.chart, s.mode == ExprMode::laurent);
      s.pi = detail::ingest_bivector_table<Poly>(table, s.chart, zero, s.mode, "poisson");
    }
    doc.poisson = std::move(s);
  }

  if (j.contains("three_form")) {
    if (!doc.poisson) throw IngestError("three_form: requires a poisson section (its chart)");
    const auto& s = *doc.poisson;
    if (s.mode == ExprMode::ratfunc) {
      RatFunc zero(Poly(s.chart, false));
      doc.three_form = detail::ingest_field_terms<RatFunc>(j.at("three_form"), s.chart,
                                                           Variance::form, 3, zero, s.mode,
                                                           "three_form");
    } else {
      Poly zero(s.chart, s.mode == ExprMode::laurent);
      doc.three_form = detail::ingest_field_terms<Poly>(j.at("three_form"), s.chart,
                                                        Variance::form, 3, zero, s.mode,
                                                        "three_form");
    }
  }

  if (j.contains("tensor_n")) {
    if (!doc.poisson) throw IngestError("tensor_n: requires a poisson section (its chart)");
    const auto& s = *doc.poisson;
    if (s.mode == ExprMode::ratfunc) {
      RatFunc zero(Poly(s.chart, false));
      doc.tensor_n =
          detail::ingest_tensor<RatFunc>(j.at("tensor_n"), s.chart, zero, s.mode, "tensor_n");
    } else {
      Poly zero(s.chart, s.mode == ExprMode::laurent);
      doc.tensor_n =
          detail::ingest_tensor<Poly>(j.at("tensor_n"), s.chart, zero, s.mode, "tensor_n");
    }
  }

  if (j.contains("dynamical")) {
    if (!doc.lie) throw IngestError("dynamical: requires a lie_algebra section");
    const auto& d = j.at("dynamical");
    if (!d.contains("cartan") || !d.contains("r_of_lambda"))
      throw IngestError("dynamical: expected 'cartan' and 'r_of_lambda'");
    std::vector<size_t> cartan;
    for (const auto& name : d.at("cartan"))
      cartan.push_back(
          detail::resolve_name(doc.lie->basis_names, name.get<std::string>(), "dynamical"));
    std::vector<std::string> lambdas;
    if (d.contains("lambda"))
      lambdas = d.at("lambda").get<std::vector<std::string>>();
    else
      for (size_t k = 0; k < cartan.size(); ++k) lambdas.push_back("l" + std::to_string(k + 1));
    Multivector<RatFunc> r(doc.lie->dim, 2);
    for (const auto& [key, value] : d.at("r_of_lambda").items()) {
      auto [t, sign] =
          detail::parse_wedge_word(key, doc.lie->basis_names, "dynamical.r_of_lambda");
      if (t.size() != 2)
        throw IngestError("dynamical.r_of_lambda: keys must have grade two");
      RatFunc c = parse_ratfunc(value.get<std::string>(), lambdas);
      if (sign < 0) c = -c;
      r.add_term(std::move(t), c);
    }
    doc.dynamical = DynamicalR(*doc.lie, cartan, lambdas, std::move(r));
  }

  if (j.contains("matrix_group")) doc.matrix_group = detail::ingest_matrix_group(j.at("matrix_group"));

  if (j.contains("action")) {
    if (!doc.lie) throw IngestError("action: requires a lie_algebra section");
    if (!doc.poisson) throw IngestError("action: requires a poisson section (chart and bivector)");
    const auto& a = j.at("action");
    if (!a.contains("rho")) throw IngestError("action: expected 'rho'");
    const auto& chart = doc.poisson->chart;
    ExprMode mode = doc.poisson->mode;
    std::vector<FieldVariant> rho;
    for (const auto& name : doc.lie->basis_names) {
      if (!a.at("rho").contains(name))
        throw IngestError("action.rho: missing vector field for basis element '" + name + "'");
      const auto& entry = a.at("rho").at(name);
      auto build = [&](auto zero) -> FieldVariant {
        using R = decltype(zero);
        PolyField<R> f(chart, Variance::multivector, 1, zero);
        for (const auto& [coord, expr] : entry.items()) {
          size_t c = detail::resolve_name(chart, coord, "action.rho." + name);
          f.add_term({static_cast<int>(c)},
                     std::get<R>(parse_expression(expr.template get<std::string>(), chart, mode)));
        }
        return f;
      };
      if (mode == ExprMode::ratfunc)
        rho.push_back(build(RatFunc(Poly(chart, false))));
      else
        rho.push_back(build(Poly(chart, mode == ExprMode::laurent)));
    }
    doc.action_rho = std::move(rho);
  }

  return doc;
}

inline Document ingest_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IngestError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return ingest(j);
  } catch (const ParseError& e) {
    throw IngestError(std::string("expression error: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw IngestError(std::string("schema error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IngestError(std::string("schema error: ") + e.what());
  } catch (const std::domain_error& e) {
    throw IngestError(std::string("value error: ") + e.what());
  }
}

}  // namespace pgcheck
