#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); basis indices in
// forms, brackets, jump sets and signatures are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lagsel/error.hpp"
#include "lagsel/lie.hpp"
#include "lagsel/matrix.hpp"
#include "lagsel/presymplectic.hpp"
#include "lagsel/probe.hpp"
#include "lagsel/schubert.hpp"
#include "lagsel/subspace.hpp"

namespace lagsel::io {

using Json = nlohmann::ordered_json;

// ---- encoding ----

inline Json encode(const Rational& r) { return to_string(r); }

inline Json encode(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

inline Json encode(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(encode(s.basis().row_vector(i)));
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

inline Json encode(const SkewForm& b) {
  Json upper = Json::array();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      if (!b.matrix()(i, j).is_zero()) {
        upper.push_back(Json::array({i + 1, j + 1, encode(b.matrix()(i, j))}));
      }
    }
  }
  return Json{{"dim", b.dim()}, {"upper", std::move(upper)}};
}

inline Json encode(const Flag& f) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < f.dim(); ++j) cols.push_back(encode(f.column(j)));
  return Json{{"dim", f.dim()}, {"columns", std::move(cols)}};
}

inline Json encode(const SignatureVector& k) { return Json(k.values()); }
inline Json encode(const JumpSet& e) { return Json(e.indices); }

inline Json encode(const FiltrationTrace& t) {
  Json chain = Json::array();
  for (const auto& s : t.chain) chain.push_back(encode(s));
  return Json{{"d", t.d()}, {"i", t.i_seq}, {"j", t.j_seq}, {"chain", std::move(chain)}};
}

inline Json encode(const LemmaReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return Json{{"passed", r.all_passed()}, {"checks", std::move(checks)}};
}

inline Json encode(const LieAlgebra& lie) {
  Json brackets = Json::array();
  for (const auto& br : lie.brackets()) {
    brackets.push_back(Json::array({br.i + 1, br.j + 1, encode(br.value)}));
  }
  return Json{{"dim", lie.dim()}, {"labels", lie.labels()}, {"brackets", std::move(brackets)}};
}

inline Json encode(const PathProbeReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"t", encode(s.t)},
                           {"gap", s.gap},
                           {"stratum", encode(s.stratum)},
                           {"cell", encode(s.cell)},
                           {"selection", encode(s.selection)}});
  }
  return Json{{"t_star", encode(r.t_star)},
              {"reference", Json{{"selection", encode(r.reference)},
                                 {"stratum", encode(r.reference_stratum)},
                                 {"cell", encode(r.reference_cell)}}},
              {"samples", std::move(samples)},
              {"verdict", to_string(r.verdict)}};
}

// ---- decoding ----

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw InvalidInput("malformed JSON: " + what); }

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::size_t index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  detail::fail("rational must be a string \"p/q\" or an integer");
}

inline Vector decode_vector(const Json& j, std::optional<std::size_t> length = std::nullopt) {
  if (!j.is_array()) detail::fail("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(decode_rational(x));
  if (length && v.size() != *length) throw DimensionMismatch("vector", *length, v.size());
  return v;
}

inline Subspace decode_subspace(const Json& j) {
  const std::size_t m = detail::index(detail::field(j, "ambient_dim"), "ambient_dim");
  const Json& basis = detail::field(j, "basis");
  if (!basis.is_array()) detail::fail("basis must be an array");
  std::vector<Vector> rows;
  for (const auto& r : basis) rows.push_back(decode_vector(r, m));
  return Subspace::span(m, rows);
}

inline SkewForm decode_form(const Json& j) {
  const std::size_t m = detail::index(detail::field(j, "dim"), "dim");
  if (j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != m) detail::fail("matrix must have dim rows");
    std::vector<Vector> vs;
    for (const auto& r : rows) vs.push_back(decode_vector(r, m));
    return SkewForm(Matrix::from_rows(vs, m));
  }
  const Json& upper = detail::field(j, "upper");
  if (!upper.is_array()) detail::fail("upper must be an array");
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> entries;
  for (const auto& e : upper) {
    if (!e.is_array() || e.size() != 3) detail::fail("upper entries are [i, j, value]");
    const std::size_t i = detail::index(e[0], "i");
    const std::size_t k = detail::index(e[1], "j");
    if (i == 0 || k == 0) detail::fail("upper indices are 1-based");
    entries.emplace_back(i - 1, k - 1, decode_rational(e[2]));
  }
  return SkewForm::from_upper(m, entries);
}

inline Flag decode_flag(const Json& j) {
  const std::size_t m = detail::index(detail::field(j, "dim"), "dim");
  const Json& cols = detail::field(j, "columns");
  if (!cols.is_array() || cols.size() != m) detail::fail("flag needs dim columns");
  std::vector<Vector> vs;
  for (const auto& c : cols) vs.push_back(decode_vector(c, m));
  return Flag(Matrix::from_columns(vs, m));
}

inline Functional decode_functional(const Json& j) { return Functional{decode_vector(j)}; }

inline JumpSet decode_jumps(const Json& j, std::size_t m) {
  if (!j.is_array()) detail::fail("jump set must be an array");
  JumpSet e{m, {}};
  for (const auto& x : j) e.indices.push_back(detail::index(x, "jump index"));
  return e;
}

inline LieAlgebra decode_algebra(const Json& j) {
  const std::size_t m = detail::index(detail::field(j, "dim"), "dim");
  std::vector<LieAlgebra::Bracket> brackets;
  if (j.contains("brackets")) {
    for (const auto& e : j.at("brackets")) {
      if (!e.is_array() || e.size() != 3) detail::fail("brackets are [i, j, [c_1..c_m]]");
      const std::size_t i = detail::index(e[0], "i");
      const std::size_t k = detail::index(e[1], "j");
      if (i == 0 || k == 0) detail::fail("bracket indices are 1-based");
      brackets.push_back({i - 1, k - 1, decode_vector(e[2])});
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return LieAlgebra(m, brackets, std::move(labels));
}

inline Matrix decode_square_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) detail::fail("matrix must be a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(decode_vector(r, j.size()));
  return Matrix::from_rows(rows, j.size());
}

inline Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw InvalidInput(std::string("malformed JSON: ") + err.what());
  }
}

/// A Lie algebra together with the flag used by default.
struct ResolvedAlgebra {
  LieAlgebra algebra;
  Flag flag;
  std::optional<BuiltinAlgebra> builtin;
};

/// Resolves "g54", "g615", "heisenberg:n", "axb:<json matrix>", or a JSON
/// document {"dim", "brackets"} / {"builtin": name, "matrix": [...]}.
inline ResolvedAlgebra resolve_algebra(std::string_view spec);

inline ResolvedAlgebra from_builtin(BuiltinAlgebra b) {
  LieAlgebra lie = b.algebra;
  Flag flag = b.flag;
  return {std::move(lie), std::move(flag), std::move(b)};
}

inline BuiltinAlgebra builtin_by_name(std::string_view name, const Json* matrix = nullptr) {
  if (name == "g54") return make_g54();
  if (name == "g615") return make_g615();
  if (name.starts_with("heisenberg:")) {
    const std::string n(name.substr(11));
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("heisenberg:n expects a positive integer n");
    }
    return make_heisenberg(std::stoul(n));
  }
  if (name == "axb" || name.starts_with("axb:")) {
    if (name.starts_with("axb:")) {
      return make_axb(decode_square_matrix(parse(name.substr(4))));
    }
    if (matrix == nullptr) throw InvalidInput("axb requires a matrix");
    return make_axb(decode_square_matrix(*matrix));
  }
  throw InvalidInput("unknown builtin algebra '" + std::string(name) + "'");
}

inline ResolvedAlgebra resolve_algebra(std::string_view spec) {
  if (!spec.empty() && spec.front() == '{') {
    const Json j = parse(spec);
    if (j.contains("builtin")) {
      const Json* matrix = j.contains("matrix") ? &j.at("matrix") : nullptr;
      return from_builtin(builtin_by_name(j.at("builtin").get<std::string>(), matrix));
    }
    LieAlgebra lie = decode_algebra(j);
    Flag flag = j.contains("flag") ? decode_flag(j.at("flag")) : Flag::standard(lie.dim());
    return {std::move(lie), std::move(flag), std::nullopt};
  }
  return from_builtin(builtin_by_name(spec));
}

}  // namespace lagsel::io
