#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "immw/characters.hpp"
#include "immw/factories.hpp"
#include "immw/matrix.hpp"
#include "immw/partition.hpp"
#include "immw/tableau.hpp"

namespace immw {

using nlohmann::json;

// Partitions and compositions travel as JSON arrays of ints, tableaux as
// arrays of rows. Rationals are "p/q" strings, Gaussian rationals
// "p/q+r/si", floats plain numbers.

inline json to_json(const Partition& p) { return json(p.parts()); }
inline json to_json(const WeakComposition& mu) { return json(mu.entries()); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("partition: expected a JSON array");
  return Partition(j.get<std::vector<int>>());
}

inline WeakComposition composition_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("composition: expected a JSON array");
  return WeakComposition(j.get<std::vector<int>>());
}

inline json to_json(const StandardTableau& t) { return json(t.rows()); }
inline json to_json(const SemistandardTableau& t) { return json(t.rows()); }

enum class ScalarMode { rational, gaussian, floating };

inline std::string to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::rational: return "rational";
    case ScalarMode::gaussian: return "gaussian";
    case ScalarMode::floating: return "float";
  }
  return "?";
}

template <class S>
json scalar_to_json(const S& v) {
  if constexpr (std::is_same_v<S, Rational> || std::is_same_v<S, GaussianRational>)
    return json(v.to_string());
  else if constexpr (std::is_same_v<S, double>)
    return json(v);
  else  // complex<double>
    return json::array({v.real(), v.imag()});
}

template <class S>
S scalar_from_json(const json& j) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw ParseError("rational entry: expected string or integer");
  } else if constexpr (std::is_same_v<S, GaussianRational>) {
    if (j.is_number_integer()) return GaussianRational(Rational(j.get<long long>()));
    if (j.is_string()) return GaussianRational::from_string(j.get<std::string>());
    throw ParseError("gaussian entry: expected string or integer");
  } else if constexpr (std::is_same_v<S, double>) {
    if (!j.is_number()) throw ParseError("float entry: expected number");
    return j.get<double>();
  } else {
    if (j.is_number()) return std::complex<double>(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
      return std::complex<double>(j[0].get<double>(), j[1].get<double>());
    throw ParseError("complex entry: expected number or [re, im]");
  }
}

template <class S>
json matrix_to_json(const DenseMatrix<S>& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", a.rows()}, {"entries", std::move(rows)}};
}

template <class S>
DenseMatrix<S> matrix_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("entries"))
    throw ParseError("matrix: expected {\"n\":..., \"entries\":[[...]]}");
  const int n = j.at("n").get<int>();
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("matrix: entries must be n rows");
  DenseMatrix<S> a(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ParseError("matrix: row " + std::to_string(i) + " must have n entries");
    for (int c = 0; c < n; ++c) a(i, c) = scalar_from_json<S>(rows[i][c]);
  }
  return a;
}

/// Strings decide exactness, an 'i' in any entry decides complexness.
inline ScalarMode detect_matrix_mode(const json& j) {
  if (!j.contains("entries")) throw ParseError("matrix: missing entries");
  bool any_string = false, any_imaginary = false;
  for (const auto& row : j.at("entries"))
    for (const auto& cell : row) {
      if (cell.is_string()) {
        any_string = true;
        if (cell.get<std::string>().find('i') != std::string::npos) any_imaginary = true;
      }
    }
  if (any_imaginary) return ScalarMode::gaussian;
  if (any_string) return ScalarMode::rational;
  return ScalarMode::floating;
}

// Factory certificates reproduce instances bit-exactly.

inline json to_json(const FactoredTN& f) {
  json lower = json::array(), upper = json::array(), diag = json::array();
  for (const auto& [i, t] : f.lower_factors()) lower.push_back({i, t.to_string()});
  for (const auto& [i, t] : f.upper_factors()) upper.push_back({i, t.to_string()});
  for (const auto& d : f.diag()) diag.push_back(d.to_string());
  return json{{"class", "tn"},
              {"n", f.n()},
              {"lower", std::move(lower)},
              {"upper", std::move(upper)},
              {"diag", std::move(diag)}};
}

inline FactoredTN tn_from_json(const json& j) {
  if (j.value("class", "") != "tn") throw ParseError("certificate: expected class \"tn\"");
  std::vector<std::pair<int, Rational>> lower, upper;
  for (const auto& item : j.at("lower"))
    lower.emplace_back(item[0].get<int>(), Rational::from_string(item[1].get<std::string>()));
  for (const auto& item : j.at("upper"))
    upper.emplace_back(item[0].get<int>(), Rational::from_string(item[1].get<std::string>()));
  std::vector<Rational> diag;
  for (const auto& d : j.at("diag")) diag.push_back(Rational::from_string(d.get<std::string>()));
  return FactoredTN(j.at("n").get<int>(), std::move(lower), std::move(upper), std::move(diag));
}

template <class S>
json to_json(const FactoredPD<S>& f) {
  json upper = json::array(), diag = json::array();
  for (int i = 0; i < f.n(); ++i) {
    json row = json::array();
    for (int c = 0; c < f.n(); ++c) row.push_back(f.unit_upper()(i, c).to_string());
    upper.push_back(std::move(row));
  }
  for (const auto& d : f.diag()) diag.push_back(d.to_string());
  return json{{"class", "pd"},
              {"mode", ScalarTraits<S>::is_complex ? "gaussian" : "rational"},
              {"n", f.n()},
              {"unit_upper", std::move(upper)},
              {"diag", std::move(diag)}};
}

template <class S>
FactoredPD<S> pd_from_json(const json& j) {
  if (j.value("class", "") != "pd") throw ParseError("certificate: expected class \"pd\"");
  const int n = j.at("n").get<int>();
  DenseMatrix<S> upper(n, n);
  const json& rows = j.at("unit_upper");
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < n; ++c) upper(i, c) = scalar_from_json<S>(rows[i][c]);
  std::vector<Rational> diag;
  for (const auto& d : j.at("diag")) diag.push_back(Rational::from_string(d.get<std::string>()));
  return FactoredPD<S>(std::move(upper), std::move(diag));
}

/// {partition → {cycle_type → χ}} with comma-joined keys like "2,1".
inline json to_json(const CharacterTable& table) {
  json out = json::object();
  for (std::size_t l = 0; l < table.partitions().size(); ++l) {
    json row = json::object();
    for (std::size_t r = 0; r < table.classes().size(); ++r)
      row[table.classes()[r].to_string()] = table.value(static_cast<int>(l), static_cast<int>(r));
    out[table.partitions()[l].to_string()] = std::move(row);
  }
  return out;
}

}  // namespace immw
