#ifndef WEDKIT_JSON_IO_HPP
#define WEDKIT_JSON_IO_HPP

#include <wedkit/algebra.hpp>
#include <wedkit/quiver.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace wedkit::json {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p" or "p/q"; plain JSON integers are
/// accepted on input.
inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw InputError("expected a rational as \"p/q\" string or integer");
}

inline Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline std::size_t count_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw InputError(std::string("missing or invalid non-negative integer field '") + key + "'");
  return j.at(key).get<std::size_t>();
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a matrix object");
  const std::size_t r = count_from_json(j, "rows"), c = count_from_json(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array() || j.at("entries").size() != r)
    throw InputError("matrix 'entries' must list " + std::to_string(r) + " rows");
  std::vector<Vector> rows;
  for (const auto& row : j.at("entries")) {
    Vector v = vector_from_json(row);
    if (v.size() != c) throw InputError("matrix row length differs from 'cols'");
    rows.push_back(std::move(v));
  }
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rows[i][k];
  return m;
}

inline std::vector<Matrix> matrices_from_json(const Json& j) {
  const Json& list = j.is_object() && j.contains("matrices") ? j.at("matrices") : j;
  if (!list.is_array()) throw InputError("expected a list of matrices");
  std::vector<Matrix> out;
  for (const auto& m : list) out.push_back(matrix_from_json(m));
  return out;
}

/// {"dim":d,"unit":[...],"table":[[[...]...]...]}, table[i][j] = e_i e_j.
inline Json to_json(const Algebra& a) {
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a.product(i, j)));
    table.push_back(row);
  }
  return Json{{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"table", table}};
}

inline Algebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected an algebra object");
  const std::size_t d = count_from_json(j, "dim");
  if (!j.contains("unit")) throw InputError("missing field 'unit'");
  Vector unit = vector_from_json(j.at("unit"));
  if (unit.size() != d) throw InputError("'unit' length differs from 'dim'");
  if (!j.contains("table") || !j.at("table").is_array() || j.at("table").size() != d)
    throw InputError("'table' must have dim rows");
  std::vector<std::vector<Vector>> table;
  for (const auto& row : j.at("table")) {
    if (!row.is_array() || row.size() != d) throw InputError("'table' rows must have dim entries");
    std::vector<Vector> r;
    for (const auto& entry : row) {
      Vector v = vector_from_json(entry);
      if (v.size() != d) throw InputError("structure constant vectors must have length dim");
      r.push_back(std::move(v));
    }
    table.push_back(std::move(r));
  }
  return Algebra(std::move(unit), std::move(table));
}

/// {"vertices":n,"arrows":[[s,t],...]}, 0-based.
inline Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back(Json::array({s, t}));
  return Json{{"vertices", q.vertices()}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a quiver object");
  const std::size_t n = count_from_json(j, "vertices");
  if (!j.contains("arrows") || !j.at("arrows").is_array()) throw InputError("missing array field 'arrows'");
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_unsigned() || !a[1].is_number_unsigned())
      throw InputError("each arrow must be a pair [source, target]");
    arrows.emplace_back(a[0].get<std::size_t>(), a[1].get<std::size_t>());
  }
  return Quiver(n, std::move(arrows));
}

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace wedkit::json

#endif  // WEDKIT_JSON_IO_HPP
