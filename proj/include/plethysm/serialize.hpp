#pragma once

// JSON forms of vectors, matrices and maps. Labels use the ASCII label syntax so they re-parse.

#include <string>

#include <json.hpp>

#include "linalg.hpp"
#include "linmap.hpp"
#include "vecio.hpp"

namespace plethysm {

inline nlohmann::json vector_to_json(const Rep& rep, const Terms<Elem>& v) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [l, c] : v) {
    if (!c.is_zero()) out[format_label(rep, l, Style::Ascii)] = c.to_string();
  }
  return out;
}

inline Terms<Elem> vector_from_json(const Rep& rep, const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "vector JSON must be an object");
  Terms<Elem> out;
  for (const auto& [k, x] : j.items()) {
    if (!x.is_string()) fail(ErrorKind::ParseError, "coefficient of '" + k + "' must be a string");
    add_term(out, parse_label(rep, k), rep->field.parse_element(x.get<std::string>()));
  }
  return out;
}

inline nlohmann::json matrix_to_json(const Matrix<Elem>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols; ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

inline Matrix<Elem> matrix_from_json(const nlohmann::json& j, Field F) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "matrix JSON must be an array of rows");
  std::size_t nr = j.size(), nc = nr ? j[0].size() : 0;
  Matrix<Elem> m(nr, nc, F.zero());
  for (std::size_t i = 0; i < nr; ++i) {
    if (j[i].size() != nc) fail(ErrorKind::ParseError, "ragged matrix");
    for (std::size_t k = 0; k < nc; ++k) m(i, k) = F.parse_element(j[i][k].get<std::string>());
  }
  return m;
}

inline nlohmann::json map_to_json(const LinearMap<Elem>& f) {
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& l : f.domain()->basis()) cols[format_label(f.domain(), l, Style::Ascii)] = vector_to_json(f.codomain(), f.column(l));
  return {{"domain", f.domain()->spec()},
          {"codomain", f.codomain()->spec()},
          {"field", f.domain()->field.spec()},
          {"det_twist", f.det_twist},
          {"columns", cols}};
}

}  // namespace plethysm
