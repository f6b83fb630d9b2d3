#pragma once

#include <json.hpp>

#include "extfin/exactnum/json.hpp"
#include "extfin/linalg/matrix.hpp"

namespace extfin {

/// {"rows": n, "cols": m, "entries": [[...row...], ...]}
template <class T>
nlohmann::json matrix_to_json(const Matrix<T>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// Accepts the full object form, or a bare array of rows.
template <class T>
Matrix<T> matrix_from_json(const nlohmann::json& j) {
  const nlohmann::json* entries = &j;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool shaped = j.is_object();
  if (shaped) {
    if (!j.contains("entries") || !j.contains("rows") || !j.contains("cols")) {
      throw InputError("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
    }
    if (!j.at("rows").is_number_unsigned() || !j.at("cols").is_number_unsigned()) {
      throw InputError("matrix \"rows\"/\"cols\" must be nonnegative integers");
    }
    rows = j.at("rows").get<std::size_t>();
    cols = j.at("cols").get<std::size_t>();
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw InputError("matrix entries must be an array of rows");
  if (!shaped) {
    rows = entries->size();
    cols = rows == 0 ? 0 : entries->at(0).size();
  }
  if (entries->size() != rows) throw InputError("matrix row count does not match \"rows\"");
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = entries->at(r);
    if (!row.is_array() || row.size() != cols) throw InputError("matrix row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json<T>(row.at(c));
  }
  return m;
}

}  // namespace extfin
