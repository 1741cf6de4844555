// Copyright 2026 The procfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "procfid/matrix_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "procfid/errors.hpp"

namespace procfid {

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (const Complex& z : m.entries()) data.push_back({z.real(), z.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("matrix JSON: top level must be an object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw ValidationError(std::string("matrix JSON: missing \"") + key + "\"");
  }
  const auto& jr = j.at("rows");
  const auto& jc = j.at("cols");
  if (!jr.is_number_unsigned() || !jc.is_number_unsigned()) {
    throw ValidationError("matrix JSON: rows and cols must be positive integers");
  }
  const auto rows = jr.get<std::size_t>();
  const auto cols = jc.get<std::size_t>();
  if (rows == 0 || cols == 0) throw ValidationError("matrix JSON: rows and cols must be positive");

  const auto& data = j.at("data");
  if (!data.is_array()) throw ValidationError("matrix JSON: \"data\" must be an array");
  if (data.size() != rows * cols) {
    throw ValidationError("matrix JSON: data has " + std::to_string(data.size()) +
                          " entries, expected rows*cols = " + std::to_string(rows * cols));
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto& pair = data[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ValidationError("matrix JSON: entry " + std::to_string(k) +
                            " must be a [re, im] number pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw ValidationError("matrix JSON: entry " + std::to_string(k) + " is not finite");
    }
    entries.emplace_back(re, im);
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

ComplexMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matrix JSON: parse error: ") + e.what());
  }
  return matrix_from_json(j);
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write matrix file " + path.string());
  out << matrix_to_json(m).dump() << '\n';
}

}  // namespace procfid
