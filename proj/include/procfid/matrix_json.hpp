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

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "procfid/matrix.hpp"

namespace procfid {

// Schema: {"rows": int, "cols": int, "data": [[re, im], ...]} in row-major
// order. Doubles are written with round-trip precision.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws ValidationError naming the violated rule.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix parse_matrix(const std::string& text);
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace procfid
