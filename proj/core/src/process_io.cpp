// Copyright 2026 The procmat Authors
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

#include "procmat/process_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace procmat {

using nlohmann::json;

namespace {

int read_dim(const json& dims, const char* key) {
  if (!dims.contains(key)) throw FormatError(std::string("process file: dims.") + key + " missing");
  const json& v = dims.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw FormatError(std::string("process file: dims.") + key + " must be a positive integer");
  }
  return v.get<int>();
}

}  // namespace

ProcessMatrix parse_process_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("process file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("process file: top level must be an object");
  if (!doc.contains("dims") || !doc.at("dims").is_object()) {
    throw FormatError("process file: missing \"dims\" object");
  }
  const json& dims = doc.at("dims");
  const LabSystems systems(read_dim(dims, "A1"), read_dim(dims, "A2"), read_dim(dims, "B1"),
                           read_dim(dims, "B2"));
  const int dim = systems.total();

  if (!doc.contains("matrix") || !doc.at("matrix").is_array()) {
    throw FormatError("process file: missing \"matrix\" array");
  }
  const json& rows = doc.at("matrix");
  if (static_cast<int>(rows.size()) != dim) {
    throw FormatError("process file: matrix must have " + std::to_string(dim) + " rows");
  }
  ComplexMatrix w(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw FormatError("process file: row " + std::to_string(r) + " must have " +
                        std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw FormatError("process file: entry (" + std::to_string(r) + "," +
                          std::to_string(c) + ") must be [re, im]");
      }
      w(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  try {
    return ProcessMatrix(systems, std::move(w));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("process file: ") + e.what());
  }
}

std::string to_process_json(const ProcessMatrix& w, int indent) {
  const auto& s = w.systems();
  json doc;
  doc["dims"] = {{"A1", s.a1}, {"A2", s.a2}, {"B1", s.b1}, {"B2", s.b2}};
  json rows = json::array();
  const auto& m = w.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(indent);
}

ProcessMatrix read_process_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_process_json(buffer.str());
}

void write_process_file(const std::filesystem::path& path, const ProcessMatrix& w) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << to_process_json(w) << '\n';
  if (!out) throw FormatError("error writing " + path.string());
}

}  // namespace procmat
