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

// Process file format:
//
//   {
//     "dims":   {"A1": 2, "A2": 2, "B1": 2, "B2": 2},
//     "matrix": [[[re, im], ...], ...]      // D x D, row-major, A1 A2 B1 B2
//   }
//
// Numbers are written in shortest round-trip form, so a write followed by a
// read reproduces every entry bit for bit.

#pragma once

#include "procmat/process.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace procmat {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProcessMatrix parse_process_json(std::string_view text);
std::string to_process_json(const ProcessMatrix& w, int indent = -1);

ProcessMatrix read_process_file(const std::filesystem::path& path);
void write_process_file(const std::filesystem::path& path, const ProcessMatrix& w);

}  // namespace procmat
