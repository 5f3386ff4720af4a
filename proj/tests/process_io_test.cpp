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

#include "procmat/builtin.hpp"
#include "procmat/process_io.hpp"
#include "procmat/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace procmat {
namespace {

TEST(ProcessIo, FileRoundTripIsBitExact) {
  const auto dir = testing::fresh_dir("io-roundtrip");
  Rng rng(51);
  const ProcessMatrix random(LabSystems(2, 3, 1, 2), random_hermitian(12, rng));
  for (const ProcessMatrix& w : {builtin::ocb(), random}) {
    const auto path = dir / "w.json";
    write_process_file(path, w);
    const ProcessMatrix back = read_process_file(path);
    EXPECT_EQ(back.systems(), w.systems());
    EXPECT_TRUE((back.matrix().array() == w.matrix().array()).all());
  }
}

TEST(ProcessIo, ParsesMinimalDocument) {
  const auto w = parse_process_json(
      R"({"dims": {"A1": 1, "A2": 1, "B1": 2, "B2": 1},
          "matrix": [[[0.5, 0], [0, -0.25]], [[0, 0.25], [0.5, 0]]]})");
  EXPECT_EQ(w.systems(), LabSystems(1, 1, 2, 1));
  EXPECT_EQ(w.matrix()(0, 1), Complex(0.0, -0.25));
  EXPECT_EQ(w.matrix()(1, 0), Complex(0.0, 0.25));
}

TEST(ProcessIo, RejectsMalformedDocuments) {
  const char* cases[] = {
      "not json",
      "[]",
      R"({"matrix": []})",
      R"({"dims": {"A1": 1, "A2": 1, "B1": 1}, "matrix": [[[1, 0]]]})",
      R"({"dims": {"A1": 0, "A2": 1, "B1": 1, "B2": 1}, "matrix": []})",
      R"({"dims": {"A1": 1.5, "A2": 1, "B1": 1, "B2": 1}, "matrix": [[[1, 0]]]})",
      R"({"dims": {"A1": 1, "A2": 1, "B1": 1, "B2": 1}})",
      R"({"dims": {"A1": 1, "A2": 1, "B1": 2, "B2": 1}, "matrix": [[[1, 0], [0, 0]]]})",
      R"({"dims": {"A1": 1, "A2": 1, "B1": 1, "B2": 1}, "matrix": [[[1]]]})",
      R"({"dims": {"A1": 1, "A2": 1, "B1": 1, "B2": 1}, "matrix": [[["1", 0]]]})",
      // Not Hermitian.
      R"({"dims": {"A1": 1, "A2": 1, "B1": 2, "B2": 1},
          "matrix": [[[1, 0], [1, 0]], [[0, 0], [1, 0]]]})",
  };
  for (const char* text : cases) {
    EXPECT_THROW(parse_process_json(text), FormatError) << text;
  }
}

TEST(ProcessIo, MissingFileIsFormatError) {
  EXPECT_THROW(read_process_file("/nonexistent/procmat/w.json"), FormatError);
}

TEST(ProcessIo, SerializedFormHasDimsAndMatrix) {
  const std::string text = to_process_json(builtin::state(identity(2) / 2.0, 2, 1));
  EXPECT_NE(text.find("\"dims\""), std::string::npos);
  EXPECT_NE(text.find("\"matrix\""), std::string::npos);
  const ProcessMatrix back = parse_process_json(text);
  EXPECT_EQ(back.systems(), LabSystems(2, 1, 1, 1));
}

}  // namespace
}  // namespace procmat
