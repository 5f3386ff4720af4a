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

// Bipartite process matrices and the generalized Born rule
//
//   P(M^A_i, M^B_j) = Tr[ W (M^{A1A2}_i (x) M^{B1B2}_j) ].
//
// A matrix W is a valid process when W >= 0 and every pair of CPTP maps is
// assigned probability one. The second condition is checked two ways:
// structurally, from the Hilbert-Schmidt term types of W (exact), and by
// probing W with randomly drawn CPTP pairs (independent cross-check).

#pragma once

#include "procmat/cj_maps.hpp"
#include "procmat/hs_expansion.hpp"
#include "procmat/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace procmat {

class InvalidProcessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ValidationMode { structural, probe, both };

const char* to_string(ValidationMode mode);
std::optional<ValidationMode> parse_validation_mode(const std::string& name);

struct ProbeOptions {
  int pairs = 25;
  std::uint64_t seed = 0x5eed;
  double tolerance = 1e-9;
};

struct ProbeResult {
  bool passed = false;
  int pairs_tested = 0;
  double worst_residual = 0.0;  ///< max |Tr[W (M_A (x) M_B)] - 1|
  int worst_pair = -1;
};

struct ValidationRecord {
  ValidationMode mode = ValidationMode::structural;
  bool valid = false;

  bool positive = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double trace = 0.0;
  double trace_residual = 0.0;  ///< |Tr W - d_A2 d_B2|

  /// Present in structural and both modes.
  std::optional<HSTermReport> report;
  std::optional<StructuralVerdict> structural;
  /// Present in probe and both modes.
  std::optional<ProbeResult> probe;
};

class ProcessMatrix {
 public:
  /// Requires a Hermitian matrix whose size matches `systems`. Does not
  /// check validity; see validate().
  ProcessMatrix(LabSystems systems, ComplexMatrix w);

  [[nodiscard]] const LabSystems& systems() const { return systems_; }
  [[nodiscard]] const ComplexMatrix& matrix() const { return w_; }

  /// Verdict from the last call to validated(), if any.
  [[nodiscard]] const std::optional<ValidationRecord>& verdict() const { return verdict_; }

  /// Copy of this process carrying its validation record.
  [[nodiscard]] ProcessMatrix validated(ValidationMode mode, const ProbeOptions& probe = {}) const;

 private:
  LabSystems systems_;
  ComplexMatrix w_;
  std::optional<ValidationRecord> verdict_;
};

ValidationRecord validate(const ProcessMatrix& w, ValidationMode mode,
                          const ProbeOptions& probe = {});

/// Runs only the random-CPTP normalization probe.
ProbeResult probe_normalization(const ProcessMatrix& w, const ProbeOptions& options);

/// Tr[W (M_A (x) M_B)] including its imaginary part.
Complex born_rule(const ProcessMatrix& w, const CPMap& alice, const CPMap& bob);

/// Real part of born_rule(). Dimensions of the maps must match the systems.
double probability(const ProcessMatrix& w, const CPMap& alice, const CPMap& bob);

struct ProbabilityTable {
  /// p[i][j] for Alice outcome i and Bob outcome j.
  std::vector<std::vector<double>> p;
  double total = 0.0;
  double min_probability = 0.0;
  double max_imaginary = 0.0;

  [[nodiscard]] double at(std::size_t i, std::size_t j) const { return p[i][j]; }
  [[nodiscard]] std::vector<double> alice_marginal() const;
  [[nodiscard]] std::vector<double> bob_marginal() const;
  /// Every entry in [-tol, 1 + tol] and the total within tol of one.
  [[nodiscard]] bool normalized(double tolerance = 1e-9) const;
};

ProbabilityTable joint_distribution(const ProcessMatrix& w, const Instrument& alice,
                                    const Instrument& bob);

enum class Party { alice, bob };

/// Tr over `party`'s factors of W (cptp (x) I): the process seen by the other
/// party when `party` applies `cptp` and ignores any outcome. The result is
/// an operator on the other party's input (x) output space.
ComplexMatrix reduce(const ProcessMatrix& w, Party party, const CPMap& cptp);

/// Single-party process for the other party (the result of reduce() wrapped
/// as a process on trivial systems for the reducing party).
ProcessMatrix reduce_to_process(const ProcessMatrix& w, Party party, const CPMap& cptp);

}  // namespace procmat
