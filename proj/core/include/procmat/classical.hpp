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

// Classical processes: process matrices diagonal in a fixed product
// ("pointer") basis, classical operations given by transition tables, and the
// split of any classical process into a mixture of two one-way processes.

#pragma once

#include "procmat/cj_maps.hpp"
#include "procmat/hs_expansion.hpp"
#include "procmat/process.hpp"
#include "procmat/random.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace procmat {

using RealVector = Eigen::VectorXd;

inline constexpr double kClassicalTolerance = 1e-9;

/// Diagonal of W in the pointer basis, indexed like LabSystems::composite_index.
class ClassicalProcess {
 public:
  /// Requires non-negative entries (to `tol`), trace d_A2 d_B2 and no
  /// forbidden term types.
  ClassicalProcess(LabSystems systems, RealVector diag, double tol = kClassicalTolerance);

  /// Requires a real diagonal matrix (off-diagonal entries and imaginary
  /// parts below `tol`).
  static ClassicalProcess from_process(const ProcessMatrix& w, double tol = kClassicalTolerance);

  [[nodiscard]] const LabSystems& systems() const { return systems_; }
  [[nodiscard]] const RealVector& diag() const { return diag_; }
  [[nodiscard]] ProcessMatrix to_process() const;

 private:
  LabSystems systems_;
  RealVector diag_;
};

/// Splits a function on the pointer grid into its term-type components:
/// result[mask] depends only on the factors in mask and averages to zero over
/// each of them. The components sum back to `f`.
std::array<RealVector, 16> type_components(const LabSystems& systems, const RealVector& f);

/// P(out, j | in) as a table indexed (in, outcome, out).
class ClassicalOperation {
 public:
  /// `p` is laid out as p[(in * outcomes + j) * d_out + out].
  ClassicalOperation(int d_in, int outcomes, int d_out, std::vector<double> p,
                     double tol = kClassicalTolerance);

  static ClassicalOperation identity(int d);
  /// Reads the input, reports it as the outcome and passes it on.
  static ClassicalOperation measurement(int d);
  static ClassicalOperation binary_symmetric(double flip);

  [[nodiscard]] int d_in() const { return d_in_; }
  [[nodiscard]] int outcomes() const { return outcomes_; }
  [[nodiscard]] int d_out() const { return d_out_; }
  [[nodiscard]] double operator()(int in, int outcome, int out) const {
    return p_[(static_cast<std::size_t>(in) * outcomes_ + outcome) * d_out_ + out];
  }

 private:
  int d_in_;
  int outcomes_;
  int d_out_;
  std::vector<double> p_;
};

/// M_j = sum P(out, j | in) |in><in| (x) |out><out|, one map per outcome.
std::vector<CPMap> classical_to_cj(const ClassicalOperation& op);
Instrument classical_instrument(const ClassicalOperation& op);

struct CausalDecomposition {
  double q = 0.0;
  /// A may signal to B; carries no B-to-A term types.
  ProcessMatrix w_b_not_before_a;
  /// B may signal to A; carries no A-to-B term types.
  ProcessMatrix w_a_not_before_b;

  double m = 0.0;  ///< min entry of sigma_1 + sigma_2
  RealVector sigma_1{}, sigma_2{};
  RealVector kappa_1{}, kappa_2{};            ///< before shifting
  RealVector kappa_1_tilde{}, kappa_2_tilde{};  ///< after shifting
  Eigen::MatrixXd m1_tilde{}, m2_tilde{};     ///< (i_A1, i_B1) minima before shifting
  int shifts = 0;
  double kappa_sum_residual = 0.0;
  double recombination_residual = 0.0;  ///< max |q W1 + (1-q) W2 - W|
};

/// Writes a valid classical process as q W1 + (1-q) W2 with W1 free of B-to-A
/// terms and W2 free of A-to-B terms. Non-signalling terms go with W1.
CausalDecomposition decompose(const ClassicalProcess& w, double tol = kClassicalTolerance);

/// Random classical process: a mixture of a one-way process in each direction
/// plus a random perturbation by allowed term types, kept only when positive.
ClassicalProcess random_classical_process(const LabSystems& systems, Rng& rng);

}  // namespace procmat
