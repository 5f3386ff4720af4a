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

#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace procmat {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local dimensions of a bipartite process. Tensor factors are always laid
/// out in the order A1, A2, B1, B2 with row-major composite indexing:
///
///   index(i_A1, i_A2, i_B1, i_B2) = ((i_A1*d_A2 + i_A2)*d_B1 + i_B1)*d_B2 + i_B2
struct LabSystems {
  int a1 = 1;
  int a2 = 1;
  int b1 = 1;
  int b2 = 1;

  LabSystems() = default;
  LabSystems(int d_a1, int d_a2, int d_b1, int d_b2);

  [[nodiscard]] int total() const { return a1 * a2 * b1 * b2; }
  [[nodiscard]] int alice() const { return a1 * a2; }
  [[nodiscard]] int bob() const { return b1 * b2; }
  [[nodiscard]] std::array<int, 4> dims() const { return {a1, a2, b1, b2}; }
  /// Tr W required of a process matrix on these systems.
  [[nodiscard]] int output_dimension() const { return a2 * b2; }
  [[nodiscard]] int composite_index(int i_a1, int i_a2, int i_b1, int i_b2) const {
    return ((i_a1 * a2 + i_a2) * b1 + i_b1) * b2 + i_b2;
  }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const LabSystems&, const LabSystems&) = default;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

ComplexMatrix identity(int d);

/// Traces out every factor not listed in `keep`. Kept factors stay in their
/// original relative order. `keep` must be strictly increasing.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<int> dims,
                            std::initializer_list<int> keep);

/// Reorders tensor factors: factor k of the result is factor `order[k]` of `m`.
ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const int> dims,
                              std::span<const int> order);
ComplexMatrix permute_factors(const ComplexMatrix& m, std::initializer_list<int> dims,
                              std::initializer_list<int> order);

/// Full transpose (not the conjugate transpose).
inline ComplexMatrix transpose(const ComplexMatrix& m) { return m.transpose(); }

/// max |m - m^dagger| relative to max(1, max |m_ij|).
double hermiticity_residual(const ComplexMatrix& m);

inline constexpr double kHermitianTolerance = 1e-9;

bool is_hermitian(const ComplexMatrix& m, double tolerance = kHermitianTolerance);

/// Ascending real eigenvalues. Throws NotHermitianError if `m` is not
/// Hermitian within kHermitianTolerance.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Smallest eigenvalue; same precondition as hermitian_eigenvalues.
double min_eigenvalue(const ComplexMatrix& m);

/// PSD test shared by maps and processes: lambda_min >= -tol * max(1, lambda_max).
bool is_positive_semidefinite(std::span<const double> ascending_eigenvalues,
                              double tolerance = kHermitianTolerance);

/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

void require_square(const ComplexMatrix& m, const char* what);

}  // namespace procmat
