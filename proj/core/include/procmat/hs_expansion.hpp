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

// Hilbert-Schmidt expansion of bipartite operators and the term-type rules
// that decide whether a matrix normalizes every pair of CPTP maps.
//
// Each factor X carries a Hermitian basis {s_0 = I, s_1, ..., s_{d^2-1}} with
// Tr(s_mu s_nu) = d delta_{mu nu}. An operator on A1 A2 B1 B2 expands as
//
//   W = sum w_{mu nu la ga} s_mu (x) s_nu (x) s_la (x) s_ga,
//   w_{mu nu la ga} = Tr[W (s_mu (x) s_nu (x) s_la (x) s_ga)] / D.
//
// A term's type records which factors carry a non-identity element. A
// process matrix may contain only the types
//
//   1, A1, B1, A1B1              (no signalling)
//   A2B1, A1A2B1                 (Alice signals to Bob)
//   A1B2, A1B1B2                 (Bob signals to Alice)
//
// with w_0000 = 1 / (d_A1 d_B1). Every other type is forbidden.

#pragma once

#include "procmat/tensor.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace procmat {

class HSBasis {
 public:
  /// For d == 2 the basis is {I, X, Y, Z}. For larger d it is the generalized
  /// Gell-Mann set rescaled to Tr(s_i s_j) = d delta_ij, ordered as
  /// (symmetric, antisymmetric) per pair j < k followed by the diagonals.
  explicit HSBasis(int d);

  [[nodiscard]] int dimension() const { return d_; }
  [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
  [[nodiscard]] const ComplexMatrix& operator[](int mu) const { return elements_[mu]; }
  [[nodiscard]] const std::vector<ComplexMatrix>& elements() const { return elements_; }

 private:
  int d_;
  std::vector<ComplexMatrix> elements_;
};

inline HSBasis make_basis(int d) { return HSBasis(d); }

enum class Factor : std::uint8_t { a1 = 1, a2 = 2, b1 = 4, b2 = 8 };

/// Which factors are non-identity, as a 4-bit mask (A1 = 1, A2 = 2, B1 = 4, B2 = 8).
class TermType {
 public:
  constexpr TermType() = default;
  constexpr explicit TermType(std::uint8_t mask) : mask_(mask & 0xF) {}

  static TermType of(const std::array<int, 4>& index);
  /// Parses names such as "1", "A2B1", "A1A2B1B2".
  static TermType parse(const std::string& name);

  [[nodiscard]] constexpr std::uint8_t mask() const { return mask_; }
  [[nodiscard]] constexpr bool has(Factor f) const {
    return (mask_ & static_cast<std::uint8_t>(f)) != 0;
  }
  [[nodiscard]] std::string name() const;

  friend constexpr bool operator==(TermType, TermType) = default;
  friend constexpr auto operator<=>(TermType, TermType) = default;

 private:
  std::uint8_t mask_ = 0;
};

enum class TermClass {
  identity,
  non_signalling,
  a_to_b,     ///< A2B1, A1A2B1
  b_to_a,     ///< A1B2, A1B1B2
  forbidden,
};

TermClass classify_type(TermType t);
const char* to_string(TermClass c);

/// All 16 types in mask order.
std::array<TermType, 16> all_term_types();

struct HSTerm {
  std::array<int, 4> index{};
  double coefficient = 0.0;

  [[nodiscard]] TermType type() const { return TermType::of(index); }
};

inline constexpr double kCoefficientCutoff = 1e-10;

class HSTermReport {
 public:
  HSTermReport(LabSystems systems, std::vector<double> coefficients);

  [[nodiscard]] const LabSystems& systems() const { return systems_; }
  /// Row-major over (mu, nu, la, ga) with extents d_X^2.
  [[nodiscard]] const std::vector<double>& coefficients() const { return coefficients_; }
  [[nodiscard]] double coefficient(int mu, int nu, int la, int ga) const;
  [[nodiscard]] double coefficient(const std::array<int, 4>& index) const {
    return coefficient(index[0], index[1], index[2], index[3]);
  }

  /// Terms with |w| >= cutoff, in index order.
  [[nodiscard]] std::vector<HSTerm> terms(double cutoff = kCoefficientCutoff) const;
  /// Sum of squared coefficients of the given type.
  [[nodiscard]] double weight(TermType t) const;
  /// Types with at least one coefficient at or above the cutoff.
  [[nodiscard]] std::vector<TermType> present_types(double cutoff = kCoefficientCutoff) const;

 private:
  LabSystems systems_;
  std::array<int, 4> extents_{};
  std::vector<double> coefficients_;
};

/// Throws DimensionError or NotHermitianError on bad input.
HSTermReport expand(const ComplexMatrix& w, const LabSystems& systems);

ComplexMatrix reconstruct(const HSTermReport& report);

struct ForbiddenTerm {
  TermType type;
  double weight = 0.0;
};

struct StructuralVerdict {
  bool accept = false;
  double identity_coefficient = 0.0;   ///< w_0000
  double normalization_residual = 0.0; ///< |w_0000 - 1/(d_A1 d_B1)|
  std::vector<ForbiddenTerm> forbidden;
  bool signals_a_to_b = false;
  bool signals_b_to_a = false;

  /// Both signalling directions present: the matrix may not be a mixture of
  /// one-way processes.
  [[nodiscard]] bool bidirectional() const { return signals_a_to_b && signals_b_to_a; }
};

StructuralVerdict classify_validity(const HSTermReport& report,
                                    double cutoff = kCoefficientCutoff);

}  // namespace procmat
