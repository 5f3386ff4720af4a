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

// Completely positive maps in Choi-Jamiolkowski form.
//
// The CJ matrix of M: L(H_in) -> L(H_out) is
//
//   M^{in,out} = [ (I (x) M)(|phi+><phi+|) ]^T,   |phi+> = sum_j |jj>,
//
// i.e. the usual Choi matrix followed by a full transpose. Factor order is
// input (x) output. The map acts on states through
//
//   M(rho) = ( Tr_in[ (rho (x) I_out) M^{in,out} ] )^T.
//
// With this convention a CPTP map satisfies M >= 0 and Tr_out M = I_in, and a
// map with d_out == 1 is exactly a POVM element on the input.

#pragma once

#include "procmat/tensor.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace procmat {

class InvalidMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kMapTolerance = 1e-9;

/// A CP trace-nonincreasing map stored as its CJ matrix.
class CPMap {
 public:
  /// Validates shape, Hermiticity, positivity and Tr_out(cj) <= I_in.
  CPMap(int d_in, int d_out, ComplexMatrix cj);

  [[nodiscard]] int d_in() const { return d_in_; }
  [[nodiscard]] int d_out() const { return d_out_; }
  [[nodiscard]] const ComplexMatrix& cj() const { return cj_; }

  /// p * this + (1 - p) * other.
  [[nodiscard]] CPMap mix(double p, const CPMap& other) const;

 private:
  int d_in_;
  int d_out_;
  ComplexMatrix cj_;
};

/// Kraus operators are d_out x d_in and must share a shape.
CPMap cj_from_kraus(std::span<const ComplexMatrix> kraus);
CPMap cj_from_kraus(std::initializer_list<ComplexMatrix> kraus);

/// Detect |psi>, then prepare |phi>.
CPMap measure_and_prepare(const ComplexVector& psi, const ComplexVector& phi);

ComplexMatrix apply_inverse_cj(const CPMap& map, const ComplexMatrix& rho);

/// Tr_out of the CJ matrix, an operator on the input space.
ComplexMatrix output_trace(const CPMap& map);

struct CptpReport {
  bool cptp = false;
  double min_eigenvalue = 0.0;
  double trace_residual = 0.0;  ///< max |Tr_out(cj) - I_in|
};

CptpReport is_cptp(const CPMap& map, double tolerance = kMapTolerance);

/// A quantum instrument: CP maps (one per outcome) summing to a CPTP map.
class Instrument {
 public:
  explicit Instrument(std::vector<CPMap> maps);

  [[nodiscard]] const std::vector<CPMap>& maps() const { return maps_; }
  [[nodiscard]] std::size_t outcomes() const { return maps_.size(); }
  [[nodiscard]] const CPMap& operator[](std::size_t i) const { return maps_[i]; }
  [[nodiscard]] int d_in() const { return maps_.front().d_in(); }
  [[nodiscard]] int d_out() const { return maps_.front().d_out(); }

  /// The CPTP map obtained by ignoring the outcome.
  [[nodiscard]] CPMap total() const;

 private:
  std::vector<CPMap> maps_;
};

}  // namespace procmat
