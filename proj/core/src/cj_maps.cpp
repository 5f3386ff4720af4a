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

#include "procmat/cj_maps.hpp"

#include <sstream>

namespace procmat {

CPMap::CPMap(int d_in, int d_out, ComplexMatrix cj)
    : d_in_(d_in), d_out_(d_out), cj_(std::move(cj)) {
  if (d_in_ < 1 || d_out_ < 1) throw DimensionError("CPMap: dimensions must be positive");
  if (cj_.rows() != d_in_ * d_out_ || cj_.cols() != d_in_ * d_out_) {
    std::ostringstream os;
    os << "CPMap: CJ matrix must be " << d_in_ * d_out_ << "x" << d_in_ * d_out_;
    throw DimensionError(os.str());
  }
  if (!is_hermitian(cj_)) throw InvalidMapError("CPMap: CJ matrix is not Hermitian");
  const auto ev = hermitian_eigenvalues(cj_);
  if (!is_positive_semidefinite(ev, kMapTolerance)) {
    throw InvalidMapError("CPMap: CJ matrix is not positive semidefinite (map is not CP)");
  }
  const ComplexMatrix slack = identity(d_in_) - output_trace(*this);
  if (!is_positive_semidefinite(hermitian_eigenvalues(slack), kMapTolerance)) {
    throw InvalidMapError("CPMap: map increases trace (Tr_out cj > I_in)");
  }
}

CPMap CPMap::mix(double p, const CPMap& other) const {
  if (other.d_in_ != d_in_ || other.d_out_ != d_out_) {
    throw DimensionError("CPMap::mix: dimension mismatch");
  }
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("CPMap::mix: p outside [0, 1]");
  return CPMap(d_in_, d_out_, p * cj_ + (1.0 - p) * other.cj_);
}

CPMap cj_from_kraus(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("cj_from_kraus: no Kraus operators");
  const auto d_out = static_cast<int>(kraus.front().rows());
  const auto d_in = static_cast<int>(kraus.front().cols());
  for (const auto& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw DimensionError("cj_from_kraus: Kraus operators differ in shape");
    }
  }
  // [sum_ij |i><j| (x) M(|i><j|)]^T = sum_ij |j><i| (x) M(|i><j|)^T
  ComplexMatrix cj = ComplexMatrix::Zero(d_in * d_out, d_in * d_out);
  for (int i = 0; i < d_in; ++i) {
    for (int j = 0; j < d_in; ++j) {
      ComplexMatrix image = ComplexMatrix::Zero(d_out, d_out);
      for (const auto& k : kraus) image += k.col(i) * k.col(j).adjoint();
      cj.block(j * d_out, i * d_out, d_out, d_out) = image.transpose();
    }
  }
  return CPMap(d_in, d_out, std::move(cj));
}

CPMap cj_from_kraus(std::initializer_list<ComplexMatrix> kraus) {
  return cj_from_kraus(std::span<const ComplexMatrix>(kraus.begin(), kraus.size()));
}

CPMap measure_and_prepare(const ComplexVector& psi, const ComplexVector& phi) {
  const ComplexMatrix k = phi * psi.adjoint();
  return cj_from_kraus({k});
}

ComplexMatrix apply_inverse_cj(const CPMap& map, const ComplexMatrix& rho) {
  if (rho.rows() != map.d_in() || rho.cols() != map.d_in()) {
    throw DimensionError("apply_inverse_cj: state dimension does not match map input");
  }
  const int dims[] = {map.d_in(), map.d_out()};
  const int keep[] = {1};
  const ComplexMatrix product = kron(rho, identity(map.d_out())) * map.cj();
  return partial_trace(product, dims, keep).transpose();
}

ComplexMatrix output_trace(const CPMap& map) {
  const int dims[] = {map.d_in(), map.d_out()};
  const int keep[] = {0};
  return partial_trace(map.cj(), dims, keep);
}

CptpReport is_cptp(const CPMap& map, double tolerance) {
  CptpReport report;
  const auto ev = hermitian_eigenvalues(map.cj());
  report.min_eigenvalue = ev.front();
  report.trace_residual = max_abs_difference(output_trace(map), identity(map.d_in()));
  report.cptp = is_positive_semidefinite(ev, tolerance) && report.trace_residual <= tolerance;
  return report;
}

Instrument::Instrument(std::vector<CPMap> maps) : maps_(std::move(maps)) {
  if (maps_.empty()) throw InvalidMapError("Instrument: needs at least one outcome");
  for (const auto& m : maps_) {
    if (m.d_in() != maps_.front().d_in() || m.d_out() != maps_.front().d_out()) {
      throw DimensionError("Instrument: outcome maps differ in dimensions");
    }
  }
  const auto report = is_cptp(total());
  if (!report.cptp) {
    std::ostringstream os;
    os << "Instrument: outcome maps do not sum to a CPTP map (trace residual "
       << report.trace_residual << ")";
    throw InvalidMapError(os.str());
  }
}

CPMap Instrument::total() const {
  ComplexMatrix sum = ComplexMatrix::Zero(maps_.front().cj().rows(), maps_.front().cj().cols());
  for (const auto& m : maps_) sum += m.cj();
  return CPMap(d_in(), d_out(), std::move(sum));
}

}  // namespace procmat
