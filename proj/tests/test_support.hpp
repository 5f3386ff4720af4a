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

// Reference implementations used as oracles. They are written with plain
// index loops and share no code with the library.

#pragma once

#include "procmat/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace procmat::testing {

inline std::vector<int> digits_of(int index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (int f = static_cast<int>(dims.size()) - 1; f >= 0; --f) {
    out[f] = index % dims[f];
    index /= dims[f];
  }
  return out;
}

inline int index_of(const std::vector<int>& digits, const std::vector<int>& dims) {
  int index = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) index = index * dims[f] + digits[f];
  return index;
}

inline ComplexMatrix oracle_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      out(r, c) = a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
    }
  }
  return out;
}

/// Keeps the factors listed in `keep` (increasing), sums the rest.
inline ComplexMatrix oracle_partial_trace(const ComplexMatrix& m, const std::vector<int>& dims,
                                          const std::vector<int>& keep) {
  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims[k]);
  int kept_total = 1;
  for (int d : kept_dims) kept_total *= d;
  ComplexMatrix out = ComplexMatrix::Zero(kept_total, kept_total);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto rd = digits_of(static_cast<int>(r), dims);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto cd = digits_of(static_cast<int>(c), dims);
      bool diagonal_in_traced = true;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        const bool kept = std::find(keep.begin(), keep.end(), static_cast<int>(f)) != keep.end();
        if (!kept && rd[f] != cd[f]) diagonal_in_traced = false;
      }
      if (!diagonal_in_traced) continue;
      std::vector<int> rk, ck;
      for (int k : keep) {
        rk.push_back(rd[k]);
        ck.push_back(cd[k]);
      }
      out(index_of(rk, kept_dims), index_of(ck, kept_dims)) += m(r, c);
    }
  }
  return out;
}

/// Tr[W (M_A (x) M_B)] summed entry by entry.
inline Complex oracle_trace_product(const ComplexMatrix& w, const ComplexMatrix& ma,
                                    const ComplexMatrix& mb) {
  const ComplexMatrix m = oracle_kron(ma, mb);
  Complex total = 0.0;
  for (Eigen::Index r = 0; r < w.rows(); ++r) {
    for (Eigen::Index c = 0; c < w.cols(); ++c) total += w(r, c) * m(c, r);
  }
  return total;
}

/// Action of the Kraus map E on rho.
inline ComplexMatrix oracle_apply_kraus(const std::vector<ComplexMatrix>& kraus,
                                        const ComplexMatrix& rho) {
  ComplexMatrix out = ComplexMatrix::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& e : kraus) out += e * rho * e.adjoint();
  return out;
}

inline std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("procmat-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace procmat::testing
