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

#include "procmat/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace procmat {

namespace {

std::vector<int> strides_of(std::span<const int> dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k) {
    strides[k] = strides[k + 1] * dims[k + 1];
  }
  return strides;
}

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

void check_dims(const ComplexMatrix& m, std::span<const int> dims, const char* what) {
  for (int d : dims) {
    if (d < 1) throw DimensionError(std::string(what) + ": factor dimensions must be positive");
  }
  if (m.rows() != m.cols() || m.rows() != product(dims)) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols()
       << " but factor dimensions multiply to " << product(dims);
    throw DimensionError(os.str());
  }
}

// Offsets into the full composite index contributed by every multi-index of
// the listed factors, enumerated row-major over those factors.
std::vector<int> offsets_for(std::span<const int> dims, std::span<const int> strides,
                             const std::vector<int>& factors) {
  std::vector<int> offsets{0};
  for (int f : factors) {
    std::vector<int> next;
    next.reserve(offsets.size() * dims[f]);
    for (int base : offsets) {
      for (int i = 0; i < dims[f]; ++i) next.push_back(base + i * strides[f]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

LabSystems::LabSystems(int d_a1, int d_a2, int d_b1, int d_b2)
    : a1(d_a1), a2(d_a2), b1(d_b1), b2(d_b2) {
  if (a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1) {
    throw DimensionError("LabSystems: all dimensions must be positive");
  }
}

std::string LabSystems::to_string() const {
  std::ostringstream os;
  os << "A1=" << a1 << " A2=" << a2 << " B1=" << b1 << " B2=" << b2;
  return os.str();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  check_dims(m, dims, "partial_trace");
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  std::vector<int> keep_list;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    int f = keep[k];
    if (f < 0 || f >= n) throw DimensionError("partial_trace: factor index out of range");
    if (k > 0 && keep[k - 1] >= f) {
      throw DimensionError("partial_trace: keep indices must be strictly increasing");
    }
    kept[f] = true;
    keep_list.push_back(f);
  }
  std::vector<int> traced_list;
  for (int f = 0; f < n; ++f) {
    if (!kept[f]) traced_list.push_back(f);
  }

  const auto strides = strides_of(dims);
  const auto kept_offsets = offsets_for(dims, strides, keep_list);
  const auto traced_offsets = offsets_for(dims, strides, traced_list);

  const auto dk = static_cast<Eigen::Index>(kept_offsets.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex acc = 0.0;
      for (int t : traced_offsets) acc += m(kept_offsets[r] + t, kept_offsets[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::initializer_list<int> dims,
                            std::initializer_list<int> keep) {
  return partial_trace(m, std::span<const int>(dims.begin(), dims.size()),
                       std::span<const int>(keep.begin(), keep.size()));
}

ComplexMatrix permute_factors(const ComplexMatrix& m, std::span<const int> dims,
                              std::span<const int> order) {
  check_dims(m, dims, "permute_factors");
  if (order.size() != dims.size()) {
    throw DimensionError("permute_factors: order must list every factor once");
  }
  std::vector<int> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k) {
    if (sorted[k] != k) throw DimensionError("permute_factors: order is not a permutation");
  }

  const auto old_strides = strides_of(dims);
  std::vector<int> reordered_old_strides;
  std::vector<int> new_dims;
  for (int f : order) {
    new_dims.push_back(dims[f]);
    reordered_old_strides.push_back(old_strides[f]);
  }
  // Enumerating the new factors row-major and summing the old strides maps
  // every new composite index to its old one.
  std::vector<int> all(order.size());
  std::iota(all.begin(), all.end(), 0);
  const auto source = offsets_for(new_dims, reordered_old_strides, all);

  const auto dim = static_cast<Eigen::Index>(source.size());
  ComplexMatrix out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) out(r, c) = m(source[r], source[c]);
  }
  return out;
}

ComplexMatrix permute_factors(const ComplexMatrix& m, std::initializer_list<int> dims,
                              std::initializer_list<int> order) {
  return permute_factors(m, std::span<const int>(dims.begin(), dims.size()),
                         std::span<const int>(order.begin(), order.size()));
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return hermiticity_residual(m) <= tolerance;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  if (!is_hermitian(m)) {
    throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian");
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  const auto ev = hermitian_eigenvalues(m);
  return ev.empty() ? 0.0 : ev.front();
}

bool is_positive_semidefinite(std::span<const double> ev, double tolerance) {
  if (ev.empty()) return true;
  return ev.front() >= -tolerance * std::max(1.0, ev.back());
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_difference: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw DimensionError(std::string(what) + ": matrix is not square");
}

}  // namespace procmat
