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

#include "procmat/random.hpp"

#include <Eigen/QR>

#include <cmath>

namespace procmat {

Rng split_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix haar_unitary(int d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_density(int d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_hermitian(int d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

CPMap random_cptp(int d_in, int d_out, Rng& rng) {
  return random_instrument(d_in, d_out, 1, rng).total();
}

Instrument random_instrument(int d_in, int d_out, int outcomes, Rng& rng) {
  if (d_in < 1 || d_out < 1 || outcomes < 1) {
    throw DimensionError("random_instrument: dimensions must be positive");
  }
  // Composite index on system (x) output (x) register:
  // (k * d_out + o) * outcomes + j.
  const int ancilla = d_out * outcomes;
  const ComplexMatrix u = haar_unitary(d_in * ancilla, rng);
  std::vector<CPMap> maps;
  maps.reserve(outcomes);
  for (int j = 0; j < outcomes; ++j) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(d_in);
    for (int k = 0; k < d_in; ++k) {
      ComplexMatrix e(d_out, d_in);
      for (int o = 0; o < d_out; ++o) {
        for (int i = 0; i < d_in; ++i) {
          // Input |i> (x) |0>_ancilla has composite index i * ancilla.
          e(o, i) = u(k * ancilla + o * outcomes + j, i * ancilla);
        }
      }
      kraus.push_back(std::move(e));
    }
    maps.push_back(cj_from_kraus(kraus));
  }
  return Instrument(std::move(maps));
}

}  // namespace procmat
