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

#include "procmat/cj_maps.hpp"
#include "procmat/tensor.hpp"

#include <cstdint>
#include <random>

namespace procmat {

using Rng = std::mt19937_64;

/// Independent stream `index` derived from `seed`; used to split one seed
/// across parallel or sequential sampling tasks.
Rng split_rng(std::uint64_t seed, std::uint64_t index);

ComplexMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix haar_unitary(int d, Rng& rng);

/// Random density matrix G G^dagger / Tr(G G^dagger).
ComplexMatrix random_density(int d, Rng& rng);

ComplexMatrix random_hermitian(int d, Rng& rng);

/// CPTP map d_in -> d_out: a Haar unitary on system (x) ancilla with the
/// ancilla (dimension d_out) prepared in |0>, after which the system is
/// traced out and the ancilla is the output.
CPMap random_cptp(int d_in, int d_out, Rng& rng);

/// Instrument built the same way with the ancilla enlarged by an outcome
/// register that is read out projectively.
Instrument random_instrument(int d_in, int d_out, int outcomes, Rng& rng);

}  // namespace procmat
