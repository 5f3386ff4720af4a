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

// Common qubit operators and named states.

#pragma once

#include "procmat/tensor.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace procmat::standard {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();

ComplexVector basis_ket(int d, int i);
ComplexMatrix projector(const ComplexVector& ket);
/// |i><i| in dimension d.
ComplexMatrix basis_projector(int d, int i);

/// (|01> - |10>) / sqrt(2) as a density matrix.
ComplexMatrix singlet();
/// Normalized (|00> + |11>) / sqrt(2) as a density matrix.
ComplexMatrix phi_plus_state();
/// |phi+><phi+| for the unnormalized |phi+> = sum_j |jj> on C^d (x) C^d.
ComplexMatrix phi_plus_unnormalized(int d);

/// Names accepted: zero, one, plus, minus, mixed (qubit);
/// singlet, phi-plus, mixed2 (two qubits).
std::optional<ComplexMatrix> named_state(std::string_view name);
std::vector<std::string_view> state_names();

/// Names accepted: identity, x, y, z, h.
std::optional<ComplexMatrix> named_unitary(std::string_view name);
std::vector<std::string_view> unitary_names();

}  // namespace procmat::standard
