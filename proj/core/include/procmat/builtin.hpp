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

// Constructors for standard process matrices.

#pragma once

#include "procmat/cj_maps.hpp"
#include "procmat/process.hpp"

namespace procmat::builtin {

/// Shared bipartite state: rho^{A1B1} (x) I^{A2B2}. `rho` lives on A1 (x) B1
/// with dimensions d_a1 * d_b1.
ProcessMatrix state(const ComplexMatrix& rho, int d_a1, int d_b1, int d_a2 = 1, int d_b2 = 1);

/// Bob receives rho^{B1}; his output is sent through `channel` (B2 -> A1) to
/// Alice: I^{A2} (x) (C^{B2A1})^T (x) rho^{B1}.
ProcessMatrix channel_b_to_a(const CPMap& channel, const ComplexMatrix& rho_b1, int d_a2);

/// Mirror image of channel_b_to_a: Alice receives rho^{A1}, her output goes
/// through `channel` (A2 -> B1) to Bob.
ProcessMatrix channel_a_to_b(const CPMap& channel, const ComplexMatrix& rho_a1, int d_b2);

/// Quantum channel with memory from Bob to Alice: I^{A2} (x) W^{A1B1B2}.
/// `memory` is given on systems (d_a1, 1, d_b1, d_b2).
ProcessMatrix channel_with_memory(const ProcessMatrix& memory, int d_a2);

/// The two-qubit process
///   W = 1/4 [ I + (Z^{A2} Z^{B1} + Z^{A1} X^{B1} Z^{B2}) / sqrt(2) ]
/// which is valid but not a mixture of one-way processes.
ProcessMatrix ocb();

/// q W1 + (1 - q) W2.
ProcessMatrix mixture(double q, const ProcessMatrix& w1, const ProcessMatrix& w2);

/// Single-party closed-timelike-curve model (a negative example).
/// Alice's input is A1 (x) A1' and her output A2 (x) A2':
///   sigma^{A1} (x) I^{A2} (x) (U (x) I)|phi+><phi+|^{A1'A2'}(U (x) I)^dagger
/// with A1 A1' grouped as the process's A1 factor and A2 A2' as A2.
ProcessMatrix ctc(const ComplexMatrix& sigma, const ComplexMatrix& unitary);

}  // namespace procmat::builtin
