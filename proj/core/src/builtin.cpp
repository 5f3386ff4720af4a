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

#include "procmat/builtin.hpp"

#include "procmat/standard.hpp"

#include <cmath>

namespace procmat::builtin {

namespace {

void require_state(const ComplexMatrix& rho, const char* what) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw InvalidProcessError(std::string(what) + ": state must be a nonempty square matrix");
  }
  if (!is_hermitian(rho)) throw InvalidProcessError(std::string(what) + ": state is not Hermitian");
  if (!is_positive_semidefinite(hermitian_eigenvalues(rho))) {
    throw InvalidProcessError(std::string(what) + ": state is not positive semidefinite");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw InvalidProcessError(std::string(what) + ": state does not have unit trace");
  }
}

void require_cptp(const CPMap& channel, const char* what) {
  if (!is_cptp(channel).cptp) {
    throw InvalidProcessError(std::string(what) + ": channel is not trace preserving");
  }
}

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

ProcessMatrix state(const ComplexMatrix& rho, int d_a1, int d_b1, int d_a2, int d_b2) {
  require_state(rho, "builtin::state");
  if (rho.rows() != d_a1 * d_b1) {
    throw DimensionError("builtin::state: rho must act on A1 (x) B1");
  }
  const LabSystems systems(d_a1, d_a2, d_b1, d_b2);
  // rho^{A1B1} (x) I^{A2B2} in the order (A1, B1, A2, B2), then to canonical.
  const ComplexMatrix w = kron(rho, identity(d_a2 * d_b2));
  const int dims[] = {d_a1, d_b1, d_a2, d_b2};
  const int order[] = {0, 2, 1, 3};
  return ProcessMatrix(systems, hermitize(permute_factors(w, dims, order)));
}

ProcessMatrix channel_b_to_a(const CPMap& channel, const ComplexMatrix& rho_b1, int d_a2) {
  require_cptp(channel, "builtin::channel_b_to_a");
  require_state(rho_b1, "builtin::channel_b_to_a");
  const int d_b2 = channel.d_in();
  const int d_a1 = channel.d_out();
  const int d_b1 = static_cast<int>(rho_b1.rows());
  // Order (A2, B2, A1, B1).
  const ComplexMatrix w = kron({identity(d_a2), channel.cj().transpose(), rho_b1});
  const int dims[] = {d_a2, d_b2, d_a1, d_b1};
  const int order[] = {2, 0, 3, 1};
  return ProcessMatrix(LabSystems(d_a1, d_a2, d_b1, d_b2),
                       hermitize(permute_factors(w, dims, order)));
}

ProcessMatrix channel_a_to_b(const CPMap& channel, const ComplexMatrix& rho_a1, int d_b2) {
  require_cptp(channel, "builtin::channel_a_to_b");
  require_state(rho_a1, "builtin::channel_a_to_b");
  const int d_a2 = channel.d_in();
  const int d_b1 = channel.d_out();
  const int d_a1 = static_cast<int>(rho_a1.rows());
  // (A1, A2, B1, B2) is already canonical.
  const ComplexMatrix w = kron({rho_a1, channel.cj().transpose(), identity(d_b2)});
  return ProcessMatrix(LabSystems(d_a1, d_a2, d_b1, d_b2), hermitize(w));
}

ProcessMatrix channel_with_memory(const ProcessMatrix& memory, int d_a2) {
  const auto& m = memory.systems();
  if (m.a2 != 1) {
    throw DimensionError("builtin::channel_with_memory: memory process must have trivial A2");
  }
  if (d_a2 < 1) throw DimensionError("builtin::channel_with_memory: d_a2 must be positive");
  // Order (A2, A1, B1, B2).
  const ComplexMatrix w = kron(identity(d_a2), memory.matrix());
  const int dims[] = {d_a2, m.a1, m.b1, m.b2};
  const int order[] = {1, 0, 2, 3};
  return ProcessMatrix(LabSystems(m.a1, d_a2, m.b1, m.b2),
                       hermitize(permute_factors(w, dims, order)));
}

ProcessMatrix ocb() {
  using namespace standard;
  const ComplexMatrix i2 = identity(2);
  const ComplexMatrix zzterm = kron({i2, pauli_z(), pauli_z(), i2});
  const ComplexMatrix zxzterm = kron({pauli_z(), i2, pauli_x(), pauli_z()});
  const ComplexMatrix w = 0.25 * (identity(16) + (zzterm + zxzterm) / std::sqrt(2.0));
  return ProcessMatrix(LabSystems(2, 2, 2, 2), w);
}

ProcessMatrix mixture(double q, const ProcessMatrix& w1, const ProcessMatrix& w2) {
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidProcessError("builtin::mixture: q outside [0, 1]");
  if (!(w1.systems() == w2.systems())) {
    throw DimensionError("builtin::mixture: processes live on different systems");
  }
  return ProcessMatrix(w1.systems(), q * w1.matrix() + (1.0 - q) * w2.matrix());
}

ProcessMatrix ctc(const ComplexMatrix& sigma, const ComplexMatrix& unitary) {
  require_state(sigma, "builtin::ctc");
  if (unitary.rows() != unitary.cols() || unitary.rows() == 0) {
    throw InvalidProcessError("builtin::ctc: U must be square");
  }
  const int du = static_cast<int>(unitary.rows());
  if (max_abs_difference(unitary.adjoint() * unitary, identity(du)) > 1e-9) {
    throw InvalidProcessError("builtin::ctc: U is not unitary");
  }
  const int ds = static_cast<int>(sigma.rows());
  const ComplexMatrix u_i = kron(unitary, identity(du));
  const ComplexMatrix loop = u_i * standard::phi_plus_unnormalized(du) * u_i.adjoint();
  // Order (A1, A2, A1', A2') -> (A1, A1', A2, A2').
  const ComplexMatrix w = kron({sigma, identity(ds), loop});
  const int dims[] = {ds, ds, du, du};
  const int order[] = {0, 2, 1, 3};
  return ProcessMatrix(LabSystems(ds * du, ds * du, 1, 1),
                       hermitize(permute_factors(w, dims, order)));
}

}  // namespace procmat::builtin
