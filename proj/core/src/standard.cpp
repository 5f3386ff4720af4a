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

#include "procmat/standard.hpp"

#include <cmath>

namespace procmat::standard {

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0,
       1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0),
       Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0,
       0.0, -1.0;
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s,
       s, -s;
  return m;
}

ComplexVector basis_ket(int d, int i) {
  if (i < 0 || i >= d) throw DimensionError("basis_ket: index out of range");
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

ComplexMatrix projector(const ComplexVector& ket) { return ket * ket.adjoint(); }

ComplexMatrix basis_projector(int d, int i) { return projector(basis_ket(d, i)); }

ComplexMatrix singlet() {
  ComplexVector v = ComplexVector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return projector(v);
}

ComplexMatrix phi_plus_state() { return phi_plus_unnormalized(2) / 2.0; }

ComplexMatrix phi_plus_unnormalized(int d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int j = 0; j < d; ++j) v(j * d + j) = 1.0;
  return projector(v);
}

std::optional<ComplexMatrix> named_state(std::string_view name) {
  const double s = 1.0 / std::sqrt(2.0);
  if (name == "zero") return basis_projector(2, 0);
  if (name == "one") return basis_projector(2, 1);
  if (name == "plus") {
    ComplexVector v(2);
    v << s, s;
    return projector(v);
  }
  if (name == "minus") {
    ComplexVector v(2);
    v << s, -s;
    return projector(v);
  }
  if (name == "mixed") return ComplexMatrix(identity(2) / 2.0);
  if (name == "singlet") return singlet();
  if (name == "phi-plus") return phi_plus_state();
  if (name == "mixed2") return ComplexMatrix(identity(4) / 4.0);
  return std::nullopt;
}

std::vector<std::string_view> state_names() {
  return {"zero", "one", "plus", "minus", "mixed", "singlet", "phi-plus", "mixed2"};
}

std::optional<ComplexMatrix> named_unitary(std::string_view name) {
  if (name == "identity") return identity(2);
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "h") return hadamard();
  return std::nullopt;
}

std::vector<std::string_view> unitary_names() { return {"identity", "x", "y", "z", "h"}; }

}  // namespace procmat::standard
