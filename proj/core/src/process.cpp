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

#include "procmat/process.hpp"

#include "procmat/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace procmat {

const char* to_string(ValidationMode mode) {
  switch (mode) {
    case ValidationMode::structural: return "structural";
    case ValidationMode::probe: return "probe";
    case ValidationMode::both: return "both";
  }
  return "?";
}

std::optional<ValidationMode> parse_validation_mode(const std::string& name) {
  if (name == "structural") return ValidationMode::structural;
  if (name == "probe") return ValidationMode::probe;
  if (name == "both") return ValidationMode::both;
  return std::nullopt;
}

ProcessMatrix::ProcessMatrix(LabSystems systems, ComplexMatrix w)
    : systems_(systems), w_(std::move(w)) {
  if (w_.rows() != systems_.total() || w_.cols() != systems_.total()) {
    std::ostringstream os;
    os << "ProcessMatrix: matrix is " << w_.rows() << "x" << w_.cols() << " but systems ("
       << systems_.to_string() << ") need dimension " << systems_.total();
    throw DimensionError(os.str());
  }
  if (!w_.allFinite()) throw InvalidProcessError("ProcessMatrix: non-finite entries");
  if (!is_hermitian(w_)) throw NotHermitianError("ProcessMatrix: matrix is not Hermitian");
}

ProcessMatrix ProcessMatrix::validated(ValidationMode mode, const ProbeOptions& probe) const {
  ProcessMatrix copy = *this;
  copy.verdict_ = validate(*this, mode, probe);
  return copy;
}

ProbeResult probe_normalization(const ProcessMatrix& w, const ProbeOptions& options) {
  const auto& s = w.systems();
  ProbeResult result;
  for (int p = 0; p < options.pairs; ++p) {
    Rng rng = split_rng(options.seed, static_cast<std::uint64_t>(p));
    const CPMap alice = random_cptp(s.a1, s.a2, rng);
    const CPMap bob = random_cptp(s.b1, s.b2, rng);
    const double residual = std::abs(born_rule(w, alice, bob) - Complex(1.0, 0.0));
    if (residual > result.worst_residual || result.worst_pair < 0) {
      result.worst_residual = residual;
      result.worst_pair = p;
    }
    ++result.pairs_tested;
  }
  result.passed = result.worst_residual <= options.tolerance;
  return result;
}

ValidationRecord validate(const ProcessMatrix& w, ValidationMode mode, const ProbeOptions& probe) {
  ValidationRecord rec;
  rec.mode = mode;
  const auto& s = w.systems();

  const auto ev = hermitian_eigenvalues(w.matrix());
  rec.min_eigenvalue = ev.front();
  rec.max_eigenvalue = ev.back();
  rec.positive = is_positive_semidefinite(ev);
  rec.trace = w.matrix().trace().real();
  rec.trace_residual = std::abs(rec.trace - s.output_dimension());
  const bool trace_ok = rec.trace_residual <= kHermitianTolerance * std::max(1, s.output_dimension());

  bool ok = rec.positive;
  if (mode == ValidationMode::structural || mode == ValidationMode::both) {
    rec.report = expand(w.matrix(), s);
    rec.structural = classify_validity(*rec.report);
    ok = ok && trace_ok && rec.structural->accept;
  }
  if (mode == ValidationMode::probe || mode == ValidationMode::both) {
    rec.probe = probe_normalization(w, probe);
    ok = ok && rec.probe->passed;
  }
  rec.valid = ok;
  return rec;
}

Complex born_rule(const ProcessMatrix& w, const CPMap& alice, const CPMap& bob) {
  const auto& s = w.systems();
  if (alice.d_in() != s.a1 || alice.d_out() != s.a2) {
    throw DimensionError("probability: Alice's map does not act A1 -> A2 of the process");
  }
  if (bob.d_in() != s.b1 || bob.d_out() != s.b2) {
    throw DimensionError("probability: Bob's map does not act B1 -> B2 of the process");
  }
  // kron(M_A, M_B) is already in canonical A1 A2 B1 B2 order because each CJ
  // matrix is stored as input (x) output.
  const ComplexMatrix joint = kron(alice.cj(), bob.cj());
  // Tr[W J] = sum_rc W_rc J_cr
  return (w.matrix().cwiseProduct(joint.transpose())).sum();
}

double probability(const ProcessMatrix& w, const CPMap& alice, const CPMap& bob) {
  return born_rule(w, alice, bob).real();
}

std::vector<double> ProbabilityTable::alice_marginal() const {
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (double v : p[i]) out[i] += v;
  }
  return out;
}

std::vector<double> ProbabilityTable::bob_marginal() const {
  std::vector<double> out(p.empty() ? 0 : p.front().size(), 0.0);
  for (const auto& row : p) {
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  }
  return out;
}

bool ProbabilityTable::normalized(double tolerance) const {
  if (std::abs(total - 1.0) > tolerance || min_probability < -tolerance) return false;
  for (const auto& row : p) {
    for (double v : row) {
      if (v > 1.0 + tolerance) return false;
    }
  }
  return true;
}

ProbabilityTable joint_distribution(const ProcessMatrix& w, const Instrument& alice,
                                    const Instrument& bob) {
  ProbabilityTable table;
  table.p.assign(alice.outcomes(), std::vector<double>(bob.outcomes(), 0.0));
  table.min_probability = 1.0;
  for (std::size_t i = 0; i < alice.outcomes(); ++i) {
    for (std::size_t j = 0; j < bob.outcomes(); ++j) {
      const Complex v = born_rule(w, alice[i], bob[j]);
      table.p[i][j] = v.real();
      table.total += v.real();
      table.min_probability = std::min(table.min_probability, v.real());
      table.max_imaginary = std::max(table.max_imaginary, std::abs(v.imag()));
    }
  }
  return table;
}

ComplexMatrix reduce(const ProcessMatrix& w, Party party, const CPMap& cptp) {
  const auto report = is_cptp(cptp);
  if (!report.cptp) {
    std::ostringstream os;
    os << "reduce: map is not CPTP (trace residual " << report.trace_residual << ")";
    throw InvalidMapError(os.str());
  }
  const auto& s = w.systems();
  const int dims[] = {s.alice(), s.bob()};
  if (party == Party::alice) {
    if (cptp.d_in() != s.a1 || cptp.d_out() != s.a2) {
      throw DimensionError("reduce: map does not act A1 -> A2");
    }
    const int keep[] = {1};
    return partial_trace(w.matrix() * kron(cptp.cj(), identity(s.bob())), dims, keep);
  }
  if (cptp.d_in() != s.b1 || cptp.d_out() != s.b2) {
    throw DimensionError("reduce: map does not act B1 -> B2");
  }
  const int keep[] = {0};
  return partial_trace(w.matrix() * kron(identity(s.alice()), cptp.cj()), dims, keep);
}

ProcessMatrix reduce_to_process(const ProcessMatrix& w, Party party, const CPMap& cptp) {
  ComplexMatrix reduced = reduce(w, party, cptp);
  reduced = 0.5 * (reduced + reduced.adjoint());
  const auto& s = w.systems();
  if (party == Party::alice) return ProcessMatrix(LabSystems(1, 1, s.b1, s.b2), reduced);
  return ProcessMatrix(LabSystems(s.a1, s.a2, 1, 1), reduced);
}

}  // namespace procmat
