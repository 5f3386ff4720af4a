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
#include "procmat/causal_game.hpp"
#include "procmat/classical.hpp"
#include "procmat/hs_expansion.hpp"
#include "procmat/standard.hpp"

#include <gtest/gtest.h>

namespace procmat {
namespace {

const LabSystems kQubits(2, 2, 2, 2);

// Diagonal of a classical one-way process from A to B: Alice's input i has
// distribution p, Bob's input k depends on (i, j) through t.
RealVector a_to_b_diag(const LabSystems& s, const std::vector<double>& p,
                       const std::vector<std::vector<double>>& t) {
  RealVector d(s.total());
  for (int i = 0; i < s.a1; ++i)
    for (int j = 0; j < s.a2; ++j)
      for (int k = 0; k < s.b1; ++k)
        for (int l = 0; l < s.b2; ++l) d[s.composite_index(i, j, k, l)] = p[i] * t[i * s.a2 + j][k];
  return d;
}

RealVector b_to_a_diag(const LabSystems& s, const std::vector<double>& p,
                       const std::vector<std::vector<double>>& t) {
  RealVector d(s.total());
  for (int i = 0; i < s.a1; ++i)
    for (int j = 0; j < s.a2; ++j)
      for (int k = 0; k < s.b1; ++k)
        for (int l = 0; l < s.b2; ++l) d[s.composite_index(i, j, k, l)] = p[k] * t[k * s.b2 + l][i];
  return d;
}

// Term types of a diagonal matrix, read off the full Hilbert-Schmidt expansion.
std::vector<std::string> hs_types(const ProcessMatrix& w) {
  std::vector<std::string> out;
  for (TermType t : expand(w.matrix(), w.systems()).present_types()) out.push_back(t.name());
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(ClassicalToCj, IdentityChannel) {
  const auto maps = classical_to_cj(ClassicalOperation::identity(3));
  ASSERT_EQ(maps.size(), 1u);
  ComplexMatrix expected = ComplexMatrix::Zero(9, 9);
  for (int l = 0; l < 3; ++l) expected(l * 3 + l, l * 3 + l) = 1.0;
  EXPECT_EQ(maps[0].cj(), expected);
}

TEST(ClassicalToCj, BitMeasurement) {
  const auto maps = classical_to_cj(ClassicalOperation::measurement(2));
  ASSERT_EQ(maps.size(), 2u);
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix expected =
        kron(standard::basis_projector(2, j), standard::basis_projector(2, j));
    EXPECT_EQ(maps[j].cj(), expected);
  }
  const Instrument inst = classical_instrument(ClassicalOperation::measurement(2));
  EXPECT_TRUE(is_cptp(inst.total()).cptp);
}

TEST(ClassicalToCj, BinarySymmetricChannel) {
  const auto maps = classical_to_cj(ClassicalOperation::binary_symmetric(0.2));
  ASSERT_EQ(maps.size(), 1u);
  const ComplexMatrix& cj = maps[0].cj();
  EXPECT_NEAR(cj(0, 0).real(), 0.8, 1e-15);
  EXPECT_NEAR(cj(1, 1).real(), 0.2, 1e-15);
  EXPECT_NEAR(cj(2, 2).real(), 0.2, 1e-15);
  EXPECT_NEAR(cj(3, 3).real(), 0.8, 1e-15);
  EXPECT_NEAR((cj - ComplexMatrix(cj.diagonal().asDiagonal())).norm(), 0.0, 1e-15);
}

TEST(ClassicalOperation, RejectsBadTables) {
  EXPECT_THROW(ClassicalOperation(2, 1, 2, {0.5, 0.5, 0.5}), DimensionError);
  EXPECT_THROW(ClassicalOperation(1, 1, 2, {0.7, 0.7}), InvalidMapError);
  EXPECT_THROW(ClassicalOperation(1, 1, 2, {1.2, -0.2}), InvalidMapError);
}

TEST(TypeComponents, SumBackAndHaveZeroMeans) {
  Rng rng(71);
  std::normal_distribution<double> normal;
  const LabSystems s(2, 3, 2, 2);
  RealVector f(s.total());
  for (int x = 0; x < s.total(); ++x) f[x] = normal(rng);
  const auto comps = type_components(s, f);
  RealVector sum = RealVector::Zero(s.total());
  for (const auto& c : comps) sum += c;
  EXPECT_LT((sum - f).cwiseAbs().maxCoeff(), 1e-13);
  // Summing any included factor out of a component gives zero.
  const auto dims = s.dims();
  for (unsigned mask = 1; mask < 16; ++mask) {
    for (int factor = 0; factor < 4; ++factor) {
      if (!(mask & (1u << factor))) continue;
      for (int x = 0; x < s.total(); ++x) {
        std::array<int, 4> idx{};
        for (int f2 = 3, v = x; f2 >= 0; --f2) {
          idx[f2] = v % dims[f2];
          v /= dims[f2];
        }
        if (idx[factor] != 0) continue;
        double total = 0.0;
        for (int v = 0; v < dims[factor]; ++v) {
          idx[factor] = v;
          total += comps[mask][s.composite_index(idx[0], idx[1], idx[2], idx[3])];
        }
        EXPECT_NEAR(total, 0.0, 1e-13);
      }
    }
  }
}

// A diagonal matrix's Hilbert-Schmidt terms only use diagonal basis
// elements, so the per-type split must match the full expansion.
TEST(TypeComponents, AgreeWithHilbertSchmidtExpansion) {
  Rng rng(72);
  for (int trial = 0; trial < 5; ++trial) {
    const ClassicalProcess w = random_classical_process(kQubits, rng);
    const auto comps = type_components(kQubits, w.diag());
    const auto report = expand(w.to_process().matrix(), kQubits);
    for (TermType t : all_term_types()) {
      // Squared norm of a component equals D times the summed squared coefficients.
      EXPECT_NEAR(comps[t.mask()].squaredNorm(), kQubits.total() * report.weight(t), 1e-12)
          << t.name();
    }
  }
}

TEST(ClassicalProcess, RejectsInvalidDiagonals) {
  RealVector d = RealVector::Constant(16, 0.25);
  EXPECT_NO_THROW(ClassicalProcess(kQubits, d));
  EXPECT_THROW(ClassicalProcess(kQubits, 2.0 * d), InvalidProcessError);
  RealVector negative = d;
  negative[0] = -0.25;
  negative[1] = 0.75;
  EXPECT_THROW(ClassicalProcess(kQubits, negative), InvalidProcessError);
  // A2-only dependence (Alice's output feeding her own input) is forbidden.
  RealVector loop = d;
  for (int x = 0; x < 16; ++x) {
    const int j = (x / 4) % 2;
    loop[x] = j == 0 ? 0.4 : 0.1;
  }
  EXPECT_THROW(ClassicalProcess(kQubits, loop), InvalidProcessError);
  EXPECT_THROW(ClassicalProcess(kQubits, RealVector::Constant(8, 0.5)), DimensionError);
}

TEST(ClassicalProcess, FromProcessRequiresDiagonal) {
  EXPECT_THROW(ClassicalProcess::from_process(builtin::ocb()), InvalidProcessError);
  const ClassicalProcess w = ClassicalProcess::from_process(
      ProcessMatrix(kQubits, identity(16) / 4.0));
  EXPECT_NEAR(w.diag().sum(), 4.0, 1e-15);
}

TEST(Decompose, NonSignallingGoesToFirstComponent) {
  // Correlated but non-signalling: P(i, k) independent of outputs.
  const std::vector<double> pik = {0.4, 0.1, 0.2, 0.3};
  RealVector d(16);
  for (int x = 0; x < 16; ++x) {
    const int i = x / 8, k = (x / 2) % 2;
    d[x] = pik[i * 2 + k];
  }
  const ClassicalProcess w(kQubits, d);
  const auto dec = decompose(w);
  EXPECT_NEAR(dec.q, 1.0, 1e-12);
  EXPECT_EQ(dec.shifts, 0);
  EXPECT_LT(max_abs_difference(dec.w_b_not_before_a.matrix(), w.to_process().matrix()), 1e-12);
  EXPECT_LE(dec.recombination_residual, 1e-12);
}

TEST(Decompose, MixtureOfOneWayProcesses) {
  const LabSystems s = kQubits;
  const RealVector ab = a_to_b_diag(s, {0.7, 0.3}, {{1, 0}, {0, 1}, {0.5, 0.5}, {0.2, 0.8}});
  const RealVector ba = b_to_a_diag(s, {0.6, 0.4}, {{0, 1}, {1, 0}, {0.9, 0.1}, {0.3, 0.7}});
  const ClassicalProcess w(s, 0.3 * ab + 0.7 * ba);
  const auto dec = decompose(w);
  EXPECT_GE(dec.q, 0.0);
  EXPECT_LE(dec.q, 1.0);
  EXPECT_LE(dec.recombination_residual, 1e-9);
  EXPECT_LE(dec.kappa_sum_residual, 1e-12);
  EXPECT_TRUE(validate(dec.w_b_not_before_a, ValidationMode::both).valid);
  EXPECT_TRUE(validate(dec.w_a_not_before_b, ValidationMode::both).valid);
}

TEST(Decompose, ComponentsSignalOneWay) {
  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalProcess w = random_classical_process(kQubits, rng);
    const auto dec = decompose(w);
    const auto t1 = hs_types(dec.w_b_not_before_a);
    const auto t2 = hs_types(dec.w_a_not_before_b);
    for (const char* name : {"A1B2", "A1B1B2"}) EXPECT_FALSE(contains(t1, name)) << name;
    for (const char* name : {"A2B1", "A1A2B1"}) EXPECT_FALSE(contains(t2, name)) << name;
  }
}

TEST(Decompose, WorkingDataIsConsistent) {
  Rng rng(74);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalProcess w = random_classical_process(LabSystems(2, 3, 3, 2), rng);
    const auto dec = decompose(w);
    EXPECT_GE(dec.m, -1.0 - 1e-9);
    EXPECT_LE(dec.m, 1e-9);
    EXPECT_GE(dec.kappa_1_tilde.minCoeff(), -1e-12);
    EXPECT_GE(dec.kappa_2_tilde.minCoeff(), -1e-12);
    EXPECT_LE(dec.kappa_sum_residual, 1e-12);
    // Before shifting, the paired minima can never both be negative.
    EXPECT_GE((dec.m1_tilde + dec.m2_tilde).minCoeff(), -1e-12);
    EXPECT_LE(dec.recombination_residual, 1e-9);
  }
}

TEST(Decompose, RandomProcessesAllSplit) {
  Rng rng(75);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassicalProcess w = random_classical_process(kQubits, rng);
    const auto dec = decompose(w);
    EXPECT_GE(dec.q, 0.0);
    EXPECT_LE(dec.q, 1.0);
    EXPECT_LE(dec.recombination_residual, 1e-9);
    EXPECT_TRUE(validate(dec.w_b_not_before_a, ValidationMode::structural).valid);
    EXPECT_TRUE(validate(dec.w_a_not_before_b, ValidationMode::structural).valid);
  }
}

TEST(Decompose, RecombinedProcessesRespectCausalBound) {
  Rng rng(76);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalProcess w = random_classical_process(kQubits, rng);
    const auto dec = decompose(w);
    const ProcessMatrix recombined =
        builtin::mixture(dec.q, dec.w_b_not_before_a, dec.w_a_not_before_b);
    EXPECT_LE(success_probability(recombined, basis_switch_strategy()).p_succ, 0.75 + 1e-9);
  }
}

TEST(RandomClassicalProcess, SignalsBothWays) {
  Rng rng(77);
  int both = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto rec = validate(random_classical_process(kQubits, rng).to_process(),
                              ValidationMode::both);
    EXPECT_TRUE(rec.valid);
    both += rec.structural->bidirectional() ? 1 : 0;
  }
  EXPECT_GT(both, 10);
}

}  // namespace
}  // namespace procmat
