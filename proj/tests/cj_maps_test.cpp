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

#include "procmat/cj_maps.hpp"
#include "procmat/random.hpp"
#include "procmat/standard.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace procmat {
namespace {

using testing::oracle_apply_kraus;

// [ sum_ij |i><j| (x) E(|i><j|) ]^T built one block at a time.
ComplexMatrix oracle_cj(const std::vector<ComplexMatrix>& kraus) {
  const int d_out = static_cast<int>(kraus.front().rows());
  const int d_in = static_cast<int>(kraus.front().cols());
  ComplexMatrix choi = ComplexMatrix::Zero(d_in * d_out, d_in * d_out);
  for (int i = 0; i < d_in; ++i) {
    for (int j = 0; j < d_in; ++j) {
      ComplexMatrix eij = ComplexMatrix::Zero(d_in, d_in);
      eij(i, j) = 1.0;
      choi.block(i * d_out, j * d_out, d_out, d_out) = oracle_apply_kraus(kraus, eij);
    }
  }
  return choi.transpose();
}

std::vector<ComplexMatrix> random_kraus(int d_in, int d_out, int count, Rng& rng) {
  // First d_in columns of a Haar unitary, cut into Kraus blocks of d_out rows.
  // Needs d_out * count >= d_in.
  const ComplexMatrix u = haar_unitary(d_out * count, rng);
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < count; ++k) out.push_back(u.block(k * d_out, 0, d_out, d_in));
  return out;
}

TEST(CjFromKraus, IdentityChannelIsUnnormalizedPhiPlus) {
  for (int d : {2, 3}) {
    const CPMap id = cj_from_kraus({identity(d)});
    EXPECT_LT(max_abs_difference(id.cj(), standard::phi_plus_unnormalized(d)), 1e-15);
  }
}

TEST(CjFromKraus, MatchesOracleOnRandomChannels) {
  Rng rng(11);
  for (auto [d_in, d_out] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 2}}) {
    const auto kraus = random_kraus(d_in, d_out, 3, rng);
    const CPMap map = cj_from_kraus(kraus);
    EXPECT_EQ(map.d_in(), d_in);
    EXPECT_EQ(map.d_out(), d_out);
    EXPECT_LT(max_abs_difference(map.cj(), oracle_cj(kraus)), 1e-13);
  }
}

TEST(CjFromKraus, PovmElementIsItsOwnCj) {
  // d_out = 1: a single Kraus row v gives the POVM element v^dagger v.
  ComplexMatrix v(1, 2);
  v << Complex(0.6, 0.0), Complex(0.0, 0.8);
  const CPMap e = cj_from_kraus({v});
  EXPECT_LT(max_abs_difference(e.cj(), v.adjoint() * v), 1e-15);
}

TEST(CjFromKraus, RejectsMixedShapes) {
  EXPECT_THROW(cj_from_kraus({identity(2), identity(3)}), DimensionError);
}

TEST(ApplyInverseCj, ReproducesKrausAction) {
  Rng rng(12);
  for (int trial = 0; trial < 5; ++trial) {
    const auto kraus = random_kraus(3, 2, 2, rng);
    const CPMap map = cj_from_kraus(kraus);
    const ComplexMatrix rho = random_density(3, rng);
    EXPECT_LT(max_abs_difference(apply_inverse_cj(map, rho), oracle_apply_kraus(kraus, rho)),
              1e-13);
  }
}

TEST(ApplyInverseCj, NonHermitianInputsAreLinear) {
  Rng rng(13);
  const auto kraus = random_kraus(2, 2, 2, rng);
  const CPMap map = cj_from_kraus(kraus);
  ComplexMatrix x = ginibre(2, 2, rng);
  EXPECT_LT(max_abs_difference(apply_inverse_cj(map, x), oracle_apply_kraus(kraus, x)), 1e-13);
}

TEST(MeasureAndPrepare, DetectsThenPrepares) {
  const ComplexVector plus = (standard::basis_ket(2, 0) + standard::basis_ket(2, 1)) / std::sqrt(2.0);
  const ComplexVector one = standard::basis_ket(2, 1);
  const CPMap m = measure_and_prepare(plus, one);
  const ComplexMatrix rho = standard::projector(plus);
  EXPECT_LT(max_abs_difference(apply_inverse_cj(m, rho), standard::projector(one)), 1e-15);
  const ComplexMatrix orth = standard::projector(
      (standard::basis_ket(2, 0) - standard::basis_ket(2, 1)) / std::sqrt(2.0));
  EXPECT_LT(apply_inverse_cj(m, orth).norm(), 1e-15);
  EXPECT_FALSE(is_cptp(m).cptp);
}

TEST(IsCptp, UnitaryChannels) {
  Rng rng(14);
  const CPMap u = cj_from_kraus({haar_unitary(3, rng)});
  const auto report = is_cptp(u);
  EXPECT_TRUE(report.cptp);
  EXPECT_LT(report.trace_residual, 1e-13);
  EXPECT_GT(report.min_eigenvalue, -1e-13);
}

TEST(IsCptp, TraceDecreasingIsCpButNotCptp) {
  const CPMap half = cj_from_kraus({identity(2) * std::sqrt(0.5)});
  const auto report = is_cptp(half);
  EXPECT_FALSE(report.cptp);
  EXPECT_NEAR(report.trace_residual, 0.5, 1e-15);
}

TEST(CPMap, RejectsNonPositive) {
  ComplexMatrix cj = standard::phi_plus_unnormalized(2);
  cj(0, 0) = -0.5;
  EXPECT_THROW(CPMap(2, 2, cj), InvalidMapError);
}

TEST(CPMap, RejectsTraceIncreasing) {
  EXPECT_THROW(CPMap(2, 2, 2.0 * standard::phi_plus_unnormalized(2)), InvalidMapError);
}

TEST(CPMap, RejectsWrongShape) {
  EXPECT_THROW(CPMap(2, 3, identity(4)), DimensionError);
}

TEST(CPMap, MixIsConvexCombination) {
  const CPMap id = cj_from_kraus({identity(2)});
  const CPMap flip = cj_from_kraus({standard::pauli_x()});
  const CPMap mixed = id.mix(0.3, flip);
  EXPECT_TRUE(is_cptp(mixed).cptp);
  const ComplexMatrix zero = standard::basis_projector(2, 0);
  const ComplexMatrix out = apply_inverse_cj(mixed, zero);
  EXPECT_NEAR(out(0, 0).real(), 0.3, 1e-15);
  EXPECT_NEAR(out(1, 1).real(), 0.7, 1e-15);
}

TEST(Instrument, ComputationalBasisMeasurement) {
  std::vector<CPMap> maps;
  for (int k = 0; k < 2; ++k) {
    maps.push_back(measure_and_prepare(standard::basis_ket(2, k), standard::basis_ket(2, k)));
  }
  const Instrument inst(maps);
  EXPECT_EQ(inst.outcomes(), 2u);
  EXPECT_TRUE(is_cptp(inst.total()).cptp);
}

TEST(Instrument, RejectsIncompleteSets) {
  std::vector<CPMap> maps = {
      measure_and_prepare(standard::basis_ket(2, 0), standard::basis_ket(2, 0))};
  EXPECT_THROW(Instrument{maps}, InvalidMapError);
}

TEST(Instrument, RejectsMismatchedDimensions) {
  std::vector<CPMap> maps = {cj_from_kraus({identity(2)}),
                             CPMap(2, 3, ComplexMatrix::Zero(6, 6))};
  EXPECT_THROW(Instrument{maps}, DimensionError);
}

TEST(RandomMaps, AreCptpWithRequestedShape) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng = split_rng(99, seed);
    const int d_in = 1 + static_cast<int>(seed % 3);
    const int d_out = 1 + static_cast<int>((seed / 3) % 3);
    const CPMap m = random_cptp(d_in, d_out, rng);
    EXPECT_EQ(m.d_in(), d_in);
    EXPECT_EQ(m.d_out(), d_out);
    EXPECT_TRUE(is_cptp(m).cptp);
    const Instrument inst = random_instrument(d_in, d_out, 3, rng);
    EXPECT_EQ(inst.outcomes(), 3u);
    EXPECT_TRUE(is_cptp(inst.total()).cptp);
  }
}

}  // namespace
}  // namespace procmat
