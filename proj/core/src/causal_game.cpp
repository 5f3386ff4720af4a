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

#include "procmat/causal_game.hpp"

#include "procmat/standard.hpp"

namespace procmat {

GameStrategy::GameStrategy(std::array<Instrument, 2> alice,
                           std::array<std::array<Instrument, 2>, 2> bob)
    : alice_(std::move(alice)), bob_(std::move(bob)) {
  for (const auto& ia : alice_) {
    if (ia.outcomes() != 2) throw InvalidMapError("GameStrategy: Alice's guesses must be bits");
    if (ia.d_in() != alice_[0].d_in() || ia.d_out() != alice_[0].d_out()) {
      throw DimensionError("GameStrategy: Alice's instruments differ in dimensions");
    }
  }
  for (const auto& row : bob_) {
    for (const auto& ib : row) {
      if (ib.outcomes() != 2) throw InvalidMapError("GameStrategy: Bob's guesses must be bits");
      if (ib.d_in() != bob_[0][0].d_in() || ib.d_out() != bob_[0][0].d_out()) {
        throw DimensionError("GameStrategy: Bob's instruments differ in dimensions");
      }
    }
  }
}

GameScore success_probability(const ProcessMatrix& w, const GameStrategy& s) {
  GameScore score;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const auto send = joint_distribution(w, s.alice(a), s.bob(b, 0));
      score.alice_guesses_b += send.alice_marginal()[b];
      const auto read = joint_distribution(w, s.alice(a), s.bob(b, 1));
      score.bob_guesses_a += read.bob_marginal()[a];
    }
  }
  score.alice_guesses_b /= 4.0;
  score.bob_guesses_a /= 4.0;
  score.p_succ = 0.5 * (score.alice_guesses_b + score.bob_guesses_a);
  return score;
}

GameStrategy basis_switch_strategy() {
  return basis_switch_strategy(ComplexMatrix(identity(2) / 2.0));
}

GameStrategy basis_switch_strategy(const ComplexMatrix& bob_spare) {
  using namespace standard;
  if (bob_spare.rows() != 2 || bob_spare.cols() != 2) {
    throw DimensionError("basis_switch_strategy: Bob's spare state must be a qubit");
  }
  const ComplexMatrix i2 = identity(2);
  const ComplexMatrix z = pauli_z();
  const ComplexMatrix x = pauli_x();
  auto sign = [](int bit) { return bit % 2 == 0 ? 1.0 : -1.0; };

  auto alice_for = [&](int a) {
    std::vector<CPMap> maps;
    for (int guess = 0; guess < 2; ++guess) {
      maps.emplace_back(2, 2, 0.25 * kron(i2 + sign(guess) * z, i2 + sign(a) * z));
    }
    return Instrument(std::move(maps));
  };
  auto bob_reads = [&]() {
    std::vector<CPMap> maps;
    for (int guess = 0; guess < 2; ++guess) {
      maps.emplace_back(2, 2, 0.5 * kron(i2 + sign(guess) * z, bob_spare));
    }
    return Instrument(std::move(maps));
  };
  auto bob_sends = [&](int b) {
    std::vector<CPMap> maps;
    for (int guess = 0; guess < 2; ++guess) {
      maps.emplace_back(2, 2, 0.25 * kron(i2 + sign(guess) * x, i2 + sign(b + guess) * z));
    }
    return Instrument(std::move(maps));
  };

  return GameStrategy({alice_for(0), alice_for(1)},
                      {{{bob_sends(0), bob_sends(1)}, {bob_reads(), bob_reads()}}});
}

}  // namespace procmat
