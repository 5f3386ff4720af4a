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

// The two-party guessing game. Alice gets a random bit a, Bob random bits b
// and b'. Both output a guess (x for Alice, y for Bob). With b' = 0 the round
// is won if x = b; with b' = 1 it is won if y = a:
//
//   p_succ = 1/2 [ P(x = b | b' = 0) + P(y = a | b' = 1) ]
//
// Any pair of parties acting in a definite causal order scores at most 3/4.

#pragma once

#include "procmat/cj_maps.hpp"
#include "procmat/process.hpp"

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace procmat {

/// Per-input instruments with two outcomes each. Outcome index is the guess.
class GameStrategy {
 public:
  /// alice[a] guesses x; bob[b_prime][b] guesses y.
  GameStrategy(std::array<Instrument, 2> alice, std::array<std::array<Instrument, 2>, 2> bob);

  [[nodiscard]] const Instrument& alice(int a) const { return alice_[a]; }
  [[nodiscard]] const Instrument& bob(int b, int b_prime) const { return bob_[b_prime][b]; }

 private:
  std::array<Instrument, 2> alice_;
  std::array<std::array<Instrument, 2>, 2> bob_;
};

struct GameScore {
  double p_succ = 0.0;
  double alice_guesses_b = 0.0;  ///< P(x = b | b' = 0)
  double bob_guesses_a = 0.0;    ///< P(y = a | b' = 1)
};

/// Averages over uniformly random a, b, b'.
GameScore success_probability(const ProcessMatrix& w, const GameStrategy& strategy);

/// Qubit protocol that wins with probability (2 + sqrt 2)/4 on builtin::ocb().
///
/// Alice measures A1 in the Z basis (outcome x) and prepares a in the Z basis:
///   xi(x, a) = 1/4 [I + (-1)^x Z]^{A1} (x) [I + (-1)^a Z]^{A2}.
/// Bob with b' = 1 measures B1 in Z (outcome y) and prepares `bob_spare`:
///   eta1(y, b) = 1/2 [I + (-1)^y Z]^{B1} (x) rho^{B2}.
/// Bob with b' = 0 measures B1 in X and sends b XOR y in the Z basis:
///   eta2(y, b) = 1/4 [I + (-1)^y X]^{B1} (x) [I + (-1)^{b+y} Z]^{B2}.
GameStrategy basis_switch_strategy();
GameStrategy basis_switch_strategy(const ComplexMatrix& bob_spare);

// ---------------------------------------------------------------------------
// Classical strategies in a definite causal order.

using Fraction = boost::rational<std::int64_t>;

enum class CausalOrder { a_first, b_first };

const char* to_string(CausalOrder order);

/// Deterministic one-way strategy. The first party ("sender") sees only its
/// own bits, emits one of `message_dim` letters and makes its own guess; the
/// second party ("receiver") guesses from the letter and its own bits.
///
/// a_first: sender bits index a; receiver index (m * 2 + b) * 2 + b'.
/// b_first: sender bits index b * 2 + b'; receiver index m * 2 + a.
struct CausalStrategy {
  CausalOrder order = CausalOrder::a_first;
  int message_dim = 1;
  std::vector<int> encoding;      ///< sender bits -> letter
  std::vector<int> sender_guess;  ///< sender bits -> guess
  std::vector<int> receiver_guess;

  [[nodiscard]] std::string describe() const;
};

/// Exact success probability of a deterministic causal strategy.
Fraction evaluate(const CausalStrategy& s);

struct BruteForceResult {
  Fraction best;
  CausalStrategy witness;
  std::uint64_t strategies = 0;
};

class EnumerationTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxStrategies = std::uint64_t{1} << 30;

/// Number of deterministic strategies across both orders; throws
/// EnumerationTooLarge when a count does not fit.
std::uint64_t strategy_count(int message_dim);

/// Exhaustive maximum of p_succ over deterministic causal strategies.
BruteForceResult causal_bruteforce(int message_dim, std::uint64_t cap = kMaxStrategies);

}  // namespace procmat
