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

// Exhaustive search over deterministic one-way classical strategies.
//
// A strategy is scored by counting wins over the 8 equally likely inputs
// (a, b, b'), so every score is an exact multiple of 1/8.

#include "procmat/causal_game.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

namespace procmat {

const char* to_string(CausalOrder order) {
  return order == CausalOrder::a_first ? "A-first" : "B-first";
}

std::string CausalStrategy::describe() const {
  auto list = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
  };
  std::ostringstream os;
  os << "order=" << to_string(order) << " letters=" << message_dim
     << " encoding=" << list(encoding) << " sender_guess=" << list(sender_guess)
     << " receiver_guess=" << list(receiver_guess);
  return os.str();
}

namespace {

struct Shape {
  int sender_inputs;    // 2 (a) or 4 (b, b')
  int receiver_inputs;  // message_dim * (4 or 2)
};

Shape shape_of(CausalOrder order, int d) {
  return order == CausalOrder::a_first ? Shape{2, d * 4} : Shape{4, d * 2};
}

int wins(CausalOrder order, const std::vector<int>& enc, const std::vector<int>& sender_guess,
         const std::vector<int>& receiver_guess) {
  int count = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int bp = 0; bp < 2; ++bp) {
        int x, y;
        if (order == CausalOrder::a_first) {
          const int m = enc[a];
          x = sender_guess[a];
          y = receiver_guess[(m * 2 + b) * 2 + bp];
        } else {
          const int m = enc[b * 2 + bp];
          y = sender_guess[b * 2 + bp];
          x = receiver_guess[m * 2 + a];
        }
        count += (bp == 0) ? (x == b) : (y == a);
      }
    }
  }
  return count;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw EnumerationTooLarge("causal_bruteforce: strategy count overflows");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t order_count(CausalOrder order, int d) {
  const Shape s = shape_of(order, d);
  return checked_mul(checked_mul(checked_pow(d, s.sender_inputs), checked_pow(2, s.sender_inputs)),
                     checked_pow(2, s.receiver_inputs));
}

// Mixed-radix digits of `value`, least significant first.
std::vector<int> digits(std::uint64_t value, int radix, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = static_cast<int>(value % radix);
    value /= radix;
  }
  return out;
}

struct ChunkBest {
  int wins = -1;
  CausalStrategy witness;
  std::uint64_t evaluated = 0;
};

// One chunk fixes the sender's encoding; everything else is enumerated.
ChunkBest search_chunk(CausalOrder order, int d, std::uint64_t encoding_index) {
  const Shape s = shape_of(order, d);
  ChunkBest best;
  const std::vector<int> enc = digits(encoding_index, d, s.sender_inputs);
  const std::uint64_t sender_guesses = std::uint64_t{1} << s.sender_inputs;
  const std::uint64_t receiver_guesses = std::uint64_t{1} << s.receiver_inputs;
  for (std::uint64_t g = 0; g < sender_guesses; ++g) {
    const std::vector<int> sg = digits(g, 2, s.sender_inputs);
    for (std::uint64_t r = 0; r < receiver_guesses; ++r) {
      const std::vector<int> rg = digits(r, 2, s.receiver_inputs);
      const int w = wins(order, enc, sg, rg);
      ++best.evaluated;
      if (w > best.wins) {
        best.wins = w;
        best.witness = CausalStrategy{order, d, enc, sg, rg};
      }
    }
  }
  return best;
}

}  // namespace

Fraction evaluate(const CausalStrategy& s) {
  if (s.message_dim < 1) throw std::invalid_argument("evaluate: message_dim must be positive");
  const Shape shape = shape_of(s.order, s.message_dim);
  if (static_cast<int>(s.encoding.size()) != shape.sender_inputs ||
      static_cast<int>(s.sender_guess.size()) != shape.sender_inputs ||
      static_cast<int>(s.receiver_guess.size()) != shape.receiver_inputs) {
    throw std::invalid_argument("evaluate: strategy tables have the wrong size");
  }
  for (int m : s.encoding) {
    if (m < 0 || m >= s.message_dim) throw std::invalid_argument("evaluate: letter out of range");
  }
  auto is_bit = [](int v) { return v == 0 || v == 1; };
  if (!std::all_of(s.sender_guess.begin(), s.sender_guess.end(), is_bit) ||
      !std::all_of(s.receiver_guess.begin(), s.receiver_guess.end(), is_bit)) {
    throw std::invalid_argument("evaluate: guesses must be bits");
  }
  return Fraction(wins(s.order, s.encoding, s.sender_guess, s.receiver_guess), 8);
}

std::uint64_t strategy_count(int message_dim) {
  if (message_dim < 1) throw std::invalid_argument("strategy_count: message_dim must be positive");
  const std::uint64_t a = order_count(CausalOrder::a_first, message_dim);
  const std::uint64_t b = order_count(CausalOrder::b_first, message_dim);
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw EnumerationTooLarge("causal_bruteforce: strategy count overflows");
  }
  return a + b;
}

BruteForceResult causal_bruteforce(int message_dim, std::uint64_t cap) {
  if (message_dim < 1) {
    throw std::invalid_argument("causal_bruteforce: message_dim must be positive");
  }
  const std::uint64_t total = strategy_count(message_dim);
  if (total > cap) {
    std::ostringstream os;
    os << "causal_bruteforce: " << total << " strategies exceed the cap of " << cap;
    throw EnumerationTooLarge(os.str());
  }

  // Chunks are independent; results are merged in chunk order so the witness
  // does not depend on scheduling.
  struct Task {
    CausalOrder order;
    std::uint64_t encoding;
  };
  std::vector<Task> tasks;
  for (CausalOrder order : {CausalOrder::a_first, CausalOrder::b_first}) {
    const auto encodings = checked_pow(message_dim, shape_of(order, message_dim).sender_inputs);
    for (std::uint64_t e = 0; e < encodings; ++e) tasks.push_back({order, e});
  }

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<ChunkBest> results(tasks.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      results[i] = search_chunk(tasks[i].order, message_dim, tasks[i].encoding);
    }
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < tasks.size(); i += workers) {
          results[i] = search_chunk(tasks[i].order, message_dim, tasks[i].encoding);
        }
      }));
    }
    for (auto& f : futures) f.get();
  }

  BruteForceResult out;
  int best_wins = -1;
  for (auto& r : results) {
    out.strategies += r.evaluated;
    if (r.wins > best_wins) {
      best_wins = r.wins;
      out.witness = std::move(r.witness);
    }
  }
  out.best = Fraction(best_wins, 8);
  return out;
}

}  // namespace procmat
