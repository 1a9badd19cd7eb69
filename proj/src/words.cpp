#include "snowflake/words.hpp"

#include <algorithm>
#include <cmath>

#include "snowflake/error.hpp"

namespace snowflake {

TurnWord TurnWord::parse(std::string_view text) {
  std::vector<Turn> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      letters.push_back(Turn::L);
    } else if (c == 'R') {
      letters.push_back(Turn::R);
    } else {
      throw InvalidInput(std::string("turn word may only contain 'L' and 'R', got '") + c + "'");
    }
  }
  return TurnWord(std::move(letters));
}

std::string TurnWord::str() const {
  std::string out(letters_.size(), ' ');
  std::transform(letters_.begin(), letters_.end(), out.begin(),
                 [](Turn t) { return static_cast<char>(t); });
  return out;
}

TurnWord complement(const TurnWord& w) {
  std::vector<Turn> out(w.size());
  std::transform(w.begin(), w.end(), out.begin(), flip);
  return TurnWord(std::move(out));
}

TurnWord fibonacci_word(int n, int cap) {
  if (n < 0) throw InvalidInput("fibonacci_word: order must be non-negative");
  if (n > cap) {
    throw InvalidInput("fibonacci_word: order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  }
  if (n == 0) return {};

  // prev = q_{i-2}, cur = q_{i-1}; only two words are kept alive.
  std::vector<Turn> prev;
  std::vector<Turn> cur{Turn::R};
  for (int i = 2; i <= n; ++i) {
    std::vector<Turn> next;
    next.reserve(cur.size() + prev.size());
    next.insert(next.end(), cur.begin(), cur.end());
    if (i % 3 == 2) {
      next.insert(next.end(), prev.begin(), prev.end());
    } else {
      std::transform(prev.begin(), prev.end(), std::back_inserter(next), flip);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return TurnWord(std::move(cur));
}

TurnWord snowflake_word(int n, int order_cap) {
  if (n < 0) throw InvalidInput("snowflake_word: order must be non-negative");
  if (n > order_cap) {
    throw InvalidInput("snowflake_word: order " + std::to_string(n) + " exceeds cap " +
                       std::to_string(order_cap));
  }
  const TurnWord base = fibonacci_word(3 * n + 1, std::max(kDefaultWordCap, 3 * order_cap + 1));
  std::vector<Turn> letters;
  letters.reserve(4 * base.size());
  for (int rep = 0; rep < 4; ++rep) {
    letters.insert(letters.end(), base.begin(), base.end());
  }
  letters.pop_back();
  return TurnWord(std::move(letters));
}

std::uint64_t fib_length(int n) {
  if (n < 0 || n > kFibLengthCap) {
    throw InvalidInput("fib_length: n must lie in [0, " + std::to_string(kFibLengthCap) + "]");
  }
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

std::uint64_t pell(int n) {
  if (n < 0 || n > kPellCap) {
    throw InvalidInput("pell: n must lie in [0, " + std::to_string(kPellCap) + "]");
  }
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t next = 2 * b + a;
    a = b;
    b = next;
  }
  return a;
}

ClosedForms closed_forms(int n) {
  if (n < 0 || n > kDefaultWordCap) {
    throw InvalidInput("closed_forms: n must lie in [0, " + std::to_string(kDefaultWordCap) + "]");
  }
  const double s5 = std::sqrt(5.0);
  const double s2 = std::sqrt(2.0);
  const double phi = (1.0 + s5) / 2.0;
  const double psi = (1.0 - s5) / 2.0;
  const double fib = (std::pow(phi, n) - std::pow(psi, n)) / s5;
  const double pell_next =
      (2.0 + s2) / 4.0 * std::pow(1.0 + s2, n) + (2.0 - s2) / 4.0 * std::pow(1.0 - s2, n);
  return {fib, pell_next};
}

}  // namespace snowflake
