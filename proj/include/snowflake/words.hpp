#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace snowflake {

enum class Turn : char { L = 'L', R = 'R' };

constexpr Turn flip(Turn t) noexcept { return t == Turn::L ? Turn::R : Turn::L; }

/// A finite word over {L, R}. The empty word is valid.
class TurnWord {
 public:
  TurnWord() = default;
  explicit TurnWord(std::vector<Turn> letters) : letters_(std::move(letters)) {}

  /// Parses a string of 'L'/'R' characters; anything else throws InvalidInput.
  static TurnWord parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Turn operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  const std::vector<Turn>& letters() const noexcept { return letters_; }

  std::string str() const;

  friend bool operator==(const TurnWord&, const TurnWord&) = default;

 private:
  std::vector<Turn> letters_;
};

inline constexpr int kDefaultWordCap = 40;
inline constexpr int kDefaultOrderCap = 12;
inline constexpr int kPellCap = 50;
inline constexpr int kFibLengthCap = 93;

/// q_n: q_0 = empty, q_1 = R, q_n = q_{n-1} q_{n-2} when n = 2 (mod 3),
/// otherwise q_{n-1} followed by the complement of q_{n-2}.
TurnWord fibonacci_word(int n, int cap = kDefaultWordCap);

/// Swaps L and R letter by letter.
TurnWord complement(const TurnWord& w);

/// (q_{3n+1})^4 with the final letter removed; traces the closed polygon of order n.
TurnWord snowflake_word(int n, int order_cap = kDefaultOrderCap);

/// |q_n| by the integer recursion (the Fibonacci numbers F_n).
std::uint64_t fib_length(int n);

/// Pell numbers: P(0) = 0, P(1) = 1, P(n) = 2 P(n-1) + P(n-2).
std::uint64_t pell(int n);

struct ClosedForms {
  double fib_real;   // Binet evaluation of |q_n|
  double pell_real;  // closed form of P(n+1)
};

ClosedForms closed_forms(int n);

}  // namespace snowflake
