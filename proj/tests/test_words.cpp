#include <doctest.h>

#include <cmath>
#include <string>

#include "snowflake/error.hpp"
#include "snowflake/words.hpp"

using namespace snowflake;

namespace {

// String-rewriting oracle for q_n, independent of the library's vector route.
std::string oracle_word(int n) {
  if (n == 0) return "";
  std::string prev, cur = "R";
  for (int i = 2; i <= n; ++i) {
    std::string tail = prev;
    if (i % 3 != 2) {
      for (char& c : tail) c = c == 'L' ? 'R' : 'L';
    }
    std::string next = cur + tail;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_CASE("fibonacci_word small orders") {
  CHECK(fibonacci_word(0).str() == "");
  CHECK(fibonacci_word(1).str() == "R");
  CHECK(fibonacci_word(2).str() == "R");
  CHECK(fibonacci_word(3).str() == "RL");
  CHECK(fibonacci_word(4).str() == "RLL");
  CHECK(fibonacci_word(5).str() == "RLLRL");
}

TEST_CASE("fibonacci_word matches the string oracle and the length law") {
  for (int n = 0; n <= 24; ++n) {
    CAPTURE(n);
    const TurnWord w = fibonacci_word(n);
    CHECK(w.str() == oracle_word(n));
    CHECK(w.size() == fib_length(n));
    if (n >= 2) CHECK(w.size() == fibonacci_word(n - 1).size() + fibonacci_word(n - 2).size());
  }
}

TEST_CASE("fibonacci_word rejects orders above the cap") {
  CHECK_THROWS_AS(fibonacci_word(41), InvalidInput);
  CHECK_THROWS_AS(fibonacci_word(6, 5), InvalidInput);
  CHECK_THROWS_AS(fibonacci_word(-1), InvalidInput);
  CHECK_NOTHROW(fibonacci_word(5, 5));
}

TEST_CASE("complement") {
  CHECK(complement(TurnWord::parse("R")).str() == "L");
  CHECK(complement(TurnWord::parse("RLL")).str() == "LRR");
  CHECK(complement(TurnWord{}).empty());

  // involution over every word up to length 10
  for (int len = 0; len <= 10; ++len) {
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string s;
      for (int i = 0; i < len; ++i) s += (bits >> i) & 1u ? 'L' : 'R';
      const auto w = TurnWord::parse(s);
      REQUIRE(complement(complement(w)) == w);
      REQUIRE(complement(w).size() == w.size());
    }
  }
}

TEST_CASE("TurnWord::parse rejects foreign letters") {
  CHECK_THROWS_AS(TurnWord::parse("LRX"), InvalidInput);
  CHECK_THROWS_AS(TurnWord::parse("lr"), InvalidInput);
  CHECK(TurnWord::parse("").empty());
}

TEST_CASE("snowflake_word") {
  CHECK(snowflake_word(0).str() == "RRR");
  CHECK(snowflake_word(1).str() == "RLLRLLRLLRL");
  CHECK(snowflake_word(2).size() == 51);
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(snowflake_word(n).size() == 4 * fib_length(3 * n + 1) - 1);
  }
  CHECK_THROWS_AS(snowflake_word(13), InvalidInput);
  CHECK_THROWS_AS(snowflake_word(3, 2), InvalidInput);
}

TEST_CASE("fib_length and pell") {
  CHECK(fib_length(0) == 0);
  CHECK(fib_length(1) == 1);
  CHECK(fib_length(4) == 3);
  CHECK(fib_length(25) == 75025);
  CHECK(fib_length(93) == 12200160415121876738ULL);
  CHECK_THROWS_AS(fib_length(94), InvalidInput);

  CHECK(pell(0) == 0);
  CHECK(pell(1) == 1);
  CHECK(pell(4) == 12);
  CHECK(pell(9) == 985);
  CHECK(pell(11) == 5741);
  for (int n = 2; n <= 30; ++n) CHECK(pell(n) == 2 * pell(n - 1) + pell(n - 2));
  CHECK_THROWS_AS(pell(kPellCap + 1), InvalidInput);
}

TEST_CASE("closed forms agree with the integer recursions") {
  CHECK(closed_forms(0).fib_real == doctest::Approx(0.0));
  CHECK(closed_forms(0).pell_real == doctest::Approx(1.0));
  CHECK(closed_forms(3).fib_real == doctest::Approx(2.0));
  CHECK(closed_forms(3).pell_real == doctest::Approx(12.0));
  CHECK(closed_forms(10).fib_real == doctest::Approx(55.0));
  CHECK(closed_forms(10).pell_real == doctest::Approx(5741.0));

  for (int n = 0; n <= 40; ++n) {
    CAPTURE(n);
    const auto cf = closed_forms(n);
    const double fib = static_cast<double>(fib_length(n));
    const double p = static_cast<double>(pell(n + 1));
    if (n == 0) {
      CHECK(std::abs(cf.fib_real) < 1e-12);
    } else {
      CHECK(std::abs(cf.fib_real - fib) / fib < 1e-9);
    }
    CHECK(std::abs(cf.pell_real - p) / p < 1e-9);
  }
  CHECK_THROWS_AS(closed_forms(41), InvalidInput);
}
