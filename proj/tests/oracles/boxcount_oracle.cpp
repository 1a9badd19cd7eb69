// Writes the golden box counts for the order-8 polygon, k = 2..8, one
// "k count" pair per line. Slow (minutes); run by hand:
//   boxcount_oracle > tests/golden/boxcount_order8.txt
#include <iostream>

#include "boxcount_oracle.hpp"

int main() {
  const auto path = snowflake::snowflake_path(8);
  for (int k = 2; k <= 8; ++k) {
    std::cout << k << ' ' << oracle::count_cells(path, k) << '\n' << std::flush;
  }
  return 0;
}
