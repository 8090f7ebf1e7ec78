// Decomposes each cohomological degree of a mu_n-isotypic piece into
// irreducible S_n characters.
//
//   ./isotypic_decomposition [n] [r]     (default n = 4, r = 2)

#include <cstdlib>
#include <iostream>

#include "treg/reps.hpp"

using namespace treg;

int main(int argc, char** argv) {
  long n = argc > 1 ? std::atol(argv[1]) : 4;
  long r = argc > 2 ? std::atol(argv[2]) : 2;
  if (n < 1 || n > 7 || r < 1 || n % r != 0) {
    std::cerr << "usage: " << argv[0] << " [n in 1..7] [r dividing n]\n";
    return 2;
  }

  std::cout << "isotypic piece of order " << r << " inside n = " << n << "\n\n";
  for (int j = 0; j < int(n); ++j) {
    ClassFunction chi = isotypic_character(n, r, j);
    std::cout << "H^" << j << " = ";
    bool first = true;
    for (const auto& [nu, c] : decompose(chi)) {
      if (c == 0) continue;
      if (!first) std::cout << " + ";
      if (c != 1) std::cout << c << "*";
      std::cout << "S" << nu.to_string();
      first = false;
    }
    if (first) std::cout << "0";
    std::cout << "\n";
  }
  return 0;
}
