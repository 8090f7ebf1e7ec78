// Prints, for each conjugacy class of S_n, the equivariant weight polynomial
// of the regular-torus complement and its isotypic refinements.
//
//   ./weight_polynomials [n]     (default n = 4)

#include <cstdlib>
#include <iostream>

#include "treg/formulas.hpp"

using namespace treg;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 4;
  if (n < 1 || n > 8) {
    std::cerr << "usage: " << argv[0] << " [n in 1..8]\n";
    return 2;
  }

  std::cout << "hyperplane-free torus, n = " << n << "\n\n";
  for (const Partition& w : partitions(n)) {
    std::cout << "class " << w.to_string() << "\n";
    std::cout << "  ambient torus   " << trace_T(w).to_string() << "\n";
    std::cout << "  det = 1 slice   " << trace_ST_total(w).to_string() << "\n";
    for (long r : divisors(n))
      std::cout << "  order-" << r << " part    " << trace_ST(w, r).to_string() << "\n";
    std::cout << "\n";
  }
  return 0;
}
