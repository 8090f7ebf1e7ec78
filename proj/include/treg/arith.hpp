#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "treg/rat.hpp"

namespace treg {

// Divisors of n in increasing order.  n >= 1.
inline std::vector<long> divisors(long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long> lo, hi;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

// Moebius function: 0 on non-squarefree, else (-1)^#{prime factors}.
inline int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be >= 1");
  long out = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out -= out / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out -= out / n;
  return out;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
  Int out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

inline long gcd_l(long a, long b) { return std::gcd(a, b); }
inline long lcm_l(long a, long b) { return std::lcm(a, b); }

// Multiplicative order of a modulo m, for gcd(a, m) = 1.
inline long mult_order(long a, long m) {
  if (m < 1 || std::gcd(a % m + m, m) != 1)
    throw std::invalid_argument("mult_order: need gcd(a, m) = 1, m >= 1");
  long x = ((a % m) + m) % m, ord = 1;
  long y = x;
  while (y != 1 % m) {
    y = (y * x) % m;
    if (++ord > m) throw std::logic_error("mult_order: no order found");
  }
  return ord;
}

}  // namespace treg
