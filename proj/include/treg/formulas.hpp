#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/psalgebra.hpp"

namespace treg {

/*
 * Counting polynomials for regular torus elements.
 *
 * Everything below is driven by two families in Z[q]:
 *
 *   R^{(r)}_i      = sum_{d | i, gcd(d,r)=1} mu(d) (q^{i/d} - 1)
 *   R_{r,i,theta}  = sum_{d | i} #{zeta in mu_r : zeta^d = theta}
 *                      * mu(d) (q^{i/d} - 1)
 *
 * R_{r,i,theta} counts, per length-i cycle with scalar class theta, the
 * "fresh" coordinate choices; the regular-element traces are falling
 * products of it in steps of r*i.  The quotient varieties divide one factor
 * of q-1 out exactly, and the isotypic generating series are products of
 * binomial factors whose exponents are R-polynomials over r*i.
 */

// R^{(r)}_i.
inline QPoly r_small(long r, long i) {
  if (r < 1 || i < 1) throw std::invalid_argument("r_small: need r, i >= 1");
  QPoly out;
  for (long d : divisors(i)) {
    if (std::gcd(d, r) != 1) continue;
    int mu = mobius(d);
    if (mu) out += Rat(mu) * q_pow_minus_one(i / d);
  }
  return out;
}

// R_{r,i,theta} with theta = zeta_r^k, straight from the divisor sum.
// #{zeta in mu_r : zeta^d = theta} is gcd(d,r) when gcd(d,r) | k, else 0.
inline QPoly r_theta(long r, long i, long k) {
  if (r < 1 || i < 1) throw std::invalid_argument("r_theta: need r, i >= 1");
  k = ((k % r) + r) % r;
  QPoly out;
  for (long d : divisors(i)) {
    long g = std::gcd(d, r);
    if (k % g != 0) continue;
    int mu = mobius(d);
    if (mu) out += Rat(g * mu) * q_pow_minus_one(i / d);
  }
  return out;
}

// Same polynomial assembled from the R^{(r)} family:
// R_{r,i,theta} = sum_{s | gcd(r/t, i)} s mu(s) R^{(r)}_{i/s},  t = ord theta.
// Kept as an independent route so tests can cross-check the two.
inline QPoly r_theta_via_rsmall(long r, long i, long k) {
  if (r < 1 || i < 1) throw std::invalid_argument("r_theta_via_rsmall: need r, i >= 1");
  k = ((k % r) + r) % r;
  long t = r / std::gcd(k, r);
  QPoly out;
  for (long s : divisors(std::gcd(r / t, i))) {
    int mu = mobius(s);
    if (mu) out += Rat(s * mu) * r_small(r, i / s);
  }
  return out;
}

// The full colored generating series of the regular locus of the r-fold
// cover: prod_{i <= N, theta} (1 + p_i(theta))^{R_{r,i,theta} / (r i)}.
inline FactoredSeries p_wreath(long r, int N) {
  if (r < 1 || N < 0) throw std::invalid_argument("p_wreath: need r >= 1, N >= 0");
  FactoredSeries s;
  s.alphabet_r = r;
  for (int i = 1; i <= N; ++i)
    for (long k = 0; k < r; ++k) {
      QPoly beta = Rat(1, r * i) * r_theta(r, i, k);
      if (beta.is_zero()) continue;
      BinomFactor f;
      f.var_i = i;
      f.var_k = int(k);
      f.e = 1;
      f.c = CycNum(1);
      f.beta = beta;
      s.factors.push_back(std::move(f));
    }
  return s;
}

// Equivariant weight polynomial of T(r, m) at a wreath class y: the product
// over colored cycles (i, theta)^a of the falling factorial
// R (R - ri) ... (R - (a-1) ri), R = R_{r,i,theta}.
inline QPoly trace_T(long r, const WreathClass& y) {
  if (y.r() != r) throw std::invalid_argument("trace_T: class has wrong r");
  QPoly out(1);
  for (auto& [ik, a] : y.cycles()) {
    QPoly R = r_theta(r, ik.first, ik.second);
    for (int j = 0; j < a; ++j) out *= R - QPoly(Rat(j) * Rat(r * ik.first));
  }
  return out;
}

inline QPoly trace_T(const Partition& lambda) { return trace_T(1, WreathClass(1, lambda)); }

// The projective quotient PT(r, m) divides out one torus factor: the weight
// polynomial is trace_T / (q - 1), exactly.
inline QPoly trace_PT(long r, const WreathClass& y) {
  return trace_T(r, y).divide_exact(q_pow_minus_one(1));
}

// Single-variable factored series P^{(r)}_i =
//   prod_{s | gcd(r,i)} (1 - (-p_i)^{r/s})^{s mu(s) R^{(r)}_{i/s} / (r i)}.
inline FactoredSeries p_factor(long r, long i) {
  if (r < 1 || i < 1) throw std::invalid_argument("p_factor: need r, i >= 1");
  FactoredSeries s;
  s.alphabet_r = 0;
  for (long d : divisors(std::gcd(r, i))) {
    int mu = mobius(d);
    if (!mu) continue;
    QPoly beta = Rat(d * mu, r * i) * r_small(r, i / d);
    if (beta.is_zero()) continue;
    BinomFactor f;
    f.var_i = int(i);
    f.var_k = -1;
    f.e = int(r / d);
    f.c = CycNum((r / d) % 2 == 0 ? -1 : 1);  // 1 - (-p)^{r/d} = 1 + (-1)^{r/d+1} p^{r/d}
    f.beta = beta;
    s.factors.push_back(std::move(f));
  }
  return s;
}

// prod_{i <= N} P^{(r)}_i expanded over the plain alphabet; the direct
// (character-specialization-free) form of the order-r isotypic series.
inline PSeries p_chi(long r, int N) {
  FactoredSeries all;
  all.alphabet_r = 0;
  for (int i = 1; i <= N; ++i) {
    FactoredSeries fi = p_factor(r, i);
    all.factors.insert(all.factors.end(), fi.factors.begin(), fi.factors.end());
  }
  return expand(all, N, 1);
}

// The same series obtained from the colored product via the induction
// substitution.  All coefficients must collapse to rationals; a surviving
// irrationality would falsify the identity, hence the hard check.
inline PSeries p_prime(long r, int N) {
  PSeries s = expand(subst_induction(p_wreath(r, N), r), N, r);
  if (!s.is_rational()) throw std::logic_error("p_prime: non-rational coefficient survived");
  return s;
}

// Equivariant weight polynomial of T^{(n)}(1, m) at a plain class w for a
// character of order r: product over cycle lengths of
// a_i! i^{a_i} [p_i^{a_i}] P^{(r)}_i.
inline QPoly trace_Tn1m(const Partition& w, long r) {
  if (r < 1) throw std::invalid_argument("trace_Tn1m: need r >= 1");
  QPoly out(1);
  for (auto [i, a] : w.mult_map()) {
    PSeries pi = expand(p_factor(r, i), i * a, 1);
    QPoly coeff = pi.coeff(Partition(std::vector<int>(size_t(a), i))).to_qpoly();
    if (coeff.is_zero()) return QPoly();
    out *= Rat(factorial(a) * pow_int(Int(i), unsigned(a))) * coeff;
  }
  return out;
}

// ST(1, n) = the product-one slice; its weight polynomial is the
// T^{(n)}(1, n) one divided by q - 1, exactly.  Needs r | n.
inline QPoly trace_ST(const Partition& w, long r) {
  long n = w.weight();
  if (n < 1 || r < 1 || n % r != 0)
    throw std::invalid_argument("trace_ST: need a nonempty partition and r | n");
  return trace_Tn1m(w, r).divide_exact(q_pow_minus_one(1));
}

// Total (non-isotypic) weight polynomial of ST(1, n):
// sum over r | n of phi(r) * trace_ST(w, r).
inline QPoly trace_ST_total(const Partition& w) {
  long n = w.weight();
  if (n < 1) throw std::invalid_argument("trace_ST_total: empty partition");
  QPoly out;
  for (long r : divisors(n)) out += Rat(euler_phi(r)) * trace_ST(w, r);
  return out;
}

// Brute-force mu_n average: (1/n^m) sum over all scalar tuples of
// chi(product)^{-1} trace_T(n, class of (w, tuple)), chi(zeta_n) = zeta_n^k.
// Exponential in m; guarded to m <= 5 and n^m <= 1e6.
inline QPoly sumprop_direct(const Partition& w, long n, long k) {
  int m = w.weight();
  if (n < 1) throw std::invalid_argument("sumprop_direct: need n >= 1");
  double tuples = std::pow(double(n), m);
  if (m > 5 || tuples > 1e6)
    throw std::invalid_argument("sumprop_direct: blows up beyond m <= 5, n^m <= 1e6");
  WreathElement g;
  g.r = n;
  g.perm = canonical_perm(w);
  g.scalar.assign(size_t(m), 0);
  CPoly sum(n);
  while (true) {
    long total = 0;
    for (long e : g.scalar) total += e;
    sum += CycNum::zeta(n, -k * total) * CPoly(trace_T(n, class_of(g)), n);
    // odometer over [0, n)^m
    int pos = 0;
    while (pos < m && ++g.scalar[size_t(pos)] == n) g.scalar[size_t(pos++)] = 0;
    if (pos == m) break;
  }
  QPoly out = sum.to_qpoly();  // irrational average would falsify the identity
  return Rat(1, pow_int(Int(n), unsigned(m))) * out;
}

// Closed form for [p_i^a] P^{(r)}_i when gcd(r, i) = 1 (needs r | a):
// (-1)^{a - a/r} R (R - ri) ... (R - (a-r) i) / ((ri)^{a/r} (a/r)!).
inline QPoly coeff_coprime(long r, long i, long a) {
  if (r < 1 || i < 1 || a < 1 || std::gcd(r, i) != 1)
    throw std::invalid_argument("coeff_coprime: need r, i, a >= 1 and gcd(r, i) = 1");
  if (a % r != 0) return QPoly();
  long b = a / r;
  QPoly R = r_small(r, i), out(1);
  for (long j = 0; j < b; ++j) out *= R - QPoly(Rat(j * r * i));
  Rat scale(((a - b) % 2 == 0) ? 1 : -1, pow_int(Int(r * i), unsigned(b)) * factorial(b));
  return scale * out;
}

// Closed form for [p_i^a] P^{(2)}_i at even i:
// sum_j (-1)^j binom(R^{(2)}_i / 2i, j) binom(-R^{(2)}_{i/2} / i, a - 2j).
inline QPoly coeff_r2_even(long i, long a) {
  if (i < 2 || i % 2 != 0 || a < 0)
    throw std::invalid_argument("coeff_r2_even: need even i >= 2, a >= 0");
  QPoly B = Rat(1, 2 * i) * r_small(2, i);
  QPoly C = Rat(-1, i) * r_small(2, i / 2);
  QPoly out;
  for (long j = 0; 2 * j <= a; ++j) {
    QPoly term = binom_poly(B, j) * binom_poly(C, a - 2 * j);
    out += (j % 2 == 0) ? term : -term;
  }
  return out;
}

// Which variety a number or table refers to; mostly CLI plumbing.
struct VarietyTag {
  enum class Kind { T, PT, Tn1m, ST } kind = Kind::T;
  long r = 1;  // cover order (T/PT) or character modulus n (Tn1m/ST)
  int m = 1;   // coordinate count

  int dim() const {
    switch (kind) {
      case Kind::T:
      case Kind::Tn1m: return m;
      case Kind::PT:
      case Kind::ST: return m - 1;
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::T: return "T(" + std::to_string(r) + "," + std::to_string(m) + ")";
      case Kind::PT: return "PT(" + std::to_string(r) + "," + std::to_string(m) + ")";
      case Kind::Tn1m:
        return "T^(" + std::to_string(r) + ")(1," + std::to_string(m) + ")";
      case Kind::ST: return "ST(1," + std::to_string(m) + ")";
    }
    return "?";
  }
};

}  // namespace treg
