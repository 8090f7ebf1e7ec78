#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/cyclotomic.hpp"
#include "treg/partitions.hpp"

namespace treg {

/*
 * Finite-field ground truth.  The torus points fixed by a twisted Frobenius
 * are m-tuples of roots of unity: a coordinate on a length-i cycle with
 * accumulated scalar c satisfies z^{q^i - 1} = c^{-1}, so it lives in the
 * cyclic group mu_D for D = (q^i - 1) * ord(c).  All the counting below
 * therefore happens in one cyclic container group mu_M (M = lcm of the
 * per-cycle D's and (q-1) * n), represented additively by exponents in
 * Z/M under a fixed generator gamma with gamma^{M/(q-1)} = g, the least
 * primitive root mod q.  The one-variable relations become linear
 * congruences whose full solution sets are exactly the fixed-point
 * candidate sets, and the distinctness / product constraints are checked
 * on exponents.  This is the per-cycle candidate strategy with the scan
 * replaced by a congruence solve, which keeps every sweep at desk scale.
 */

inline bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

struct PrimeField {
  long q;

  explicit PrimeField(long q_) : q(q_) {
    if (!is_prime(q)) throw std::invalid_argument("PrimeField: q must be prime");
  }

  long norm(long a) const { return ((a % q) + q) % q; }
  long add(long a, long b) const { return norm(a + b); }
  long mul(long a, long b) const { return norm(a * b); }

  long pow(long a, long e) const {
    a = norm(a);
    long out = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
    }
    return out;
  }

  long inv(long a) const {
    a = norm(a);
    if (a == 0) throw std::invalid_argument("PrimeField::inv: zero");
    return pow(a, q - 2);
  }

  // Least primitive root mod q.
  long primitive_root() const {
    if (q == 2) return 1;
    std::vector<long> prime_factors;
    long n = q - 1;
    for (long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        prime_factors.push_back(p);
        while (n % p == 0) n /= p;
      }
    if (n > 1) prime_factors.push_back(n);
    for (long g = 2; g < q; ++g) {
      bool ok = true;
      for (long p : prime_factors)
        if (pow(g, (q - 1) / p) == 1) {
          ok = false;
          break;
        }
      if (ok) return g;
    }
    throw std::logic_error("PrimeField::primitive_root: none found");
  }
};

// F_{q^L} as residues modulo a monic irreducible of degree L.  Elements are
// coefficient vectors of length L, lowest degree first.
struct ExtField {
  long q = 2;
  int L = 1;
  std::vector<long> modulus;  // monic, size L + 1, lowest first

  using Elem = std::vector<long>;

  Elem zero() const { return Elem(size_t(L), 0); }
  Elem one() const { return from_base(1); }

  Elem from_base(long a) const {
    Elem e = zero();
    e[0] = ((a % q) + q) % q;
    return e;
  }

  bool is_zero(const Elem& a) const {
    for (long c : a)
      if (c) return false;
    return true;
  }

  long long size() const {
    long long s = 1;
    for (int i = 0; i < L; ++i) s *= q;
    return s;
  }

  // idx in [0, q^L) decoded base q, digit d = coefficient of x^d.
  Elem element(long long idx) const {
    Elem e = zero();
    for (int i = 0; i < L; ++i) {
      e[size_t(i)] = long(idx % q);
      idx /= q;
    }
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (int i = 0; i < L; ++i) out[size_t(i)] = (out[size_t(i)] + b[size_t(i)]) % q;
    return out;
  }

  Elem scale(long s, const Elem& a) const {
    s = ((s % q) + q) % q;
    Elem out = a;
    for (long& c : out) c = (c * s) % q;
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<long> prod(size_t(2 * L - 1), 0);
    for (int i = 0; i < L; ++i) {
      if (!a[size_t(i)]) continue;
      for (int j = 0; j < L; ++j)
        prod[size_t(i + j)] = (prod[size_t(i + j)] + a[size_t(i)] * b[size_t(j)]) % q;
    }
    // reduce modulo the monic modulus
    for (int d = 2 * L - 2; d >= L; --d) {
      long c = prod[size_t(d)];
      if (!c) continue;
      prod[size_t(d)] = 0;
      for (int i = 0; i < L; ++i) {
        size_t pos = size_t(d - L + i);
        prod[pos] = ((prod[pos] - c * modulus[size_t(i)]) % q + q) % q;
      }
    }
    return Elem(prod.begin(), prod.begin() + L);
  }

  Elem pow(Elem a, long long e) const {
    Elem out = one();
    for (; e > 0; e >>= 1) {
      if (e & 1) out = mul(out, a);
      a = mul(a, a);
    }
    return out;
  }

  Elem frobenius(const Elem& a) const { return pow(a, q); }
};

// Lexicographically least monic irreducible of degree L over F_q, found by
// trial division against every monic polynomial of degree in [1, L/2].
// Budget: q^L <= 1e6.
inline ExtField find_irreducible(long q, int L) {
  if (!is_prime(q)) throw std::invalid_argument("find_irreducible: q must be prime");
  if (L < 1) throw std::invalid_argument("find_irreducible: L must be >= 1");
  double sz = std::pow(double(q), L);
  if (sz > 1e6) throw std::invalid_argument("find_irreducible: q^L exceeds the 1e6 budget");

  // Divides candidate (monic, degree L, coeffs lowest-first incl. lead 1)?
  auto divides = [q](const std::vector<long>& div, std::vector<long> rem) {
    int dd = int(div.size()) - 1;
    for (int d = int(rem.size()) - 1; d >= dd; --d) {
      long c = rem[size_t(d)];
      if (!c) continue;
      // div is monic, so the quotient digit is c itself
      for (int i = 0; i <= dd; ++i) {
        size_t pos = size_t(d - dd + i);
        rem[pos] = ((rem[pos] - c * div[size_t(i)]) % q + q) % q;
      }
    }
    for (long c : rem)
      if (c) return false;
    return true;
  };

  long long count = 1;
  for (int i = 0; i < L; ++i) count *= q;  // candidates: q^L lower coefficient vectors
  for (long long idx = 0; idx < count; ++idx) {
    // Lexicographic order on (c_{L-1}, ..., c_1, c_0): idx digits, most
    // significant digit = highest coefficient.
    std::vector<long> cand(size_t(L) + 1, 0);
    cand[size_t(L)] = 1;
    long long rest = idx;
    for (int d = 0; d < L; ++d) {
      cand[size_t(d)] = long(rest % q);
      rest /= q;
    }
    bool reducible = false;
    // enumerate monic divisors of degree 1..L/2
    for (int dd = 1; !reducible && 2 * dd <= L; ++dd) {
      long long dcount = 1;
      for (int i = 0; i < dd; ++i) dcount *= q;
      for (long long didx = 0; didx < dcount && !reducible; ++didx) {
        std::vector<long> div(size_t(dd) + 1, 0);
        div[size_t(dd)] = 1;
        long long drest = didx;
        for (int d = 0; d < dd; ++d) {
          div[size_t(d)] = long(drest % q);
          drest /= q;
        }
        if (divides(div, cand)) reducible = true;
      }
    }
    if (!reducible) {
      ExtField F;
      F.q = q;
      F.L = L;
      F.modulus = cand;
      return F;
    }
  }
  throw std::logic_error("find_irreducible: exhausted candidates");  // unreachable
}

// A twisted-Frobenius instance: explicit permutation (one-line, 0-based)
// and the scalar index k, meaning zeta = g^{(q-1)k/n} for the least
// primitive root g mod q.
struct TwistSpec {
  std::vector<int> w;
  long k = 0;
};

namespace detail {

inline long mod_norm(long long a, long M) { return long(((a % M) + M) % M); }

// Full solution set of e * a = c (mod M) for a | M: e = e0 + j * (M/a),
// j in [0, a).  Solvability (a | c) is a structural invariant of the
// callers, not an input condition.
struct CandidateLine {
  long e0 = 0;
  long step = 1;
  long count = 0;
};

inline CandidateLine solve_cycle(long a, long long c, long M) {
  c = mod_norm(c, M);
  if (M % a != 0 || c % a != 0) throw std::logic_error("solve_cycle: unsolvable relation");
  CandidateLine out;
  out.step = M / a;
  out.e0 = long((c / a) % out.step);
  out.count = a;
  return out;
}

inline long pow_mod(long base, long e, long M) {
  long long out = 1, b = base % M;
  for (; e > 0; e >>= 1) {
    if (e & 1) out = (out * b) % M;
    b = (b * b) % M;
  }
  return long(out);
}

// q^i - 1 as long, guarded.
inline long q_pow_minus_1(long q, int i) {
  long long v = 1;
  for (int j = 0; j < i; ++j) {
    v *= q;
    if (v > (1LL << 40)) throw std::invalid_argument("oracle: q^i exceeds the budget");
  }
  return long(v - 1);
}

struct CycleData {
  std::vector<int> positions;  // along the cycle: a, w(a), w(w(a)), ...
  CandidateLine cand;
};

// Shared enumeration: assign each cycle leader a candidate exponent, derive
// the follower exponents by e_{w(a)} = q e_a + dscalar_a (mod M), and sum
// the per-tuple contributions (0 for rejected tuples).
template <class Contribution>
long long enumerate_tuples(const std::vector<CycleData>& cycles,
                           const std::vector<long long>& dscalar, long q, long M,
                           Contribution&& contribution) {
  long long combos = 1;
  for (const auto& c : cycles) {
    combos *= c.cand.count;
    if (combos > 10'000'000LL)
      throw std::invalid_argument("oracle: candidate combinations exceed the 1e7 budget");
  }
  size_t m = dscalar.size();
  std::vector<long> expo(m, 0);
  std::vector<long> idx(cycles.size(), 0);
  long long total = 0;
  while (true) {
    for (size_t ci = 0; ci < cycles.size(); ++ci) {
      const auto& cyc = cycles[ci];
      long e = mod_norm(cyc.cand.e0 + (long long)idx[ci] * cyc.cand.step, M);
      expo[size_t(cyc.positions[0])] = e;
      for (size_t j = 1; j < cyc.positions.size(); ++j) {
        int prev = cyc.positions[j - 1];
        e = mod_norm((long long)q * e + dscalar[size_t(prev)], M);
        expo[size_t(cyc.positions[j])] = e;
      }
    }
    total += contribution(expo);
    size_t ci = 0;
    while (ci < cycles.size() && ++idx[ci] == cycles[ci].cand.count) idx[ci++] = 0;
    if (ci == cycles.size()) break;
  }
  return total;
}

}  // namespace detail

// Fixed points of the y-twisted Frobenius on T(r, m): coordinates satisfy
// z_{w(a)} = zeta_r^{s_a} z_a^q with per-position scalars s_a, plus the
// torus conditions z_a != 0 and z_a^r != z_b^r.  Needs r | q - 1.
inline long long count_T_twisted(long r, int m, long q, const WreathElement& y) {
  if (!is_prime(q)) throw std::invalid_argument("count_T_twisted: q must be prime");
  if (r < 1 || (q - 1) % r != 0) throw std::invalid_argument("count_T_twisted: need r | q-1");
  if (y.r != r || y.m() != m || y.scalar.size() != y.perm.size())
    throw std::invalid_argument("count_T_twisted: malformed wreath element");
  auto cycles_pos = perm_cycles(y.perm);

  // Container group: every cycle relation z^{q^i-1} = zeta_r^{-c} has its
  // solutions inside mu_{(q^i-1) r}.
  long M = r * (q - 1);
  for (auto& cyc : cycles_pos)
    M = lcm_l(M, r * detail::q_pow_minus_1(q, int(cyc.size())));

  long dzeta = M / r;  // exponent of zeta_r in mu_M
  std::vector<long long> dscalar(size_t(m), 0);
  for (int a = 0; a < m; ++a)
    dscalar[size_t(a)] = (long long)(((y.scalar[size_t(a)] % r) + r) % r) * dzeta;

  std::vector<detail::CycleData> cycles;
  for (auto& cyc : cycles_pos) {
    int i = int(cyc.size());
    long a = detail::q_pow_minus_1(q, i);
    // accumulated scalar along the cycle: c = sum_j s_{a_j} q^{i-1-j}
    long long c = 0;
    for (int pos : cyc) c = detail::mod_norm((long long)q * c + dscalar[size_t(pos)], M);
    detail::CycleData cd;
    cd.positions = cyc;
    cd.cand = detail::solve_cycle(a, -c, M);
    cycles.push_back(std::move(cd));
  }

  return detail::enumerate_tuples(cycles, dscalar, q, M, [&](const std::vector<long>& e) {
    for (size_t a = 0; a < e.size(); ++a)
      for (size_t b = a + 1; b < e.size(); ++b)
        if (detail::mod_norm((long long)r * (e[a] - e[b]), M) == 0) return 0;
    return 1;
  });
}

// Fixed points of the (w, zeta_n^k)-twisted Frobenius on ST(1, n):
// z_{w(a)} = zeta z_a^q, all coordinates distinct and nonzero, product 1.
inline long long count_ST_twisted(long n, long q, const TwistSpec& t) {
  if (!is_prime(q)) throw std::invalid_argument("count_ST_twisted: q must be prime");
  if (n < 1 || int(t.w.size()) != n)
    throw std::invalid_argument("count_ST_twisted: permutation size must be n");
  long k = ((t.k % n) + n) % n;
  if (k != 0 && (q - 1) % n != 0)
    throw std::invalid_argument("count_ST_twisted: need n | q-1 when k != 0");
  auto cycles_pos = perm_cycles(t.w);

  long tg = (k == 0) ? 1 : n;  // safe bound on the scalar orders in play
  long M = tg * (q - 1);
  for (auto& cyc : cycles_pos)
    M = lcm_l(M, tg * detail::q_pow_minus_1(q, int(cyc.size())));

  long long dzeta = (k == 0) ? 0 : (long long)k * (M / n);
  std::vector<long long> dscalar(size_t(n), dzeta);

  std::vector<detail::CycleData> cycles;
  for (auto& cyc : cycles_pos) {
    int i = int(cyc.size());
    long a = detail::q_pow_minus_1(q, i);
    long long c = 0;
    for (int j = 0; j < i; ++j) c = detail::mod_norm((long long)q * c + dzeta, M);
    detail::CycleData cd;
    cd.positions = cyc;
    cd.cand = detail::solve_cycle(a, -c, M);
    cycles.push_back(std::move(cd));
  }

  return detail::enumerate_tuples(cycles, dscalar, q, M, [&](const std::vector<long>& e) {
    long long sum = 0;
    for (size_t a = 0; a < e.size(); ++a) {
      sum += e[a];
      for (size_t b = a + 1; b < e.size(); ++b)
        if (e[a] == e[b]) return 0;
    }
    return detail::mod_norm(sum, M) == 0 ? 1 : 0;
  });
}

// Fixed points of (w, zeta_n^k) on T^(n)(1, m) = {((z_a), z) : z^n = prod z_a}:
// the scalar twists only the covering coordinate z (z^{q-1} = zeta^{-1});
// the z_a are permuted untwisted and must be nonzero and distinct.
inline long long count_Tn1m_twisted(long n, int m, long q, const TwistSpec& t) {
  if (!is_prime(q)) throw std::invalid_argument("count_Tn1m_twisted: q must be prime");
  if (n < 1 || int(t.w.size()) != m)
    throw std::invalid_argument("count_Tn1m_twisted: permutation size must be m");
  long k = ((t.k % n) + n) % n;
  if (k != 0 && (q - 1) % n != 0)
    throw std::invalid_argument("count_Tn1m_twisted: need n | q-1 when k != 0");
  auto cycles_pos = perm_cycles(t.w);

  long M = n * (q - 1);
  for (auto& cyc : cycles_pos)
    M = lcm_l(M, n * detail::q_pow_minus_1(q, int(cyc.size())));

  std::vector<long long> dscalar(size_t(m), 0);
  std::vector<detail::CycleData> cycles;
  for (auto& cyc : cycles_pos) {
    detail::CycleData cd;
    cd.positions = cyc;
    cd.cand = detail::solve_cycle(detail::q_pow_minus_1(q, int(cyc.size())), 0, M);
    cycles.push_back(std::move(cd));
  }

  // Candidates for the covering coordinate: z^{q-1} = zeta^{-k}.
  long long dzeta = (k == 0) ? 0 : (long long)k * (M / n);
  detail::CandidateLine zc = detail::solve_cycle(q - 1, -dzeta, M);

  // Each admissible (z_a) tuple contributes one point per covering z with
  // z^n = prod z_a.
  return detail::enumerate_tuples(cycles, dscalar, q, M, [&](const std::vector<long>& e) {
    long long sum = 0;
    for (size_t a = 0; a < e.size(); ++a) {
      sum += e[a];
      for (size_t b = a + 1; b < e.size(); ++b)
        if (e[a] == e[b]) return 0LL;
    }
    sum = detail::mod_norm(sum, M);
    long long hits = 0;
    for (long j = 0; j < zc.count; ++j) {
      long ez = detail::mod_norm(zc.e0 + (long long)j * zc.step, M);
      if (detail::mod_norm((long long)n * ez - sum, M) == 0) ++hits;
    }
    return hits;
  });
}

// (1/n) sum_k chi(zeta_k)^{-1} count_ST_twisted(n, q, w, k) for a character
// chi of order r | n, computed in Q(zeta_r); the result must be rational.
inline Rat fourier_isotypic(long n, long q, const std::vector<int>& w, long r) {
  if (n < 1 || r < 1 || n % r != 0)
    throw std::invalid_argument("fourier_isotypic: need r | n");
  if ((q - 1) % n != 0) throw std::invalid_argument("fourier_isotypic: need n | q-1");
  CycNum acc(0);
  for (long k = 0; k < n; ++k) {
    TwistSpec t{w, k};
    acc += CycNum::zeta(r, -k) * CycNum(Rat(count_ST_twisted(n, q, t)));
  }
  auto v = cyc_is_rational(acc);
  if (!v) throw std::logic_error("fourier_isotypic: non-rational average");
  return *v / n;
}

}  // namespace treg
