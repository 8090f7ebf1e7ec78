#include <catch2/catch_amalgamated.hpp>

#include "treg/formulas.hpp"
#include "treg/oracle.hpp"

using namespace treg;

namespace {

using Elem = ExtField::Elem;

std::vector<Elem> nonzero_elements(const ExtField& F) {
  long long total = 1;
  for (int i = 0; i < F.L; ++i) total *= F.q;
  std::vector<Elem> out;
  for (long long idx = 1; idx < total; ++idx) out.push_back(F.element(idx));
  return out;
}

// zeta_r as a base-field element, r | q-1
Elem zeta_elem(const ExtField& F, long r) {
  PrimeField base{F.q};
  return F.from_base(base.pow(base.primitive_root(), (F.q - 1) / r));
}

long containing_degree(long q, long M) { return mult_order(q, M); }

// Ground-truth twisted counts by full field scans: every coordinate of a
// fixed tuple lies in mu_M, so all solutions live in F_{q^L}, L = ord_M(q).
// Solutions are enumerated per cycle by scanning the whole multiplicative
// group against the cycle-closure equation, then combined by odometer.
// No congruences anywhere: this is the independent check on the fast oracle.

struct CycleScan {
  std::vector<int> positions;
  std::vector<Elem> leaders;
};

template <class Twist, class Accept>
long long brute_scan(long q, long M, const std::vector<std::vector<int>>& cycles, Twist zeta_at,
                     Accept accept, int m) {
  long L = containing_degree(q, M);
  ExtField F = find_irreducible(q, int(L));
  std::vector<Elem> units = nonzero_elements(F);

  std::vector<CycleScan> scans;
  for (const auto& cyc : cycles) {
    CycleScan s;
    s.positions = cyc;
    for (const Elem& z : units) {
      // propagate z around the cycle; keep it if the orbit closes up
      Elem cur = z;
      for (size_t j = 0; j < cyc.size(); ++j) cur = F.mul(zeta_at(cyc[j]), F.pow(cur, F.q));
      if (cur == z) s.leaders.push_back(z);
    }
    if (s.leaders.empty()) return 0;
    scans.push_back(std::move(s));
  }

  std::vector<size_t> pick(scans.size(), 0);
  std::vector<Elem> tuple(static_cast<size_t>(m));
  long long total = 0;
  while (true) {
    for (size_t c = 0; c < scans.size(); ++c) {
      Elem cur = scans[c].leaders[pick[c]];
      for (size_t j = 0; j < scans[c].positions.size(); ++j) {
        tuple[size_t(scans[c].positions[j])] = cur;
        cur = F.mul(zeta_at(scans[c].positions[j]), F.pow(cur, F.q));
      }
    }
    total += accept(F, tuple);
    size_t c = 0;
    while (c < scans.size() && ++pick[c] == scans[c].leaders.size()) pick[c++] = 0;
    if (c == scans.size()) break;
  }
  return total;
}

long long brute_count_T(long r, int m, long q, const WreathElement& y) {
  long M = r * (q - 1);
  for (const auto& cyc : perm_cycles(y.perm)) {
    long qi = 1;
    for (size_t j = 0; j < cyc.size(); ++j) qi *= q;
    M = lcm_l(M, r * (qi - 1));
  }
  long L = containing_degree(q, M);
  ExtField F0 = find_irreducible(q, int(L));
  Elem zr = zeta_elem(F0, r);
  auto zeta_at = [&](int a) { return F0.pow(zr, y.scalar[size_t(a)]); };
  auto accept = [&](const ExtField& F, const std::vector<Elem>& z) -> long long {
    for (size_t a = 0; a < z.size(); ++a)
      for (size_t b = a + 1; b < z.size(); ++b)
        if (F.pow(z[a], r) == F.pow(z[b], r)) return 0;
    return 1;
  };
  return brute_scan(q, M, perm_cycles(y.perm), zeta_at, accept, m);
}

long long brute_count_ST(long n, long q, const std::vector<int>& w, long k) {
  long tg = (k % n == 0) ? 1 : n;
  long M = tg * (q - 1);
  for (const auto& cyc : perm_cycles(w)) {
    long qi = 1;
    for (size_t j = 0; j < cyc.size(); ++j) qi *= q;
    M = lcm_l(M, tg * (qi - 1));
  }
  long L = containing_degree(q, M);
  ExtField F0 = find_irreducible(q, int(L));
  Elem zk = F0.pow(zeta_elem(F0, n), ((k % n) + n) % n);
  auto zeta_at = [&](int) { return zk; };
  auto accept = [&](const ExtField& F, const std::vector<Elem>& z) -> long long {
    for (size_t a = 0; a < z.size(); ++a)
      for (size_t b = a + 1; b < z.size(); ++b)
        if (z[a] == z[b]) return 0;
    Elem prod = F.one();
    for (const Elem& za : z) prod = F.mul(prod, za);
    return prod == F.one() ? 1 : 0;
  };
  return brute_scan(q, M, perm_cycles(w), zeta_at, accept, int(n));
}

long long brute_count_Tn1m(long n, int m, long q, const std::vector<int>& w, long k) {
  long M = n * (q - 1);
  for (const auto& cyc : perm_cycles(w)) {
    long qi = 1;
    for (size_t j = 0; j < cyc.size(); ++j) qi *= q;
    M = lcm_l(M, n * (qi - 1));
  }
  long L = containing_degree(q, M);
  ExtField F0 = find_irreducible(q, int(L));
  // covering coordinate candidates: z = zeta^k z^q
  Elem zk = F0.pow(zeta_elem(F0, n), ((k % n) + n) % n);
  std::vector<Elem> covers;
  for (const Elem& z : nonzero_elements(F0))
    if (F0.mul(zk, F0.pow(z, q)) == z) covers.push_back(z);

  auto zeta_at = [&](int) { return F0.one(); };  // the z_a are untwisted
  auto accept = [&](const ExtField& F, const std::vector<Elem>& z) -> long long {
    for (size_t a = 0; a < z.size(); ++a)
      for (size_t b = a + 1; b < z.size(); ++b)
        if (z[a] == z[b]) return 0;
    Elem prod = F.one();
    for (const Elem& za : z) prod = F.mul(prod, za);
    long long hits = 0;
    for (const Elem& zc : covers)
      if (F.pow(zc, n) == prod) ++hits;
    return hits;
  };
  return brute_scan(q, M, perm_cycles(w), zeta_at, accept, m);
}

}  // namespace

TEST_CASE("prime field arithmetic", "[oracle]") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));

  PrimeField F{7};
  CHECK(F.primitive_root() == 3);
  CHECK(PrimeField{5}.primitive_root() == 2);
  CHECK(F.mul(F.inv(4), 4) == 1);
  CHECK(F.pow(3, 6) == 1);
  CHECK_THROWS_AS(PrimeField{6}, std::invalid_argument);
}

TEST_CASE("extension fields and irreducible moduli", "[oracle]") {
  CHECK(find_irreducible(5, 1).modulus == std::vector<long>{0, 1});
  CHECK(find_irreducible(3, 2).modulus == std::vector<long>{1, 0, 1});
  CHECK(find_irreducible(2, 3).modulus == std::vector<long>{1, 1, 0, 1});
  CHECK_THROWS_AS(find_irreducible(11, 7), std::invalid_argument);

  // no roots in the base field for degree <= 3 moduli = irreducibility
  for (auto [q, L] : std::vector<std::pair<long, int>>{{3, 2}, {2, 3}, {5, 2}, {7, 3}}) {
    ExtField F = find_irreducible(q, L);
    for (long x = 0; x < q; ++x) {
      long v = 0, xp = 1;
      for (long c : F.modulus) {
        v = (v + c * xp) % q;
        xp = (xp * x) % q;
      }
      CHECK(v != 0);
    }
  }

  // field sanity in F_8: frobenius is additive and x^8 = x for all x
  ExtField F = find_irreducible(2, 3);
  for (long long i = 0; i < 8; ++i) {
    Elem a = F.element(i);
    CHECK(F.pow(a, 8) == a);
    for (long long j = 0; j < 8; ++j) {
      Elem b = F.element(j);
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      CHECK(F.mul(a, b) == F.mul(b, a));
    }
  }
}

TEST_CASE("torus point counts against full scans", "[oracle]") {
  // plain torus, no twist vs a transposition twist
  WreathElement id2{1, {0, 1}, {0, 0}};
  WreathElement sw2{1, {1, 0}, {0, 0}};
  CHECK(count_T_twisted(1, 2, 5, id2) == 12);  // (q-1)(q-2)
  CHECK(count_T_twisted(1, 2, 5, sw2) == 20);  // q^2 - q
  CHECK(brute_count_T(1, 2, 5, id2) == 12);
  CHECK(brute_count_T(1, 2, 5, sw2) == 20);

  // scalar colors, single coordinate: R_{2,1,theta} = q - 1 for both colors
  WreathElement plain{2, {0}, {0}};
  WreathElement tw{2, {0}, {1}};
  CHECK(count_T_twisted(2, 1, 5, plain) == 4);
  CHECK(count_T_twisted(2, 1, 5, tw) == 4);
  CHECK(brute_count_T(2, 1, 5, plain) == 4);
  CHECK(brute_count_T(2, 1, 5, tw) == 4);

  // all wreath classes of W(2, 2) and W(3, 1), model vs scan vs polynomial
  for (long r : {2L, 3L}) {
    long q = (r == 2) ? 5 : 7;
    int m = (r == 2) ? 2 : 1;
    std::vector<WreathElement> elems;
    if (m == 1)
      for (long s = 0; s < r; ++s) elems.push_back({r, {0}, {s}});
    else
      for (long s0 = 0; s0 < r; ++s0)
        for (long s1 = 0; s1 < r; ++s1) {
          elems.push_back({r, {0, 1}, {s0, s1}});
          elems.push_back({r, {1, 0}, {s0, s1}});
        }
    for (const WreathElement& y : elems) {
      long long fast = count_T_twisted(r, m, q, y);
      CHECK(fast == brute_count_T(r, m, q, y));
      CHECK(Rat(fast) == trace_T(r, class_of(y)).eval(q));
    }
  }
}

TEST_CASE("determinant-one point counts against full scans", "[oracle]") {
  CHECK(count_ST_twisted(3, 7, {{0, 1, 2}, 0}) == 24);
  CHECK(count_ST_twisted(2, 5, {{0, 1}, 0}) == 2);  // q - 3

  for (long k = 0; k < 2; ++k) {
    CHECK(count_ST_twisted(2, 5, {{0, 1}, k}) == brute_count_ST(2, 5, {0, 1}, k));
    CHECK(count_ST_twisted(2, 5, {{1, 0}, k}) == brute_count_ST(2, 5, {1, 0}, k));
    CHECK(count_ST_twisted(2, 13, {{0, 1}, k}) == brute_count_ST(2, 13, {0, 1}, k));
  }
  for (long k = 0; k < 3; ++k)
    CHECK(count_ST_twisted(3, 7, {{0, 1, 2}, k}) == brute_count_ST(3, 7, {0, 1, 2}, k));

  // twist index only matters through gcd(k, n)
  CHECK(count_ST_twisted(3, 7, {{0, 1, 2}, 1}) == count_ST_twisted(3, 7, {{0, 1, 2}, 2}));
  CHECK(count_ST_twisted(4, 13, {{1, 2, 3, 0}, 1}) == count_ST_twisted(4, 13, {{1, 2, 3, 0}, 3}));

  CHECK_THROWS_AS(count_ST_twisted(3, 5, {{0, 1, 2}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(count_ST_twisted(4, 4, {{0, 1, 2, 3}, 0}), std::invalid_argument);
}

TEST_CASE("covering-torus point counts against full scans", "[oracle]") {
  // raw counts at n = 2, m = 1, q = 5: four points in each twist sector
  CHECK(count_Tn1m_twisted(2, 1, 5, {{0}, 0}) == 4);
  CHECK(count_Tn1m_twisted(2, 1, 5, {{0}, 1}) == 4);
  CHECK(brute_count_Tn1m(2, 1, 5, {0}, 0) == 4);
  CHECK(brute_count_Tn1m(2, 1, 5, {0}, 1) == 4);
  // their Fourier aggregates: 8 in the trivial sector, 0 in the signed one
  CHECK(count_Tn1m_twisted(2, 1, 5, {{0}, 0}) + count_Tn1m_twisted(2, 1, 5, {{0}, 1}) == 8);
  CHECK(count_Tn1m_twisted(2, 1, 5, {{0}, 0}) - count_Tn1m_twisted(2, 1, 5, {{0}, 1}) == 0);

  // m = n = 2: (q-1)(q-3) at the trivial twist
  CHECK(count_Tn1m_twisted(2, 2, 5, {{0, 1}, 0}) == 8);
  for (long k = 0; k < 2; ++k) {
    CHECK(count_Tn1m_twisted(2, 2, 5, {{0, 1}, k}) == brute_count_Tn1m(2, 2, 5, {0, 1}, k));
    CHECK(count_Tn1m_twisted(2, 2, 5, {{1, 0}, k}) == brute_count_Tn1m(2, 2, 5, {1, 0}, k));
  }

  // Fourier inversion ties the covering counts to the series formula
  for (long k = 0; k < 2; ++k)
    for (const Partition& w : partitions(2)) {
      QPoly pred(0);
      for (long d : divisors(2)) {
        CycNum c(0);
        for (long j = 0; j < d; ++j)
          if (std::gcd(j, d) == 1) c += CycNum::zeta(d, j * k);
        pred = pred + QPoly(cyc_is_rational(c).value()) * trace_Tn1m(w, d);
      }
      CHECK(Rat(count_Tn1m_twisted(2, 2, 5, {canonical_perm(w), k})) == pred.eval(5));
    }
}

TEST_CASE("isotypic averages from counts", "[oracle]") {
  CHECK(fourier_isotypic(2, 5, {0, 1}, 1) == Rat(3));
  CHECK(fourier_isotypic(2, 5, {0, 1}, 2) == Rat(-1));
  CHECK(fourier_isotypic(3, 7, {0, 1, 2}, 3) == Rat(2));

  // counts decompose through Ramanujan sums: count(k) = sum_r c_r(k) trace_r
  for (long n : {2L, 3L, 4L}) {
    long q = (n == 3) ? 7 : 5;
    if ((q - 1) % n != 0) q = 13;
    for (const Partition& w : partitions(int(n)))
      for (long k = 0; k < n; ++k) {
        Rat pred = 0;
        for (long r : divisors(n)) {
          CycNum c(0);
          for (long j = 0; j < r; ++j)
            if (std::gcd(j, r) == 1) c += CycNum::zeta(r, j * k);
          pred += cyc_is_rational(c).value() * trace_ST(w, r).eval(q);
        }
        CHECK(Rat(count_ST_twisted(n, q, {canonical_perm(w), k})) == pred);
      }
  }

  CHECK_THROWS_AS(fourier_isotypic(4, 7, {0, 1, 2, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(fourier_isotypic(4, 13, {0, 1, 2, 3}, 3), std::invalid_argument);
}
