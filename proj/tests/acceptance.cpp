// Acceptance gate: one check per release criterion, one PASS/FAIL line each.
// Exit 0 iff every criterion holds within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "treg/treg.hpp"

using namespace treg;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [exception: ") + e.what() + "]";
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > budget_s) {
    ok = false;
    note += " [over time budget]";
  }
  if (!ok) ++g_failures;
  std::printf("%s %-58s (%.2fs / %.0fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(), dt, budget_s,
              note.c_str());
}

QPoly falling(long from, long step, long count) {
  QPoly out(1);
  for (long j = 0; j < count; ++j) out = out * (QPoly::q() - QPoly(Rat(from + j * step)));
  return out;
}

}  // namespace

int main() {
  criterion("1. identity torus trace is the falling product", 1, [] {
    for (int n = 1; n <= 6; ++n)
      if (trace_T(Partition::ones(n)).to_string() != falling(1, 1, n).to_string()) return false;
    return true;
  });

  criterion("2. identity class of the r-isotypic closed form", 5, [] {
    for (long n = 1; n <= 6; ++n)
      for (long r : divisors(n)) {
        long m = n / r;
        QPoly rhs(Rat(factorial(int(n))) / (pow_int(Int(r), unsigned(m)) * factorial(int(m))));
        if ((n - m) % 2 != 0) rhs = QPoly(-1) * rhs;
        for (long j = 1; j <= m - 1; ++j) rhs = rhs * (QPoly::q() - QPoly(Rat(j * r + 1)));
        if (trace_ST(Partition::ones(int(n)), r) != rhs) return false;
      }
    return true;
  });

  criterion("3. character-specialization route to the product series", 30, [] {
    const std::vector<std::pair<long, long>> pairs = {{2, 2}, {3, 3}, {4, 2}, {4, 4},
                                                      {6, 2}, {6, 3}, {6, 6}};
    for (auto [n, r] : pairs) {
      int N = int(n);
      PSeries direct = p_chi(r, N);
      PSeries via = expand(subst_character(p_wreath(n, N), n, n / r), N, n);
      if (!via.is_rational() || !(direct == via)) return false;
    }
    return true;
  });

  criterion("4. induction-substitution route to the product series", 60, [] {
    for (long r : {1L, 2L, 3L, 4L, 6L})
      if (p_chi(r, r == 6 ? 6 : 8) != p_prime(r, r == 6 ? 6 : 8)) return false;
    return true;
  });

  criterion("5. covering identity and the induction theorem", 60, [] {
    for (int m = 1; m <= 6; ++m)
      for (long r : divisors(m))
        if (!verify_pcor(r, m).pass) return false;
    for (long n = 1; n <= 6; ++n)
      for (long r : divisors(n))
        for (int j = 0; j <= int(n) - 1; ++j)
          if (!verify_induction(n, r, j).pass) return false;
    return true;
  });

  criterion("6. faithful top-degree piece is the twisted cyclic induction", 5, [] {
    for (long n = 2; n <= 6; ++n) {
      if (!class_fn_equal(isotypic_character(n, n, int(n) - 1), tensor_sign(ind_cyclic(n, 1))))
        return false;
      auto dim = cyc_is_rational(isotypic_character(n, n, int(n) - 1)(Partition::ones(int(n))));
      if (!dim || *dim != Rat(factorial(int(n) - 1))) return false;
      for (int j = 0; j + 1 < int(n); ++j) {
        ClassFunction z = isotypic_character(n, n, j);
        for (const Partition& lam : partitions(int(n)))
          if (!(z(lam) == CycNum(0))) return false;
      }
    }
    return true;
  });

  criterion("7. finite-field counts match every polynomial prediction", 300, [] {
    if (count_ST_twisted(3, 7, {{0, 1, 2}, 0}) != 24) return false;
    if (trace_ST_total(Partition::ones(3)).eval(7) != Rat(24)) return false;
    for (long n : {2L, 3L, 4L})
      for (long q : {5L, 7L, 13L}) {
        if ((q - 1) % n != 0) continue;
        for (const Partition& w : partitions(int(n))) {
          std::vector<int> perm = canonical_perm(w);
          for (long k = 0; k < n; ++k) {
            Rat pred = 0;
            for (long r : divisors(n)) {
              CycNum c(0);
              for (long j = 0; j < r; ++j)
                if (std::gcd(j, r) == 1) c += CycNum::zeta(r, j * k);
              pred += cyc_is_rational(c).value() * trace_ST(w, r).eval(q);
            }
            if (Rat(count_ST_twisted(n, q, {perm, k})) != pred) return false;
          }
          if (count_ST_twisted(n, q, {perm, 0}) != trace_ST_total(w).eval(q)) return false;
          for (long r : divisors(n))
            if (fourier_isotypic(n, q, perm, r) != trace_ST(w, r).eval(q)) return false;
        }
      }
    return true;
  });

  criterion("8. integral nonnegative decompositions, exact divisions", 30, [] {
    for (long n = 1; n <= 6; ++n)
      for (long r : divisors(n)) {
        for (int j = 0; j <= int(n) - 1; ++j)
          for (auto& [nu, c] : decompose(isotypic_character(n, r, j)))
            if (!is_integer(c) || c < 0) return false;
        for (const Partition& w : partitions(int(n)))
          if (!trace_ST(w, r).integer_coeffs()) return false;
      }
    for (int m = 1; m <= 6; ++m)
      for (const Partition& w : partitions(m))
        if (!trace_ST_total(w).integer_coeffs() || !trace_PT(1, WreathClass(1, w)).integer_coeffs())
          return false;
    return true;
  });

  criterion("9. closed coefficient forms match direct expansion", 10, [] {
    for (long r = 1; r <= 6; ++r)
      for (long i = 1; i <= 6; ++i) {
        if (std::gcd(r, i) != 1) continue;
        for (long a = 1; a <= 8; ++a) {
          PSeries s = expand(p_factor(r, i), int(i * a), 1);
          if (s.coeff(Partition(std::vector<int>(size_t(a), int(i)))).to_qpoly() !=
              coeff_coprime(r, i, a))
            return false;
        }
      }
    for (long i = 2; i <= 6; i += 2)
      for (long a = 1; a <= 8; ++a) {
        PSeries s = expand(p_factor(2, i), int(i * a), 1);
        if (s.coeff(Partition(std::vector<int>(size_t(a), int(i)))).to_qpoly() !=
            coeff_r2_even(i, a))
          return false;
      }
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria hold\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
