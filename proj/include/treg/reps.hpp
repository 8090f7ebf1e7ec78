#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/formulas.hpp"

namespace treg {

// Character tables are exact but the partition count grows fast; keep a
// hard guard so a typo cannot wander into hour-long recursions.
inline constexpr int kCharTableMaxN = 10;

// Irreducible character table of S_n, chi[{mu, lambda}] = chi^mu(lambda),
// computed by the Murnaghan-Nakayama rule on beta-sets.
struct CharTable {
  int n = 0;
  std::vector<Partition> labels;  // irreducible labels = partitions of n
  std::map<std::pair<Partition, Partition>, Int> chi;

  const Int& operator()(const Partition& mu, const Partition& lambda) const {
    auto it = chi.find({mu, lambda});
    if (it == chi.end()) throw std::invalid_argument("CharTable: unknown pair");
    return it->second;
  }
};

namespace detail {

// One Murnaghan-Nakayama step: strip a border strip of length l from mu in
// every possible way; recurse on the rest of lambda.
inline Int mn_value(const std::vector<int>& mu, const std::vector<int>& lam, size_t li,
                    std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (li == lam.size()) return mu.empty() ? Int(1) : Int(0);
  std::vector<int> lam_rest(lam.begin() + long(li), lam.end());
  auto key = std::make_pair(mu, lam_rest);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int l = lam[li];
  size_t L = mu.size();
  std::vector<long> beta(L);
  for (size_t i = 0; i < L; ++i) beta[i] = mu[i] + long(L - 1 - i);  // strictly decreasing

  Int total = 0;
  for (size_t j = 0; j < L; ++j) {
    long nb = beta[j] - l;
    if (nb < 0) continue;
    bool clash = false;
    int height = 0;
    for (size_t t = 0; t < L; ++t) {
      if (t == j) continue;
      if (beta[t] == nb) clash = true;
      if (beta[t] > nb && beta[t] < beta[j]) ++height;
    }
    if (clash) continue;
    std::vector<long> nbeta = beta;
    nbeta[j] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<long>());
    std::vector<int> nmu;
    for (size_t i = 0; i < L; ++i) {
      long part = nbeta[i] - long(L - 1 - i);
      if (part > 0) nmu.push_back(int(part));
    }
    Int sub = mn_value(nmu, lam, li + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

inline CharTable sn_character_table(int n) {
  if (n < 1 || n > kCharTableMaxN)
    throw std::invalid_argument("sn_character_table: n out of range [1, " +
                                std::to_string(kCharTableMaxN) + "]");
  CharTable T;
  T.n = n;
  T.labels = partitions(n);
  std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  for (const Partition& mu : T.labels)
    for (const Partition& lam : T.labels)
      T.chi[{mu, lam}] = detail::mn_value(mu.parts(), lam.parts(), 0, memo);
  return T;
}

// Class function on S_n; missing classes read as zero.
template <class V>
struct ClassFn {
  int n = 0;
  std::map<Partition, V> val;

  V operator()(const Partition& lambda) const {
    auto it = val.find(lambda);
    return it == val.end() ? V() : it->second;
  }
};

using ClassFunction = ClassFn<CycNum>;

// Class function on the wreath product W(r, m).
template <class V>
struct WreathClassFn {
  long r = 1;
  int m = 0;
  std::map<WreathClass, V> val;

  V operator()(const WreathClass& y) const {
    auto it = val.find(y);
    return it == val.end() ? V() : it->second;
  }
};

template <class V>
bool class_fn_equal(const ClassFn<V>& a, const ClassFn<V>& b) {
  if (a.n != b.n) return false;
  for (const Partition& lam : partitions(a.n))
    if (a(lam) != b(lam)) return false;
  return true;
}

// Sign character of S_n at lambda: (-1)^{n - #parts}.
inline int sign_character(const Partition& lambda) {
  return ((lambda.weight() - lambda.length()) % 2 == 0) ? 1 : -1;
}

template <class V>
ClassFn<V> tensor_sign(const ClassFn<V>& f) {
  ClassFn<V> out;
  out.n = f.n;
  for (auto& [lam, v] : f.val) out.val[lam] = Rat(sign_character(lam)) * v;
  return out;
}

// Multiplicity of each irreducible in f via the class inner product
// <f, chi^mu> = sum_lambda f(lambda) chi^mu(lambda) / z_lambda.  The inputs
// of interest are rational-valued; an irrational multiplicity means a
// broken identity upstream.
inline std::map<Partition, Rat> decompose(const ClassFunction& f) {
  CharTable T = sn_character_table(f.n);
  std::map<Partition, Rat> out;
  for (const Partition& mu : T.labels) {
    CycNum acc(0);
    for (const Partition& lam : T.labels)
      acc += f(lam) * CycNum(Rat(T(mu, lam), z_lambda(lam)));
    auto r = cyc_is_rational(acc);
    if (!r) throw std::logic_error("decompose: irrational multiplicity at " + mu.to_string());
    out[mu] = *r;
  }
  return out;
}

/*
 * Poincare duality extraction.  For a smooth affine X of dimension d with
 * weight polynomial P(g, X, q) = sum_i (-1)^i tr(g, H^i_c) q^{i-d}, the
 * ordinary cohomology traces are tr(g, H^j(X)) = (-1)^j [q^{d-j}] P(g^{-1}).
 * On S_n classes g^{-1} is conjugate to g; on wreath classes it is not, so
 * the wreath variant evaluates at the inverse class.
 */
inline ClassFunction pd_extract(const ClassFn<QPoly>& P, int d, int j) {
  ClassFunction out;
  out.n = P.n;
  for (auto& [lam, p] : P.val) {
    Rat c = p.coeff(d - j);
    if (j % 2 != 0) c = -c;
    if (c != 0) out.val[lam] = CycNum(c);
  }
  return out;
}

inline WreathClassFn<CycNum> pd_extract_wreath(const WreathClassFn<QPoly>& P, int d, int j) {
  WreathClassFn<CycNum> out;
  out.r = P.r;
  out.m = P.m;
  for (const WreathClass& y : wreath_classes(P.r, P.m)) {
    Rat c = P(y.inverse()).coeff(d - j);
    if (j % 2 != 0) c = -c;
    if (c != 0) out.val[y] = CycNum(c);
  }
  return out;
}

// Induction of class functions along W(r, m) -> S_{rm} by class fusion:
// (Ind f)(lambda) = z_lambda * sum_{y : fused(y) = lambda} f(y) / z_W(y).
template <class V>
ClassFn<V> induce_wreath(const WreathClassFn<V>& f) {
  ClassFn<V> out;
  out.n = int(f.r) * f.m;
  std::map<Partition, V> sums;
  for (auto& [y, v] : f.val) {
    Partition lam = y.fused_type();
    auto it = sums.find(lam);
    V term = Rat(1, y.centralizer()) * v;
    if (it == sums.end())
      sums.emplace(lam, term);
    else
      it->second += term;
  }
  for (auto& [lam, v] : sums) {
    V scaled = Rat(z_lambda(lam)) * v;
    if (!(scaled == V())) out.val[lam] = scaled;
  }
  return out;
}

// Per-cycle factor of (sign of S_{rm} restricted to W(r, m)) tensor
// det^{+-1}: a colored cycle (i, zeta_r^k) contributes
// (-1)^{i-1} (-1)^{ir - r/t} zeta_r^{+-k}, t = order of zeta_r^k.
inline CycNum twist_factor(long r, int i, int k, bool det_inverse) {
  long t = r / std::gcd(long(k), r);
  long s = (i - 1) + i * r - r / t;
  CycNum out = CycNum::zeta(r, det_inverse ? -long(k) : long(k));
  return (s % 2 == 0) ? out : -out;
}

// Ind_{W(r,m)}^{S_{rm}} (sign . det^{+-1} . f), with the sign of the big
// symmetric group folded in cycle by cycle.
inline ClassFn<CPoly> twisted_induce(const WreathClassFn<CPoly>& f, bool det_inverse) {
  WreathClassFn<CPoly> g;
  g.r = f.r;
  g.m = f.m;
  for (auto& [y, v] : f.val) {
    CycNum factor(1);
    for (auto& [ik, a] : y.cycles())
      factor *= twist_factor(f.r, ik.first, ik.second, det_inverse).pow(a);
    CPoly tv = factor * v.embed(lcm_l(v.order(), f.r));
    if (!tv.is_zero()) g.val[y] = tv;
  }
  return induce_wreath(g);
}

// Induction of the character zeta -> zeta^k of the cyclic group generated
// by an n-cycle up to S_n.  Supported on classes (d^{n/d}); there the value
// is (z_lambda / n) * sum over the j in [0, n) of order-d image.
inline ClassFunction ind_cyclic(long n, long k) {
  if (n < 1) throw std::invalid_argument("ind_cyclic: need n >= 1");
  ClassFunction out;
  out.n = int(n);
  for (long d : divisors(n)) {
    Partition lam(std::vector<int>(size_t(n / d), int(d)));
    CycNum acc(0);
    for (long j = 0; j < n; ++j)
      if (n / std::gcd(j, n) == d) acc += CycNum::zeta(n, k * j);
    CycNum v = CycNum(Rat(z_lambda(lam), n)) * acc;
    auto r = cyc_is_rational(v);
    if (r)
      v = CycNum(*r);  // Ramanujan sums are integers; keep the tag small
    if (!v.is_zero()) out.val[lam] = v;
  }
  return out;
}

// Character of S_n on the chi-isotypic part of H^j(ST(1, n)), chi of order
// r | n, extracted from the weight polynomial by Poincare duality
// (dim ST(1, n) = n - 1).
inline ClassFunction isotypic_character(long n, long r, int j) {
  if (n < 1 || r < 1 || n % r != 0)
    throw std::invalid_argument("isotypic_character: need r | n");
  ClassFn<QPoly> P;
  P.n = int(n);
  for (const Partition& lam : partitions(int(n))) {
    QPoly t = trace_ST(lam, r);
    if (!t.is_zero()) P.val[lam] = t;
  }
  return pd_extract(P, int(n) - 1, j);
}

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

// Checks, class by class, that the order-r weight polynomial of
// T^(n)(1, m) is induced from the r-fold torus cover:
//   trace_Tn1m(., r) = (-1)^{m - m/r} Ind_{W(r,m/r)}^{S_m}(sign.det^{-1}.trace_T).
inline VerifyReport verify_pcor(long r, int m) {
  if (r < 1 || m < 1 || m % r != 0)
    throw std::invalid_argument("verify_pcor: need r | m");
  int mp = int(m / r);
  WreathClassFn<CPoly> h;
  h.r = r;
  h.m = mp;
  for (const WreathClass& y : wreath_classes(r, mp)) h.val[y] = CPoly(trace_T(r, y), r);
  ClassFn<CPoly> ind = twisted_induce(h, /*det_inverse=*/true);
  Rat outer(((m - mp) % 2 == 0) ? 1 : -1);
  VerifyReport rep;
  for (const Partition& kappa : partitions(m)) {
    QPoly lhs = trace_Tn1m(kappa, r);
    QPoly rhs = (outer * ind(kappa)).to_qpoly();
    rep.check(lhs == rhs, "pcor r=" + std::to_string(r) + " m=" + std::to_string(m) + " at " +
                              kappa.to_string() + ": " + lhs.to_string() + " vs " +
                              rhs.to_string());
  }
  return rep;
}

// Checks the cohomological induction theorem in degree j: the chi-isotypic
// character of H^j(ST(1, n)) (chi of order r) against
// sign . Ind_{W(r, n/r)}^{S_n}(det . H^{j'}(PT(r, n/r))), j' = j - n + n/r,
// including the forced vanishing outside 0 <= j' <= n/r - 1.
inline VerifyReport verify_induction(long n, long r, int j) {
  if (n < 1 || r < 1 || n % r != 0)
    throw std::invalid_argument("verify_induction: need r | n");
  int mp = int(n / r);
  ClassFunction lhs = isotypic_character(n, r, j);
  ClassFunction rhs;
  rhs.n = int(n);
  int jp = j - int(n) + mp;
  if (jp >= 0 && jp <= mp - 1) {
    WreathClassFn<QPoly> P;
    P.r = r;
    P.m = mp;
    for (const WreathClass& y : wreath_classes(r, mp)) {
      QPoly t = trace_PT(r, y);
      if (!t.is_zero()) P.val[y] = t;
    }
    WreathClassFn<CycNum> hj = pd_extract_wreath(P, mp - 1, jp);
    WreathClassFn<CPoly> hc;
    hc.r = r;
    hc.m = mp;
    for (auto& [y, v] : hj.val) hc.val[y] = CPoly(v);
    ClassFn<CPoly> ind = twisted_induce(hc, /*det_inverse=*/false);
    for (const Partition& lam : partitions(int(n))) {
      CPoly v = ind(lam);
      if (v.is_zero()) continue;
      if (v.degree() > 0) throw std::logic_error("verify_induction: non-constant induced value");
      rhs.val[lam] = v.coeff(0);
    }
  }
  VerifyReport rep;
  for (const Partition& lam : partitions(int(n))) {
    CycNum a = lhs(lam), b = rhs(lam);
    rep.check(a == b, "induction n=" + std::to_string(n) + " r=" + std::to_string(r) +
                          " j=" + std::to_string(j) + " at " + lam.to_string() + ": " +
                          a.to_string() + " vs " + b.to_string());
  }
  return rep;
}

}  // namespace treg
