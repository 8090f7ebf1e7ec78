#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/arith.hpp"
#include "treg/rat.hpp"

namespace treg {

// Integer partition, parts weakly decreasing and positive.  The empty
// partition (of 0) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  }

  static Partition ones(int n) { return Partition(std::vector<int>(size_t(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return int(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Multiplicity of i as a part.
  int mult(int i) const {
    return int(std::count(parts_.begin(), parts_.end(), i));
  }

  // part -> multiplicity, increasing parts.
  std::map<int, int> mult_map() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  // this with `count` extra parts equal to `part`.
  Partition with_parts(int part, int count) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), size_t(count), part);
    return Partition(std::move(v));
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  std::string to_string() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n, largest-part-first (reverse lexicographic):
// partitions(3) = [(3), (2,1), (1,1,1)].
inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxp) -> void {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Centralizer order of the class lambda in S_n: prod_i a_i! * i^{a_i}.
inline Int z_lambda(const Partition& lambda) {
  Int z = 1;
  for (auto [i, a] : lambda.mult_map()) z *= factorial(a) * pow_int(Int(i), unsigned(a));
  return z;
}

/*
 * Conjugacy classes of the wreath product W(r, m) = mu_r wr S_m are indexed
 * by multisets of colored cycles (i, k): cycle length i >= 1 and the class
 * in mu_r of the product of the cycle's scalars, recorded as the exponent
 * k in [0, r).  Plain S_m classes are the r = 1 case.
 */
class WreathClass {
 public:
  explicit WreathClass(long r) : r_(r) {
    if (r < 1) throw std::invalid_argument("WreathClass: r must be >= 1");
  }

  // Plain partition as an r = 1 (or all-scalars-trivial) class.
  WreathClass(long r, const Partition& lambda) : WreathClass(r) {
    for (auto [i, a] : lambda.mult_map()) mult_[{i, 0}] = a;
  }

  long r() const { return r_; }
  int weight() const {
    int w = 0;
    for (auto& [ik, a] : mult_) w += ik.first * a;
    return w;
  }

  // (cycle length, scalar exponent) -> multiplicity, all multiplicities >= 1.
  const std::map<std::pair<int, int>, int>& cycles() const { return mult_; }

  void add_cycle(int i, long k, int count = 1) {
    if (i < 1 || count < 1) throw std::invalid_argument("WreathClass::add_cycle: bad cycle");
    mult_[{i, int(((k % r_) + r_) % r_)}] += count;
  }

  // Centralizer order in W(r, m): prod a! * (r*i)^a over colored cycles.
  Int centralizer() const {
    Int z = 1;
    for (auto& [ik, a] : mult_) z *= factorial(a) * pow_int(Int(r_ * ik.first), unsigned(a));
    return z;
  }

  // Cycle type of the image in S_{r * weight} under the natural embedding
  // (each colored cycle (i, k) acts on r*i points): with t the order of
  // zeta_r^k, it splits into r/t cycles of length i*t.
  Partition fused_type() const {
    std::vector<int> parts;
    for (auto& [ik, a] : mult_) {
      long t = r_ / std::gcd(long(ik.second), r_);  // order of zeta_r^k
      parts.insert(parts.end(), size_t(a) * size_t(r_ / t), int(ik.first * t));
    }
    return Partition(std::move(parts));
  }

  // Class of the inverse element: scalar exponents negate.
  WreathClass inverse() const {
    WreathClass inv(r_);
    for (auto& [ik, a] : mult_) inv.mult_[{ik.first, int((r_ - ik.second) % r_)}] += a;
    return inv;
  }

  bool operator==(const WreathClass& o) const { return r_ == o.r_ && mult_ == o.mult_; }
  bool operator<(const WreathClass& o) const {
    return std::tie(r_, mult_) < std::tie(o.r_, o.mult_);
  }

  std::string to_string() const {
    if (mult_.empty()) return "()";
    std::string s;
    for (auto& [ik, a] : mult_) {
      s += "(" + std::to_string(ik.first) + "," + std::to_string(ik.second) + ")";
      if (a > 1) s += "^" + std::to_string(a);
    }
    return s;
  }

 private:
  long r_;
  std::map<std::pair<int, int>, int> mult_;
};

// All classes of W(r, m), deterministic order.
inline std::vector<WreathClass> wreath_classes(long r, int m) {
  if (r < 1 || m < 0) throw std::invalid_argument("wreath_classes: need r >= 1, m >= 0");
  // Colored parts in a fixed order: length descending, then color ascending.
  std::vector<std::pair<int, int>> alphabet;
  for (int i = m; i >= 1; --i)
    for (int k = 0; k < r; ++k) alphabet.push_back({i, k});
  std::vector<WreathClass> out;
  WreathClass cur(r);
  auto rec = [&](auto&& self, int rem, size_t next) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (next >= alphabet.size()) return;
    auto [i, k] = alphabet[next];
    for (int a = rem / i; a >= 1; --a) {
      WreathClass saved = cur;
      cur.add_cycle(i, k, a);
      self(self, rem - a * i, next + 1);
      cur = saved;
    }
    self(self, rem, next + 1);
  };
  rec(rec, m, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// A concrete element of W(r, m): a permutation of {0..m-1} in one-line form
// together with a scalar exponent per position.  Used where the class-level
// view is not enough (point-count twists, scalar-tuple averages).
struct WreathElement {
  long r = 1;
  std::vector<int> perm;        // perm[a] = image of a
  std::vector<long> scalar;     // exponent in [0, r) attached to position a

  int m() const { return int(perm.size()); }
};

// Validates that perm is a permutation of {0..m-1}.
inline void check_perm(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || size_t(v) >= perm.size() || seen[size_t(v)])
      throw std::invalid_argument("check_perm: not a permutation");
    seen[size_t(v)] = 1;
  }
}

// Cycle decomposition as (cycle positions) lists, least element first.
inline std::vector<std::vector<int>> perm_cycles(const std::vector<int>& perm) {
  check_perm(perm);
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(perm.size(), 0);
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    int a = int(s);
    while (!seen[size_t(a)]) {
      seen[size_t(a)] = 1;
      cyc.push_back(a);
      a = perm[size_t(a)];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Conjugacy class of a wreath element: per cycle of the permutation, the
// color is the sum of the scalar exponents along the cycle.
inline WreathClass class_of(const WreathElement& g) {
  if (g.scalar.size() != g.perm.size())
    throw std::invalid_argument("class_of: scalar/perm size mismatch");
  WreathClass c(g.r);
  for (const auto& cyc : perm_cycles(g.perm)) {
    long k = 0;
    for (int a : cyc) k += g.scalar[size_t(a)];
    c.add_cycle(int(cyc.size()), k);
  }
  return c;
}

// A permutation with the given cycle type: consecutive blocks, each block
// cycled forward.  partition (3,1) -> 1 2 0 | 3.
inline std::vector<int> canonical_perm(const Partition& lambda) {
  std::vector<int> perm;
  int base = 0;
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) perm.push_back(base + (j + 1) % p);
    base += p;
  }
  return perm;
}

}  // namespace treg
