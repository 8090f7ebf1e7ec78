#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/qpoly.hpp"

namespace treg {

/*
 * Exact cyclotomic arithmetic.  An element of Q(zeta_m) is stored as its
 * residue modulo the m-th cyclotomic polynomial, i.e. coordinates in the
 * power basis 1, zeta, ..., zeta^{phi(m)-1}.  This makes equality and
 * rationality tests trivial: an element is rational iff all coordinates
 * above the constant one vanish.
 *
 * Elements carry their order m.  Arithmetic between different orders is an
 * error except that order-1 operands (plain rationals) lift implicitly;
 * anything else needs an explicit cyc_embed to a common multiple, which
 * keeps accidental wrong-field reductions from compiling into silence.
 */

// m-th cyclotomic polynomial in the given variable, computed by exact
// division of x^m - 1 by the product of the lower Phi_d, and cached.
// Safe for concurrent use.
inline QPoly cyclotomic_poly(long m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
  static std::map<long, QPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  QPoly num = q_pow_minus_one(m);
  for (long d : divisors(m)) {
    if (d == m) continue;
    auto dit = cache.find(d);
    if (dit == cache.end()) {
      // Fill the cache bottom-up; divisors() is increasing, so a simple
      // recursive call would also work but would re-lock.
      QPoly nd = q_pow_minus_one(d);
      for (long e : divisors(d))
        if (e != d) nd = nd.divide_exact(cache.at(e));
      dit = cache.emplace(d, nd).first;
    }
    num = num.divide_exact(dit->second);
  }
  cache.emplace(m, num);
  return num;
}

class CycNum {
 public:
  CycNum() : m_(1) {}
  CycNum(const Rat& c) : m_(1) {  // NOLINT: rationals are order-1 elements
    if (c != 0) res_.push_back(c);
  }
  CycNum(long c) : CycNum(Rat(c)) {}  // NOLINT

  // zeta_m^k, k arbitrary (reduced mod m).
  static CycNum zeta(long m, long k = 1) {
    if (m < 1) throw std::invalid_argument("CycNum::zeta: m must be >= 1");
    k = ((k % m) + m) % m;
    CycNum out;
    out.m_ = m;
    out.res_ = reduce(QPoly::monomial(int(k), 1), m);
    return out;
  }

  long order() const { return m_; }
  bool is_zero() const { return res_.empty(); }

  // Coordinates in the power basis, lowest first (no trailing zeros).
  const std::vector<Rat>& coords() const { return res_; }

  friend CycNum operator+(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    CycNum out;
    out.m_ = x.m_;
    out.res_ = x.res_;
    if (out.res_.size() < y.res_.size()) out.res_.resize(y.res_.size(), Rat(0));
    for (size_t i = 0; i < y.res_.size(); ++i) out.res_[i] += y.res_[i];
    out.trim();
    return out;
  }

  friend CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

  CycNum operator-() const {
    CycNum out = *this;
    for (Rat& c : out.res_) c = -c;
    return out;
  }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    auto [x, y] = align(a, b);
    if (x.is_zero() || y.is_zero()) return CycNum();
    std::vector<Rat> prod(x.res_.size() + y.res_.size() - 1, Rat(0));
    for (size_t i = 0; i < x.res_.size(); ++i)
      for (size_t j = 0; j < y.res_.size(); ++j) prod[i + j] += x.res_[i] * y.res_[j];
    CycNum out;
    out.m_ = x.m_;
    out.res_ = reduce(QPoly::from_coeffs(std::move(prod)), x.m_);
    return out;
  }

  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  CycNum pow(long e) const {
    if (e < 0) throw std::invalid_argument("CycNum::pow: negative exponent");
    CycNum out(1), base = *this;
    for (unsigned long u = (unsigned long)e; u; u >>= 1) {
      if (u & 1u) out *= base;
      base *= base;
    }
    return out;
  }

  // Same order: structural.  Different orders: equal only if both are
  // rational and agree; embed explicitly to compare further.
  bool operator==(const CycNum& o) const {
    if (m_ == o.m_) return res_ == o.res_;
    auto a = rational_part(), b = o.rational_part();
    return a && b && *a == *b;
  }
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // The value as a Rat if it lies in the rational subfield.
  std::optional<Rat> rational_part() const {
    if (res_.empty()) return Rat(0);
    if (res_.size() == 1) return res_[0];
    return std::nullopt;
  }

  std::string to_string() const {
    return QPoly::from_coeffs(res_).to_string("z" + std::to_string(m_));
  }

  friend CycNum cyc_embed(const CycNum& x, long M);

 private:
  static std::vector<Rat> reduce(const QPoly& p, long m) {
    QPoly rem = p.divmod(cyclotomic_poly(m)).second;
    return rem.coeffs();
  }

  // Lift order-1 operands; reject other mismatches.
  static std::pair<CycNum, CycNum> align(const CycNum& a, const CycNum& b) {
    if (a.m_ == b.m_) return {a, b};
    if (a.m_ == 1) return {cyc_embed(a, b.m_), b};
    if (b.m_ == 1) return {a, cyc_embed(b, a.m_)};
    throw std::invalid_argument("CycNum: mixed orders " + std::to_string(a.m_) + " and " +
                                std::to_string(b.m_) + "; cyc_embed first");
  }

  void trim() {
    while (!res_.empty() && res_.back() == 0) res_.pop_back();
  }

  long m_;
  std::vector<Rat> res_;
};

// Embeds Q(zeta_m) into Q(zeta_M) for m | M, via zeta_m = zeta_M^{M/m}.
inline CycNum cyc_embed(const CycNum& x, long M) {
  if (M < 1 || M % x.m_ != 0)
    throw std::invalid_argument("cyc_embed: target order must be a multiple of the source order");
  if (x.m_ == M) return x;
  long step = M / x.m_;
  QPoly p;
  for (size_t j = 0; j < x.res_.size(); ++j)
    p += QPoly::monomial(int(j * size_t(step)), x.res_[j]);
  CycNum out;
  out.m_ = M;
  out.res_ = CycNum::reduce(p, M);
  return out;
}

// Rat value if x is rational, nullopt otherwise.
inline std::optional<Rat> cyc_is_rational(const CycNum& x) { return x.rational_part(); }

// Polynomial in q with coefficients in a fixed Q(zeta_m).  Arithmetic
// follows the CycNum order rules (order-1 lifts, everything else explicit).
class CPoly {
 public:
  explicit CPoly(long m = 1) : m_(m) {
    if (m < 1) throw std::invalid_argument("CPoly: order must be >= 1");
  }
  CPoly(const CycNum& c) : m_(c.order()) {  // NOLINT
    if (!c.is_zero()) c_.push_back(c);
  }
  CPoly(const QPoly& p, long m = 1) : m_(m) {  // NOLINT
    for (const Rat& c : p.coeffs()) c_.push_back(cyc_embed(CycNum(c), m));
    trim();
  }

  long order() const { return m_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  CycNum coeff(int k) const {
    if (k < 0 || size_t(k) >= c_.size()) return CycNum(0);
    return c_[size_t(k)];
  }

  CPoly embed(long M) const {
    CPoly out(M);
    out.c_.reserve(c_.size());
    for (const CycNum& c : c_) out.c_.push_back(cyc_embed(c, M));
    return out;
  }

  friend CPoly operator+(const CPoly& a, const CPoly& b) {
    auto [x, y] = align(a, b);
    CPoly out(x.m_);
    out.c_.resize(std::max(x.c_.size(), y.c_.size()), CycNum(0));
    for (size_t i = 0; i < x.c_.size(); ++i) out.c_[i] += x.c_[i];
    for (size_t i = 0; i < y.c_.size(); ++i) out.c_[i] += y.c_[i];
    out.trim();
    return out;
  }

  friend CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }

  CPoly operator-() const {
    CPoly out = *this;
    for (CycNum& c : out.c_) c = -c;
    return out;
  }

  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    auto [x, y] = align(a, b);
    CPoly out(x.m_);
    if (x.is_zero() || y.is_zero()) return out;
    out.c_.assign(x.c_.size() + y.c_.size() - 1, CycNum(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i].is_zero()) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) out.c_[i + j] += x.c_[i] * y.c_[j];
    }
    out.trim();
    return out;
  }

  friend CPoly operator*(const CycNum& s, const CPoly& a) { return CPoly(s) * a; }
  friend CPoly operator*(const Rat& s, const CPoly& a) { return CPoly(CycNum(s)) * a; }

  CPoly& operator+=(const CPoly& o) { return *this = *this + o; }
  CPoly& operator-=(const CPoly& o) { return *this = *this - o; }
  CPoly& operator*=(const CPoly& o) { return *this = *this * o; }

  bool operator==(const CPoly& o) const {
    auto [x, y] = align(*this, o);
    return x.c_ == y.c_;
  }
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  bool is_rational() const {
    for (const CycNum& c : c_)
      if (!c.rational_part()) return false;
    return true;
  }

  // Collapse to a QPoly; non-rational coefficients mean a theory-level
  // identity failed upstream, hence logic_error.
  QPoly to_qpoly() const {
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const CycNum& c : c_) {
      auto r = c.rational_part();
      if (!r) throw std::logic_error("CPoly::to_qpoly: non-rational coefficient " + c.to_string());
      out.push_back(*r);
    }
    return QPoly::from_coeffs(std::move(out));
  }

  std::string to_string() const {
    if (is_rational()) return to_qpoly().to_string();
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].to_string();
    }
    return out + "] (coeffs, ascending)";
  }

 private:
  static std::pair<CPoly, CPoly> align(const CPoly& a, const CPoly& b) {
    if (a.m_ == b.m_) return {a, b};
    if (a.m_ == 1) return {a.embed(b.m_), b};
    if (b.m_ == 1) return {a, b.embed(a.m_)};
    throw std::invalid_argument("CPoly: mixed orders; embed first");
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  long m_;
  std::vector<CycNum> c_;  // c_[k] = coefficient of q^k, each of order m_
};

}  // namespace treg
