#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/arith.hpp"
#include "treg/rat.hpp"

namespace treg {

// Dense univariate polynomial in q over Rat.  Invariant: the coefficient
// vector never ends in a zero, so the zero polynomial is the empty vector
// and degree() == -1 for it.  All arithmetic is exact.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rat& c) {       // NOLINT: implicit constant -> polynomial
    if (c != 0) c_.push_back(c);
  }
  QPoly(long c) : QPoly(Rat(c)) {}  // NOLINT

  static QPoly q() { return monomial(1, 1); }

  static QPoly monomial(int k, const Rat& c) {
    QPoly p;
    if (c != 0) {
      p.c_.assign(size_t(k) + 1, Rat(0));
      p.c_[size_t(k)] = c;
    }
    return p;
  }

  static QPoly from_coeffs(std::vector<Rat> asc) {
    QPoly p;
    p.c_ = std::move(asc);
    p.trim();
    return p;
  }

  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of q^k; zero outside the stored range.
  Rat coeff(int k) const {
    if (k < 0 || size_t(k) >= c_.size()) return Rat(0);
    return c_[size_t(k)];
  }

  const std::vector<Rat>& coeffs() const { return c_; }

  bool integer_coeffs() const {
    for (const Rat& c : c_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
    out.trim();
    return out;
  }

  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

  QPoly operator-() const {
    QPoly out = *this;
    for (Rat& c : out.c_) c = -c;
    return out;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
  }

  friend QPoly operator*(const Rat& s, const QPoly& a) {
    QPoly out = a;
    for (Rat& c : out.c_) c *= s;
    out.trim();
    return out;
  }

  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  QPoly pow(unsigned e) const {
    QPoly out(1), base = *this;
    while (e) {
      if (e & 1u) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  Rat eval(const Rat& x) const {
    Rat out(0);
    for (size_t i = c_.size(); i-- > 0;) out = out * x + c_[i];
    return out;
  }

  // Quotient and remainder against a divisor with invertible leading
  // coefficient (any nonzero Rat).
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("QPoly::divmod: division by zero");
    QPoly quo, rem = *this;
    Rat lead = d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      int k = rem.degree() - d.degree();
      Rat c = rem.c_.back() / lead;
      quo += monomial(k, c);
      rem -= monomial(k, c) * d;
    }
    return {quo, rem};
  }

  // Exact division; a nonzero remainder is a broken identity, not bad input.
  QPoly divide_exact(const QPoly& d) const {
    auto [quo, rem] = divmod(d);
    if (!rem.is_zero()) throw std::logic_error("QPoly::divide_exact: nonzero remainder");
    return quo;
  }

  // Descending powers, explicit '*': "q^3 - 6*q^2 + 11*q - 6", "-1/2*q + 3".
  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Rat c = coeff(k);
      if (c == 0) continue;
      bool neg = c < 0;
      Rat mag = neg ? Rat(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string term;
      if (k == 0) {
        term = treg::to_string(mag);
      } else {
        if (mag != 1) term = treg::to_string(mag) + "*";
        term += var;
        if (k > 1) term += "^" + std::to_string(k);
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;  // c_[k] = coefficient of q^k
};

// q^i - 1, the ubiquitous building block.
inline QPoly q_pow_minus_one(long i) {
  return QPoly::monomial(int(i), 1) - QPoly(1);
}

// Polynomial binomial coefficient: binom(beta, k) = beta(beta-1)...(beta-k+1)/k!.
// binom(beta, 0) = 1 for any beta.
inline QPoly binom_poly(const QPoly& beta, long k) {
  if (k < 0) throw std::invalid_argument("binom_poly: k must be >= 0");
  QPoly out(1);
  for (long j = 0; j < k; ++j) out *= beta - QPoly(j);
  return Rat(1, factorial(k)) * out;
}

}  // namespace treg
