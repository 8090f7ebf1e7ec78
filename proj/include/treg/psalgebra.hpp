#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "treg/cyclotomic.hpp"
#include "treg/partitions.hpp"
#include "treg/qpoly.hpp"

namespace treg {

/*
 * Formal products of binomial-series factors
 *
 *     prefactor * prod_f (1 + c_f * x_f^{e_f})^{beta_f(q)}
 *
 * over a power-sum alphabet: either the plain variables p_1, p_2, ... or
 * the colored variables p_i(zeta_r^k) of a wreath product mu_r wr S_m.
 * Exponents beta are polynomials in q, so a factor expands through the
 * polynomial binomial series (1+u)^beta = sum_k binom(beta,k) u^k, which is
 * exact in every graded degree.  Colored alphabets are never expanded
 * directly; they are first rewritten into plain variables by a character
 * specialization or by the induction substitution.
 */

struct BinomFactor {
  int var_i = 1;    // variable index: p_{var_i} (plain) or p_{var_i}(zeta^var_k)
  int var_k = -1;   // color exponent in [0, r), or -1 on the plain alphabet
  int e = 1;        // power of the variable inside the binomial, >= 1
  CycNum c;         // coefficient, nonzero
  QPoly beta;       // exponent polynomial
};

struct FactoredSeries {
  long alphabet_r = 0;  // 0 = plain alphabet; r >= 1 = colored by mu_r
  CycNum prefactor = CycNum(1);
  std::vector<BinomFactor> factors;

  bool plain() const { return alphabet_r == 0; }

  // Smallest cyclotomic order containing every coefficient.
  long coeff_order_lcm() const {
    long m = prefactor.order();
    for (const auto& f : factors) m = lcm_l(m, f.c.order());
    return m;
  }
};

// Graded truncation of a symmetric-function expansion: monomials p_lambda
// indexed by plain partitions of weight <= N, with CPoly coefficients in a
// fixed Q(zeta_m).  Immutable in spirit; all operations return new values.
class PSeries {
 public:
  PSeries(int N, long m) : N_(N), m_(m) {
    if (N < 0 || m < 1) throw std::invalid_argument("PSeries: need N >= 0, m >= 1");
  }

  static PSeries one(int N, long m) {
    PSeries s(N, m);
    s.c_[Partition()] = CPoly(CycNum(1)).embed(m);
    return s;
  }

  int truncation() const { return N_; }
  long order() const { return m_; }
  const std::map<Partition, CPoly>& entries() const { return c_; }

  // Coefficient of p_lambda.  Weights beyond the truncation are not stored
  // and asking for them is a usage error.
  CPoly coeff(const Partition& lambda) const {
    if (lambda.weight() > N_)
      throw std::invalid_argument("PSeries::coeff: weight exceeds truncation");
    auto it = c_.find(lambda);
    return it == c_.end() ? CPoly(m_) : it->second;
  }

  void set_coeff(const Partition& lambda, const CPoly& v) {
    if (lambda.weight() > N_)
      throw std::invalid_argument("PSeries::set_coeff: weight exceeds truncation");
    if (v.is_zero())
      c_.erase(lambda);
    else
      c_[lambda] = v.order() == m_ ? v : v.embed(m_);
  }

  PSeries scaled(const CycNum& s) const {
    PSeries out(N_, m_);
    CPoly f = CPoly(cyc_embed(s, m_));
    for (auto& [lam, v] : c_) {
      CPoly w = f * v;
      if (!w.is_zero()) out.c_[lam] = w;
    }
    return out;
  }

  friend PSeries operator+(const PSeries& a, const PSeries& b) {
    auto [x, y] = align(a, b);
    PSeries out = x;
    for (auto& [lam, v] : y.c_) out.set_coeff(lam, out.coeff(lam) + v);
    return out;
  }

  // Product, truncated at min of the two truncations.
  friend PSeries operator*(const PSeries& a, const PSeries& b) {
    auto [x, y] = align(a, b);
    int N = std::min(x.N_, y.N_);
    PSeries out(N, x.m_);
    for (auto& [la, va] : x.c_) {
      if (la.weight() > N) continue;
      for (auto& [lb, vb] : y.c_) {
        if (la.weight() + lb.weight() > N) continue;
        std::vector<int> parts = la.parts();
        parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
        Partition lam(std::move(parts));
        out.set_coeff(lam, out.coeff(lam) + va * vb);
      }
    }
    return out;
  }

  bool operator==(const PSeries& o) const {
    auto [x, y] = align(*this, o);
    return x.N_ == y.N_ && x.c_ == y.c_;
  }
  bool operator!=(const PSeries& o) const { return !(*this == o); }

  bool is_rational() const {
    for (auto& [lam, v] : c_)
      if (!v.is_rational()) return false;
    return true;
  }

 private:
  static std::pair<PSeries, PSeries> align(const PSeries& a, const PSeries& b) {
    if (a.m_ == b.m_) return {a, b};
    long M = 0;
    if (a.m_ % b.m_ == 0)
      M = a.m_;
    else if (b.m_ % a.m_ == 0)
      M = b.m_;
    else
      throw std::invalid_argument("PSeries: incomparable cyclotomic orders");
    auto lift = [M](const PSeries& s) {
      PSeries out(s.N_, M);
      for (auto& [lam, v] : s.c_) out.c_[lam] = v.embed(M);
      return out;
    };
    return {a.m_ == M ? a : lift(a), b.m_ == M ? b : lift(b)};
  }

  int N_;
  long m_;
  std::map<Partition, CPoly> c_;
};

// Expands a plain-alphabet factored series to truncation N in Q(zeta_m)[q].
// Colored input must first pass through subst_character/subst_induction.
// Every coefficient order must divide m.  Factors whose lightest term
// already exceeds N contribute only their constant 1 and are skipped.
inline PSeries expand(const FactoredSeries& s, int N, long m) {
  if (!s.plain())
    throw std::invalid_argument("expand: colored alphabet; substitute variables first");
  PSeries acc = PSeries::one(N, m).scaled(s.prefactor);
  for (const auto& f : s.factors) {
    if (f.var_i < 1 || f.e < 1) throw std::invalid_argument("expand: bad factor");
    if (f.beta.is_zero() || f.c.is_zero()) continue;
    long step = long(f.var_i) * f.e;
    if (step > N) continue;
    // Univariate expansion of (1 + c p_i^e)^beta up to p_i-degree N/i.
    CycNum c = cyc_embed(f.c, m);
    std::vector<std::pair<int, CPoly>> terms;  // (#parts of size var_i, coeff)
    CycNum cpow(1);
    for (long k = 1; k * step <= N; ++k) {
      cpow *= c;
      CPoly coeff = CPoly(binom_poly(f.beta, k), m) * CPoly(cpow);
      if (!coeff.is_zero()) terms.push_back({int(k * f.e), coeff});
    }
    if (terms.empty()) continue;
    PSeries next(N, m);
    for (auto& [lam, v] : acc.entries()) {
      next.set_coeff(lam, next.coeff(lam) + v);  // k = 0 term
      for (auto& [extra, coeff] : terms) {
        if (lam.weight() + extra * f.var_i > N) break;
        Partition mu = lam.with_parts(f.var_i, extra);
        next.set_coeff(mu, next.coeff(mu) + coeff * v);
      }
    }
    acc = next;
  }
  return acc;
}

// Specializes a colored series at a character chi of mu_n, chi(zeta) =
// zeta^k: the factor coefficient picks up chi(theta)^e and the variable
// drops its color.  The alphabet becomes plain.
inline FactoredSeries subst_character(const FactoredSeries& s, long n, long k) {
  if (s.alphabet_r != n || n < 1)
    throw std::invalid_argument("subst_character: series is not colored by mu_n");
  FactoredSeries out;
  out.alphabet_r = 0;
  out.prefactor = s.prefactor;
  for (const auto& f : s.factors) {
    BinomFactor g = f;
    g.var_k = -1;
    g.c = f.c * CycNum::zeta(n, k * f.var_k * f.e);
    out.factors.push_back(std::move(g));
  }
  return out;
}

// The induction substitution p_i(theta) -> -theta^{-1} (-p_{i t})^{r/t},
// t = order of theta: variable p_i(zeta_r^k) with inner power e becomes the
// plain p_{i t} with power e r/t and the coefficient picks up
// (-1)^{e + e r/t} zeta_r^{-k e}.
inline FactoredSeries subst_induction(const FactoredSeries& s, long r) {
  if (s.alphabet_r != r || r < 1)
    throw std::invalid_argument("subst_induction: series is not colored by mu_r");
  FactoredSeries out;
  out.alphabet_r = 0;
  out.prefactor = s.prefactor;
  for (const auto& f : s.factors) {
    long t = r / std::gcd(long(f.var_k), r);
    BinomFactor g;
    g.var_i = int(f.var_i * t);
    g.var_k = -1;
    g.e = int(f.e * (r / t));
    long sign = ((f.e + f.e * (r / t)) % 2 == 0) ? 1 : -1;
    g.c = f.c * CycNum(sign) * CycNum::zeta(r, -long(f.var_k) * f.e);
    g.beta = f.beta;
    out.factors.push_back(std::move(g));
  }
  return out;
}

// Coefficient of p_lambda, by the spec of the series.
inline CPoly coefficient(const PSeries& s, const Partition& lambda) { return s.coeff(lambda); }

// Recovers a trace from a graded coefficient: the extraction
// <f, p_lambda/z-part> inverts against the centralizer order, so the trace
// at the class is the coefficient times prod_i a_i! * (r i)^{a_i}.
inline CPoly trace_recovery(const CPoly& coeff, const Partition& lambda, long r = 1) {
  Int mult = 1;
  for (auto [i, a] : lambda.mult_map()) mult *= factorial(a) * pow_int(Int(r * i), unsigned(a));
  return Rat(mult) * coeff;
}

inline CPoly trace_recovery(const CPoly& coeff, const WreathClass& y) {
  return Rat(y.centralizer()) * coeff;
}

}  // namespace treg
