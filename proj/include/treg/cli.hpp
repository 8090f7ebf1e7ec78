#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "treg/oracle.hpp"
#include "treg/reps.hpp"

namespace treg {

struct RunConfig {
  std::string command;           // betti | character | verify
  long n = 0;
  long r = 0;                    // chi order; 0 = total / unset
  int j = -1;                    // cohomological degree
  int N = 0;                     // truncation override (series commands)
  std::vector<long> q_list = {5, 7, 13};
  std::string format = "json";   // json | csv | latex
  int max_n = 4;                 // sweep bound for verify suites
  std::string suite;             // identities | induction | oracle
};

// ---- cmd_betti ------------------------------------------------------------

struct BettiTable {
  long n = 0;
  long r = 0;  // 0 = total
  std::vector<Int> dims;  // dims[j] = dim H^j(ST(1,n)) (or its chi-part)
  QPoly weight;           // the generating weight polynomial
};

// Per-degree dimensions of H^j(ST(1, n)), total or chi-isotypic for a
// character of order r, extracted from the weight polynomial at the
// identity class by Poincare duality.
inline BettiTable cmd_betti(long n, long r = 0) {
  if (n < 1 || n > kCharTableMaxN)
    throw std::invalid_argument("cmd_betti: n out of range");
  if (r != 0 && n % r != 0) throw std::invalid_argument("cmd_betti: need r | n");
  BettiTable t;
  t.n = n;
  t.r = r;
  Partition id = Partition::ones(int(n));
  t.weight = (r == 0) ? trace_ST_total(id) : trace_ST(id, r);
  for (int j = 0; j <= int(n) - 1; ++j) {
    Rat c = t.weight.coeff(int(n) - 1 - j);
    if (j % 2 != 0) c = -c;
    if (!is_integer(c) || c < 0)
      throw std::logic_error("cmd_betti: non-integral or negative dimension");
    t.dims.push_back(rat_num(c));
  }
  return t;
}

// ---- cmd_character ---------------------------------------------------------

struct CharacterTable {
  long n = 0, r = 0;
  int j = 0;
  std::vector<std::pair<Partition, Rat>> classes;        // cycle type -> trace
  std::vector<std::pair<Partition, Int>> decomposition;  // irreducible -> mult
};

// Trace of every cycle type on H^j(ST(1,n))_chi plus the decomposition into
// irreducibles (multiplicities must come out integral).
inline CharacterTable cmd_character(long n, long r, int j) {
  if (n < 1 || n > kCharTableMaxN)
    throw std::invalid_argument("cmd_character: n out of range");
  if (r < 1 || n % r != 0) throw std::invalid_argument("cmd_character: need r | n");
  if (j < 0 || j > int(n) - 1) throw std::invalid_argument("cmd_character: need 0 <= j <= n-1");
  CharacterTable t;
  t.n = n;
  t.r = r;
  t.j = j;
  ClassFunction f = isotypic_character(n, r, j);
  for (const Partition& lam : partitions(int(n))) {
    auto v = cyc_is_rational(f(lam));
    if (!v) throw std::logic_error("cmd_character: irrational trace");
    t.classes.push_back({lam, *v});
  }
  for (auto& [mu, mult] : decompose(f)) {
    if (!is_integer(mult))
      throw std::logic_error("cmd_character: non-integral multiplicity at " + mu.to_string());
    if (mult != 0) t.decomposition.push_back({mu, rat_num(mult)});
  }
  return t;
}

// ---- cmd_verify ------------------------------------------------------------

// One suite = a list of named checks; `lines` holds one PASS/FAIL per case.
struct SuiteReport {
  bool pass = true;
  std::vector<std::string> lines;

  void add(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
  }
  void absorb(const VerifyReport& rep, const std::string& what) {
    add(rep.pass, what + (rep.pass ? "" : " [" + std::to_string(rep.failures.size()) +
                                              " mismatches, first: " + rep.failures.front() + "]"));
  }
};

// Polynomial identities: the two R_theta routes, the substitution identity
// p_prime = p_chi, the closed coefficient forms, and the covering identity
// behind trace_Tn1m (pcor).
inline SuiteReport suite_identities(int N, int max_m) {
  SuiteReport rep;
  bool rt = true;
  for (long r = 1; r <= 8; ++r)
    for (long i = 1; i <= 8; ++i)
      for (long k = 0; k < r; ++k)
        rt = rt && (r_theta(r, i, k) == r_theta_via_rsmall(r, i, k));
  rep.add(rt, "identity r_theta two-route agreement (r, i <= 8)");

  for (long r : {1L, 2L, 3L, 4L, 6L}) {
    int Nr = std::min(N, 8);
    rep.add(p_chi(r, Nr) == p_prime(r, Nr),
            "identity p_chi = p_prime at r=" + std::to_string(r) + " N=" + std::to_string(Nr));
  }

  bool cc = true;
  for (long r = 1; r <= 6; ++r)
    for (long i = 1; i <= 6; ++i) {
      if (std::gcd(r, i) != 1) continue;
      for (long a = 1; a <= 8; ++a) {
        PSeries s = expand(p_factor(r, i), int(i * a), 1);
        QPoly direct = s.coeff(Partition(std::vector<int>(size_t(a), int(i)))).to_qpoly();
        cc = cc && (direct == coeff_coprime(r, i, a));
      }
    }
  rep.add(cc, "identity coprime-case coefficient closed form (r, i <= 6, a <= 8)");

  bool c2 = true;
  for (long i = 2; i <= 6; i += 2)
    for (long a = 0; a <= 8; ++a) {
      PSeries s = expand(p_factor(2, i), int(i * a), 1);
      QPoly direct = a == 0 ? QPoly(1)
                            : s.coeff(Partition(std::vector<int>(size_t(a), int(i)))).to_qpoly();
      c2 = c2 && (direct == coeff_r2_even(i, a));
    }
  rep.add(c2, "identity r=2 even-i coefficient closed form (i <= 6, a <= 8)");

  for (int m = 1; m <= max_m; ++m)
    for (long r : divisors(m)) rep.absorb(verify_pcor(r, m), "identity pcor r=" + std::to_string(r) +
                                                                 " m=" + std::to_string(m));
  return rep;
}

// The cohomological induction theorem across all degrees, plus the forced
// vanishing below degree n - n/r.
inline SuiteReport suite_induction(int max_n) {
  SuiteReport rep;
  for (long n = 1; n <= max_n; ++n)
    for (long r : divisors(n))
      for (int j = 0; j <= int(n) - 1; ++j)
        rep.absorb(verify_induction(n, r, j), "induction n=" + std::to_string(n) +
                                                  " r=" + std::to_string(r) +
                                                  " j=" + std::to_string(j));
  return rep;
}

// Finite-field ground truth: twisted point counts against the polynomial
// side, for every class, scalar index, and q in the list with n | q-1.
inline SuiteReport suite_oracle(int max_n, const std::vector<long>& q_list) {
  SuiteReport rep;
  for (long n = 2; n <= max_n; ++n)
    for (long q : q_list) {
      if ((q - 1) % n != 0) continue;
      for (const Partition& w : partitions(int(n))) {
        std::vector<int> perm = canonical_perm(w);
        bool ok = true;
        // k = 0 against the total polynomial
        ok = ok && (count_ST_twisted(n, q, {perm, 0}) == trace_ST_total(w).eval(q));
        // isotypic averages against trace_ST for every r | n
        for (long r : divisors(n))
          ok = ok && (fourier_isotypic(n, q, perm, r) == trace_ST(w, r).eval(q));
        rep.add(ok, "oracle ST counts n=" + std::to_string(n) + " q=" + std::to_string(q) +
                        " w=" + w.to_string());
      }
    }
  return rep;
}

inline SuiteReport cmd_verify(const RunConfig& cfg) {
  SuiteReport rep;
  int N = cfg.N > 0 ? cfg.N : 6;
  if (cfg.suite == "identities") return suite_identities(N, std::max(cfg.max_n, 4));
  if (cfg.suite == "induction") return suite_induction(cfg.max_n >= 1 ? cfg.max_n : 4);
  if (cfg.suite == "oracle") return suite_oracle(cfg.max_n >= 2 ? cfg.max_n : 4, cfg.q_list);
  throw std::invalid_argument("cmd_verify: unknown suite '" + cfg.suite + "'");
}

// ---- serialization ---------------------------------------------------------

inline std::string json_array(const Partition& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + "]";
}

inline std::string latex_partition(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s + ")";
}

inline std::string render_betti(const BettiTable& t, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << "{\"n\":" << t.n << ",\"chi_order\":" << t.r << ",\"dims\":[";
    for (size_t j = 0; j < t.dims.size(); ++j) os << (j ? "," : "") << t.dims[j];
    os << "],\"weight_polynomial\":\"" << t.weight.to_string() << "\"}";
  } else if (format == "csv") {
    os << "degree,dim\n";
    for (size_t j = 0; j < t.dims.size(); ++j) os << j << "," << t.dims[j] << "\n";
  } else if (format == "latex") {
    os << "\\begin{tabular}{rr}\n\\toprule\n$j$ & $\\dim H^j$ \\\\\n\\midrule\n";
    for (size_t j = 0; j < t.dims.size(); ++j) os << j << " & " << t.dims[j] << " \\\\\n";
    os << "\\bottomrule\n\\end{tabular}\n% weight polynomial: $" << t.weight.to_string()
       << "$\n";
  } else {
    throw std::invalid_argument("render_betti: unknown format '" + format + "'");
  }
  return os.str();
}

inline std::string render_character(const CharacterTable& t, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << "{\"n\":" << t.n << ",\"chi_order\":" << t.r << ",\"degree\":" << t.j
       << ",\"classes\":[";
    for (size_t i = 0; i < t.classes.size(); ++i) {
      if (i) os << ",";
      os << "{\"cycle_type\":" << json_array(t.classes[i].first) << ",\"trace\":\""
         << to_string(t.classes[i].second) << "\"}";
    }
    os << "],\"decomposition\":[";
    for (size_t i = 0; i < t.decomposition.size(); ++i) {
      if (i) os << ",";
      os << "{\"irreducible\":" << json_array(t.decomposition[i].first)
         << ",\"multiplicity\":" << t.decomposition[i].second << "}";
    }
    os << "]}";
  } else if (format == "csv") {
    os << "cycle_type,trace\n";
    for (auto& [lam, v] : t.classes) os << "\"" << lam.to_string() << "\"," << to_string(v) << "\n";
    os << "irreducible,multiplicity\n";
    for (auto& [mu, m] : t.decomposition) os << "\"" << mu.to_string() << "\"," << m << "\n";
  } else if (format == "latex") {
    os << "\\begin{tabular}{lr}\n\\toprule\nclass & trace \\\\\n\\midrule\n";
    for (auto& [lam, v] : t.classes)
      os << "$" << latex_partition(lam) << "$ & $" << to_string(v) << "$ \\\\\n";
    os << "\\midrule\n";
    for (auto& [mu, m] : t.decomposition)
      os << "$S^{" << latex_partition(mu) << "}$ & $" << m << "$ \\\\\n";
    os << "\\bottomrule\n\\end{tabular}\n";
  } else {
    throw std::invalid_argument("render_character: unknown format '" + format + "'");
  }
  return os.str();
}

}  // namespace treg

