#include <catch2/catch_amalgamated.hpp>

#include "treg/arith.hpp"
#include "treg/cyclotomic.hpp"
#include "treg/qpoly.hpp"
#include "treg/rat.hpp"

using namespace treg;

TEST_CASE("rational helpers", "[numkit]") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-7") == Rat(-7));
  CHECK(to_string(Rat(-3, 4)) == "-3/4");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(is_integer(Rat(8, 4)));
  CHECK_FALSE(is_integer(Rat(1, 2)));
  CHECK(rat_num(Rat(8, 4)) == 2);
  CHECK(pow_int(Int(3), 5) == 243);
  CHECK(pow_rat(Rat(1, 2), 3) == Rat(1, 8));
}

TEST_CASE("arithmetic functions", "[numkit]") {
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(factorial(6) == 720);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(5, 8) == 2);

  // classical identities as independent cross-checks
  for (long n = 1; n <= 60; ++n) {
    long phi_sum = 0, mu_sum = 0;
    for (long d : divisors(n)) {
      phi_sum += euler_phi(d);
      mu_sum += mobius(d);
    }
    CHECK(phi_sum == n);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("polynomial arithmetic in q", "[numkit]") {
  QPoly q = QPoly::q();
  QPoly p = (q - QPoly(1)) * (q - QPoly(2)) * (q - QPoly(3));
  CHECK(p.to_string() == "q^3 - 6*q^2 + 11*q - 6");
  CHECK(p.degree() == 3);
  CHECK(p.coeff(1) == 11);
  CHECK(p.eval(5) == Rat(24));
  CHECK((q - QPoly(1)) * (q + QPoly(1)) == q * q - QPoly(1));
  CHECK(QPoly(0).degree() == -1);
  CHECK((p - p).degree() == -1);
  CHECK(q.pow(4).coeff(4) == 1);

  auto [quo, rem] = (p + QPoly(5)).divmod(q - QPoly(1));
  CHECK(quo * (q - QPoly(1)) + rem == p + QPoly(5));
  CHECK(p.divide_exact(q - QPoly(2)) == (q - QPoly(1)) * (q - QPoly(3)));
  CHECK_THROWS_AS((p + QPoly(1)).divide_exact(q - QPoly(1)), std::logic_error);

  CHECK(q_pow_minus_one(3).to_string() == "q^3 - 1");
  // binomial in a polynomial upper argument: C(beta, 2) at beta = q-1
  QPoly b = binom_poly(q - QPoly(1), 2);
  CHECK(b * QPoly(2) == (q - QPoly(1)) * (q - QPoly(2)));
  CHECK(binom_poly(q, 0) == QPoly(1));
}

TEST_CASE("cyclotomic polynomials", "[numkit]") {
  CHECK(cyclotomic_poly(1).to_string() == "q - 1");
  CHECK(cyclotomic_poly(2).to_string() == "q + 1");
  CHECK(cyclotomic_poly(4).to_string() == "q^2 + 1");
  CHECK(cyclotomic_poly(6).to_string() == "q^2 - q + 1");
  CHECK(cyclotomic_poly(12).to_string() == "q^4 - q^2 + 1");

  // independent route: Phi_n = prod_{d|n} (q^{n/d} - 1)^{mu(d)}
  for (long n = 1; n <= 30; ++n) {
    QPoly num(1), den(1);
    for (long d : divisors(n)) {
      if (mobius(d) == 1) num = num * q_pow_minus_one(n / d);
      if (mobius(d) == -1) den = den * q_pow_minus_one(n / d);
    }
    CHECK(num.divide_exact(den) == cyclotomic_poly(n));
  }
}

TEST_CASE("cyclotomic numbers", "[numkit]") {
  CycNum z6 = CycNum::zeta(6, 1);
  CHECK(z6 * z6 - z6 + CycNum(1) == CycNum(0));
  CHECK(z6.pow(3) == CycNum(-1));
  CHECK(z6.pow(6) == CycNum(1));

  CycNum i = CycNum::zeta(4, 1);
  CHECK(i * i == CycNum(-1));
  CHECK(i.pow(4).rational_part().value() == Rat(1));

  // geometric sums vanish
  CycNum s(0);
  for (int k = 0; k < 5; ++k) s = s + CycNum::zeta(5, k);
  CHECK(s == CycNum(0));

  CHECK(cyc_embed(CycNum::zeta(3, 1), 6) == CycNum::zeta(6, 2));
  CHECK_THROWS_AS(cyc_embed(CycNum::zeta(3, 1), 4), std::invalid_argument);
  CHECK(cyc_is_rational(CycNum::zeta(8, 4)).value() == Rat(-1));
  CHECK_FALSE(cyc_is_rational(CycNum::zeta(8, 2)).has_value());
}

TEST_CASE("polynomials with cyclotomic coefficients", "[numkit]") {
  QPoly q = QPoly::q();
  CPoly p(q * q - QPoly(3), 4);
  CHECK(p.is_rational());
  CHECK(p.to_qpoly() == q * q - QPoly(3));

  CPoly zq = CPoly(CycNum::zeta(4, 1)) * CPoly(QPoly::q(), 4);  // i*q
  CHECK((zq * zq).to_string() == "-q^2");
  CHECK_FALSE((p + zq).is_rational());
  CHECK_THROWS_AS((p + zq).to_qpoly(), std::logic_error);
  CHECK(p + zq - zq == p);

  // order-1 operands lift into any order
  CHECK(CPoly(q, 1) * CPoly(q, 6) == CPoly(q * q, 6));
  CHECK(p.embed(8).to_qpoly() == p.to_qpoly());
}
