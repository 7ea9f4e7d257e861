#include "doctest.h"
#include "pade/families.hpp"

using namespace pade;

namespace {

Integer fac(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

TEST_CASE("truncated exponential") {
  CHECK(exp_poly(1) == Polynomial{1, 1});
  CHECK(exp_poly(2) == Polynomial{2, 2, 1});
  CHECK(exp_poly(3) == Polynomial{6, 6, 3, 1});
  CHECK(exp_poly(0) == Polynomial{1});  // degenerate constant
  CHECK(exp_poly(12).leading() == 1);
}

TEST_CASE("approximant pair on fixed cases") {
  auto [p12, q12] = pade_pair(1, 2);
  CHECK(p12 == Polynomial{3, 1});
  CHECK(q12 == Polynomial{6, -4, 1});
  CHECK(pade_pair(4, 5).first == Polynomial{3024, 1344, 252, 24, 1});
  CHECK(pade_pair(2, 1).first == q12.substitute_neg());
  CHECK_THROWS_AS(pade_pair(0, 0), std::invalid_argument);
}

TEST_CASE("swap symmetry P(u,v,x) = Q(v,u,-x)") {
  for (long u = 0; u <= 12; ++u)
    for (long v = 0; v <= 12; ++v) {
      if (u + v < 1) continue;
      CHECK(pade_pair(u, v).first ==
            pade_pair(v, u).second.substitute_neg());
    }
}

TEST_CASE("leading and constant coefficients") {
  for (long u = 0; u <= 10; ++u)
    for (long v = 0; v <= 10; ++v) {
      if (u + v < 1) continue;
      auto [P, Q] = pade_pair(u, v);
      CHECK(P.degree() == u);
      CHECK(Q.degree() == v);
      CHECK(P.leading() == 1);
      CHECK(Q.leading() == (v % 2 == 0 ? 1 : -1));
      CHECK(P.coeff(0) * fac(v) == fac(u + v));
      CHECK(Q.coeff(0) * fac(u) == fac(u + v));
    }
}

TEST_CASE("generalized Laguerre polynomials") {
  auto l1 = glp(1, Rational(7, 2));
  REQUIRE(l1.size() == 2);
  CHECK(l1[1] == 1);
  CHECK(l1[0] == Rational(-9, 2));  // x - (alpha + 1)

  // 2! L_2^(-6) = x^2 + 8x + 20 = P(2,3,x), the r = 3 shift at n = 2
  auto l2 = glp(2, Rational(-6));
  Polynomial scaled;
  {
    std::vector<Integer> c;
    for (const Rational& x : l2) {
      Rational t = x * 2;
      t.canonicalize();
      REQUIRE(t.get_den() == 1);
      c.emplace_back(t.get_num());
    }
    scaled = Polynomial{std::move(c)};
  }
  CHECK(scaled == pade_pair(2, 3).first);

  auto l3 = glp(1, Rational(-2));
  CHECK(l3[0] == 1);
  CHECK(l3[1] == 1);  // x + 1 = e_1
}

TEST_CASE("shifted normalization") {
  CHECK(shifted_glp(2, 1) == Polynomial{6, 4, 1});
  for (long n = 1; n <= 10; ++n) CHECK(shifted_glp(n, 0) == exp_poly(n));
  for (long r = 0; r <= 6; ++r)
    CHECK(shifted_glp(1, r) == Polynomial{r + 1, 1});
  for (long u = 1; u <= 8; ++u)
    for (long v = 0; v <= 8; ++v)
      CHECK(shifted_glp(u, v) == pade_pair(u, v).first);
}

TEST_CASE("shifted coefficients: binomial divisibility and positivity") {
  for (long n = 1; n <= 9; ++n)
    for (long r = 0; r <= 9; ++r) {
      Polynomial f = shifted_glp(n, r);
      for (long j = 0; j <= n; ++j) {
        CHECK(f.coeff(j) > 0);
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), n, j);
        CHECK(mpz_divisible_p(f.coeff(j).get_mpz_t(), b.get_mpz_t()));
      }
    }
}

TEST_CASE("n! L_n^(-1-n-r) equals the shifted normalization") {
  for (long n = 1; n <= 6; ++n)
    for (long r = 0; r <= 6; ++r) {
      auto l = glp(n, Rational(-1 - n - r));
      std::vector<Integer> c;
      for (const Rational& x : l) {
        Rational t = x * Rational(fac(n));
        t.canonicalize();
        REQUIRE(t.get_den() == 1);
        c.emplace_back(t.get_num());
      }
      CHECK(Polynomial{std::move(c)} == shifted_glp(n, r));
    }
}

TEST_CASE("closed-form discriminant") {
  CHECK(closed_form_disc(2, 3) == -16);
  CHECK(closed_form_disc(3, 4) == -16200);
  for (long r = 0; r <= 5; ++r) CHECK(closed_form_disc(1, r) == 1);
  for (long n = 1; n <= 10; ++n)
    for (long r = 0; r <= 10; ++r) {
      Rational oracle = discriminant(shifted_glp(n, r));
      CHECK(oracle == Rational(closed_form_disc(n, r)));
    }
  // the (-1)^u sign variant is wrong at (2,3): +16 vs the true -16
  CHECK(abs(closed_form_disc(2, 3)) != discriminant(pade_pair(2, 3).first));
}

TEST_CASE("pade identity reports") {
  auto r1 = verify_pade_identity(1, 2, 3);
  CHECK(r1.ok);
  CHECK(r1.scalar == 12);
  auto r2 = verify_pade_identity(1, 1, 2);
  CHECK(r2.ok);
  CHECK(r2.scalar == 2);
  auto r3 = verify_pade_identity(4, 0, 7);  // Q constant
  CHECK(r3.ok);
  CHECK_THROWS_AS(verify_pade_identity(1, 2, 2), std::invalid_argument);
}

TEST_CASE("schur congruences mod p") {
  auto r1 = schur_congruence_check(Family::P, 4, 3);
  CHECK(r1.ok);
  CHECK(r1.k == 1);
  CHECK(r1.u == 1);
  CHECK(r1.scalar == 1);

  auto r2 = schur_congruence_check(Family::Q, 3, 3);
  CHECK(r2.ok);
  CHECK(r2.scalar == 2);  // -1 mod 3

  auto r3 = schur_congruence_check(Family::P, 2, 3);
  CHECK(r3.ok);
  CHECK(r3.k == 0);  // identity congruence below p

  auto r4 = schur_congruence_check(Family::P, 9, 3, 0);  // P(9,9) diagonal
  CHECK(r4.ok);
  CHECK_THROWS_AS(schur_congruence_check(Family::P, 4, 4), std::invalid_argument);
}

TEST_CASE("family spec construction and naming") {
  CHECK(construct(FamilySpec::pade_q(1, 2)) == Polynomial{6, -4, 1});
  CHECK(construct(FamilySpec::exp(2)) == Polynomial{2, 2, 1});
  CHECK(construct(FamilySpec::shifted_glp(2, 1)) == Polynomial{6, 4, 1});
  CHECK(FamilySpec::pade_p(4, 5).name() == "P(4,5)");
  CHECK(FamilySpec::pade_p(4, 5).degree() == 4);
  CHECK(FamilySpec::pade_q(4, 5).degree() == 5);
  CHECK_THROWS_AS(FamilySpec::exp(0), std::invalid_argument);
}
