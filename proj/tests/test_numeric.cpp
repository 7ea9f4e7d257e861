#include <random>
#include <thread>

#include "doctest.h"
#include "pade/numeric.hpp"

using namespace pade;

TEST_CASE("valuation of integers and rationals") {
  CHECK(valuation(3, Integer(210)) == 1);  // 210 = 2*3*5*7
  CHECK(valuation(5, Integer(1)) == 0);
  CHECK(valuation(3, Rational(25, 24)) == -1);  // 24 = 2^3 * 3
  CHECK(valuation(2, Integer(-48)) == 4);
  CHECK_THROWS_AS(valuation(3, Integer(0)), std::domain_error);
  CHECK_THROWS_AS(valuation(3, Rational(0)), std::domain_error);
}

TEST_CASE("valuation multiplicativity and ultrametric inequality") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned long p = (trial % 3 == 0) ? 2 : (trial % 3 == 1) ? 3 : 7;
    Rational x(static_cast<long>(rng() % 2000) - 1000,
               static_cast<long>(rng() % 999) + 1);
    Rational y(static_cast<long>(rng() % 2000) - 1000,
               static_cast<long>(rng() % 999) + 1);
    x.canonicalize();
    y.canonicalize();
    if (x == 0 || y == 0) continue;
    CHECK(valuation(p, Rational(x * y)) == valuation(p, x) + valuation(p, y));
    Rational s = x + y;
    if (s != 0)
      CHECK(valuation(p, s) >=
            std::min(valuation(p, x), valuation(p, y)));
  }
}

TEST_CASE("factorial valuation (Legendre)") {
  CHECK(factorial_valuation(3, Integer(9)) == 4);  // floor(9/3)+floor(9/9)
  CHECK(factorial_valuation(7, Integer(6)) == 0);
  // v_p((2 p^n + 1)!) - v_p((p^n + 1)!) = (p^n - 1)/(p - 1)
  long pn = 1;
  for (int n = 1; n <= 3; ++n) {
    pn *= 3;
    long got = factorial_valuation(3, Integer(2 * pn + 1)) -
               factorial_valuation(3, Integer(pn + 1));
    CHECK(got == (pn - 1) / 2);
  }
}

TEST_CASE("Legendre consistency: digit formula equals floor sum") {
  std::mt19937_64 rng(7);
  const unsigned long primes[] = {2, 3, 5, 7, 11, 13, 101};
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned long p = primes[rng() % 7];
    unsigned long m = rng() % 100000;
    long oracle = 0;
    for (Integer q(p); q <= m; q *= p) oracle += static_cast<long>(m / q.get_ui());
    CHECK(factorial_valuation(p, Integer(static_cast<long>(m))) == oracle);
  }
}

TEST_CASE("base digits") {
  auto d = base_digits(3, Integer(10));
  CHECK(d.digits == std::vector<unsigned long>{1, 0, 1});
  CHECK(d.digit_sum() == 2);
  CHECK(base_digits(5, Integer(4)).digits == std::vector<unsigned long>{4});
  CHECK(base_digits(3, Integer(0)).digits.empty());
  CHECK(base_digits(3, Integer(0)).digit_sum() == 0);
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Integer(16)).representative == 1);
  CHECK(squarefree_part(Integer(-16200)).representative == -2);
  CHECK(squarefree_part(Integer(18)).representative == 2);
  CHECK(squarefree_part(Rational(25, 24)).representative == 6);
  CHECK_THROWS_AS(squarefree_part(Integer(0)), std::domain_error);
}

TEST_CASE("squarefree part is a square-class invariant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x(static_cast<long>(rng() % 4000) - 2000,
               static_cast<long>(rng() % 500) + 1);
    Rational t(static_cast<long>(rng() % 200) + 1,
               static_cast<long>(rng() % 200) + 1);
    x.canonicalize();
    t.canonicalize();
    if (x == 0) continue;
    CHECK(squarefree_part(Rational(x * t * t)) == squarefree_part(x));
  }
}

TEST_CASE("primes in open intervals") {
  CHECK(primes_in_interval(Rational(14), Rational(18)) ==
        std::vector<unsigned long>{17});
  CHECK(primes_in_interval(Rational(40, 3), Rational(17)).empty());
  CHECK(primes_in_interval(Rational(4), Rational(6)) ==
        std::vector<unsigned long>{5});
  // endpoints excluded
  CHECK(primes_in_interval(Rational(17), Rational(19)).empty());
  // negative lower bound takes the floor, not truncation
  CHECK(primes_in_interval(Rational(-5), Rational(3)) ==
        std::vector<unsigned long>{2});
  CHECK(primes_in_interval(Rational(-7, 2), Rational(11, 4)) ==
        std::vector<unsigned long>{2});
}

TEST_CASE("primes_in_interval agrees with is_prime filtering") {
  auto got = primes_in_interval(Rational(100), Rational(300));
  std::vector<unsigned long> expect;
  for (unsigned long n = 101; n < 300; ++n)
    if (is_prime(Integer(static_cast<long>(n)))) expect.push_back(n);
  CHECK(got == expect);
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime(Integer(17)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK_FALSE(is_prime(Integer(729)));  // 3^6
  CHECK(is_prime(Integer("1000000000039")));
  CHECK_FALSE(is_prime(Integer("1000000000041")));
  CHECK_FALSE(is_prime(Integer("25326001")));  // strong pseudoprime to 2,3,5
}

TEST_CASE("concurrent use of the shared sieve") {
  std::vector<std::thread> workers;
  std::vector<std::vector<unsigned long>> results(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([t, &results] {
      // staggered bounds force concurrent sieve growth
      results[t] = primes_in_interval(Rational(2), Rational(50000 + t * 10000));
      for (int i = 0; i < 50; ++i)
        (void)factorize(Integer(99991) * Integer(2 + i));
    });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) {
    CHECK(results[t].front() == 3);  // open interval excludes 2
    CHECK(is_prime(Integer(static_cast<long>(results[t].back()))));
  }
}

TEST_CASE("factorize round-trips and finds large factors") {
  auto fac = factorize(Integer(-16200));
  Integer back(1);
  for (auto& [p, e] : fac)
    for (unsigned long i = 0; i < e; ++i) back *= p;
  CHECK(back == 16200);
  // a product of two primes beyond the trial bound exercises the rho path
  Integer big = Integer(1000003) * Integer(1000033);
  auto fac2 = factorize(big, 1000);
  CHECK(fac2.size() == 2);
  CHECK(fac2[0].first == 1000003);
  CHECK(fac2[1].first == 1000033);
}
