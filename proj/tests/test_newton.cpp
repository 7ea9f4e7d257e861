#include <random>

#include "doctest.h"
#include "pade/families.hpp"
#include "pade/newton.hpp"

using namespace pade;

TEST_CASE("polygon of P(3,4) at 3 and 7") {
  Polynomial f = pade_pair(3, 4).first;  // x^3 + 15x^2 + 90x + 210
  NewtonPolygon at3 = newton_polygon(f, 3);
  REQUIRE(at3.segments.size() == 1);
  CHECK(at3.vertices.front() == std::make_pair(0l, 1l));
  CHECK(at3.vertices.back() == std::make_pair(3l, 0l));
  CHECK(at3.segments[0].slope == Rational(-1, 3));
  CHECK(at3.segments[0].length == 3);

  NewtonPolygon at7 = newton_polygon(f, 7);
  REQUIRE(at7.segments.size() == 2);
  CHECK(at7.segments[0].slope == -1);
  CHECK(at7.segments[0].length == 1);
  CHECK(at7.segments[1].slope == 0);
  CHECK(at7.segments[1].length == 2);
  CHECK(at7.flatness == 2);
  CHECK(at7.steepness == 1);
}

TEST_CASE("trivial polygon") {
  NewtonPolygon np = newton_polygon(Polynomial{3, 1}, 5);
  REQUIRE(np.segments.size() == 1);
  CHECK(np.segments[0].slope == 0);
  CHECK(np.steepness == 0);
  CHECK_THROWS_AS(newton_polygon(Polynomial(), 5), std::domain_error);
}

TEST_CASE("min-valuation index set") {
  Polynomial f{18, 6, 12, 1};  // v_3 = 2, 1, 1, 0
  NewtonPolygon np = newton_polygon(f, 3);
  CHECK(np.min_valuation_indices == std::vector<long>{3});
  NewtonPolygon np2 = newton_polygon(f, 7);
  CHECK(np2.min_valuation_indices == std::vector<long>{0, 1, 2, 3});
}

TEST_CASE("newton index") {
  Polynomial f = pade_pair(3, 4).first;
  CHECK(newton_index(f) == 6);  // slope denominators 2, 3, 3, 1 at 2, 3, 5, 7
  Integer s3_order(6);
  CHECK(mpz_divisible_p(s3_order.get_mpz_t(), newton_index(f).get_mpz_t()));
  CHECK(newton_index(Polynomial{3, 1}) == 1);
  CHECK_THROWS_AS(newton_index(Polynomial{0, 3, 1}), std::domain_error);
}

TEST_CASE("eisenstein-dumas criterion") {
  CHECK(eisenstein_dumas(pade_pair(3, 4).first, 3));
  // P(9,10): v_3(a_0) = 4, gcd(4, 9) = 1
  Polynomial f = pade_pair(9, 10).first;
  CHECK(valuation(3, f.coeff(0)) == 4);
  CHECK(eisenstein_dumas(f, 3));
  CHECK_FALSE(eisenstein_dumas(Polynomial{-1, 0, 1}, 3));
  CHECK_FALSE(eisenstein_dumas(Polynomial{-1, 0, 1}, 5));
  // classic Eisenstein at 2, but gcd(2, 2) > 1 for v(a_0) = 2
  CHECK(eisenstein_dumas(Polynomial{2, 2, 1}, 2));
  CHECK_FALSE(eisenstein_dumas(Polynomial{4, 2, 1}, 2));
}

TEST_CASE("local degree constraints") {
  auto cons = local_degree_constraints(pade_pair(4, 5).first, 3);
  REQUIRE(cons.size() == 2);
  CHECK(cons[0].slope == -2);
  CHECK(cons[0].length == 1);
  CHECK(cons[0].allowed == std::vector<long>{1});
  CHECK(cons[1].slope == Rational(-1, 3));
  CHECK(cons[1].allowed == std::vector<long>{3});

  auto single = local_degree_constraints(pade_pair(3, 4).first, 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0].allowed == std::vector<long>{3});

  auto flat = local_degree_constraints(Polynomial{-1, 0, 1}, 3);
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].slope == 0);
  CHECK(flat[0].allowed == std::vector<long>{1, 2});
}

TEST_CASE("possible factor degrees, fixed cases") {
  CHECK(possible_factor_degrees(pade_pair(4, 5).first, {3}) ==
        std::set<long>{0, 1, 3, 4});
  CHECK(possible_factor_degrees(pade_pair(3, 4).first, {3}) ==
        std::set<long>{0, 3});
  CHECK(possible_factor_degrees(Polynomial{-1, 0, 1}, {5}) ==
        std::set<long>{0, 1, 2});
  CHECK_THROWS_WITH_AS(
      possible_factor_degrees(Polynomial{-2, 1} * Polynomial{-2, 1}, {3}),
      "not squarefree", std::domain_error);
}

TEST_CASE("eisenstein-dumas forces the two-element degree set") {
  for (long m : {2, 3, 9}) {
    Polynomial f = pade_pair(m, m + 1).first;
    if (eisenstein_dumas(f, 3))
      CHECK(possible_factor_degrees(f, {3}) ==
            std::set<long>{0, f.degree()});
  }
}

TEST_CASE("flatness and steepness") {
  auto [l1, m1] = flatness_steepness(pade_pair(4, 5).first, 3);
  CHECK(l1 == 0);
  CHECK(m1 == 2);
  auto [l2, m2] = flatness_steepness(pade_pair(3, 4).first, 7);
  CHECK(l2 == 2);
  CHECK(m2 == 1);
  auto [l3, m3] = flatness_steepness(Polynomial{1, 7, 0, 1}, 5);
  CHECK(l3 == 3);  // monic, p does not divide a_0
  CHECK(m3 == 0);
}

TEST_CASE("degree exclusion interval") {
  auto e1 = degree_exclusion_interval(pade_pair(4, 5).first, 3);
  CHECK(e1.u == 1);
  CHECK(e1.bounded);
  CHECK(e1.bound == 3);
  for (unsigned long p : {5ul, 7ul}) {
    auto e = degree_exclusion_interval(
        pade_pair(static_cast<long>(p) + 1, static_cast<long>(p) + 2).first,
        p);
    CHECK(e.u == 1);
    CHECK(e.bound == Rational(static_cast<long>(p)));
  }
  // Eisenstein polynomial of degree n: interval (0, n)
  auto e2 = degree_exclusion_interval(Polynomial{3, 3, 3, 1}, 3);
  CHECK(e2.u == 0);
  CHECK(e2.bound == 3);
  // trivial polygon: vacuous interval
  auto e3 = degree_exclusion_interval(Polynomial{1, 7, 0, 1}, 5);
  CHECK(e3.u == 3);
  CHECK_FALSE(e3.bounded);
}

TEST_CASE("hull invariants on random polynomials") {
  std::mt19937_64 rng(41);
  const unsigned long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> c(rng() % 9 + 2);
    for (auto& x : c) x = Integer(static_cast<long>(rng() % 20001) - 10000);
    Polynomial f{std::move(c)};
    if (f.is_zero()) continue;
    unsigned long p = primes[trial % 4];
    NewtonPolygon np = newton_polygon(f, p);
    long total = 0;
    for (auto& s : np.segments) total += s.length;
    CHECK(total + np.lowest_index == f.degree());
    for (std::size_t i = 1; i < np.segments.size(); ++i)
      CHECK(np.segments[i - 1].slope < np.segments[i].slope);
    // every point lies on or above the hull
    for (long j = 0; j <= f.degree(); ++j) {
      if (f.coeff(j) == 0) continue;
      Rational y(valuation(p, f.coeff(j)));
      for (std::size_t i = 1; i < np.vertices.size(); ++i) {
        auto [x0, y0] = np.vertices[i - 1];
        auto [x1, y1] = np.vertices[i];
        if (j < x0 || j > x1) continue;
        Rational hull_y =
            Rational(y0) + Rational(y1 - y0, x1 - x0) * Rational(j - x0);
        hull_y.canonicalize();
        CHECK(y >= hull_y);
      }
    }
  }
}

TEST_CASE("factor degrees of known products survive the sieve") {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 300) {
    // f = product of 2..3 random factors of degree 1..4
    int parts = 2 + static_cast<int>(rng() % 2);
    Polynomial f{1};
    std::vector<long> degrees;
    for (int i = 0; i < parts; ++i) {
      std::vector<Integer> c(rng() % 4 + 2);
      for (auto& x : c) x = Integer(static_cast<long>(rng() % 21) - 10);
      c.back() = 1 + static_cast<long>(rng() % 3);  // keep lc positive
      Polynomial g{std::move(c)};
      degrees.push_back(g.degree());
      f = f * g;
    }
    if (f.degree() > 10 || f.degree() < 2) continue;
    if (discriminant(f) == 0) continue;
    std::vector<unsigned long> primes;
    for (unsigned long p : {3ul, 5ul, 7ul})
      if (!mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) primes.push_back(p);
    std::set<long> possible = possible_factor_degrees(f, primes);
    // every subset-sum of true factor degrees is a rational factor degree
    std::set<long> sums{0};
    for (long d : degrees) {
      std::set<long> next = sums;
      for (long s : sums) next.insert(s + d);
      sums.swap(next);
    }
    for (long s : sums) CHECK(possible.count(s) == 1);
    ++done;
  }
}
