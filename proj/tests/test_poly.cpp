#include <random>

#include "doctest.h"
#include "pade/families.hpp"
#include "pade/poly.hpp"

using namespace pade;

TEST_CASE("ring arithmetic") {
  Polynomial xp3{3, 1}, xm3{-3, 1};
  CHECK(xp3 * xm3 == Polynomial{-9, 0, 1});
  Polynomial f{1, 2, 3};
  CHECK(Polynomial() + f == f);
  CHECK(Polynomial{2, 1} * Polynomial{2, -1} == Polynomial{4, 0, -1});
  CHECK((f - f).is_zero());
  CHECK(f.degree() == 2);
  CHECK(Polynomial().degree() == -1);
}

TEST_CASE("degree of a product is the sum of degrees") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> a(rng() % 6 + 1), b(rng() % 6 + 1);
    for (auto& c : a) c = Integer(static_cast<long>(rng() % 19) - 9);
    for (auto& c : b) c = Integer(static_cast<long>(rng() % 19) - 9);
    Polynomial f{std::move(a)}, g{std::move(b)};
    if (f.is_zero() || g.is_zero()) continue;
    CHECK((f * g).degree() == f.degree() + g.degree());
  }
}

TEST_CASE("karatsuba agrees with direct convolution") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Integer> a(40 + rng() % 30), b(35 + rng() % 40);
    for (auto& c : a) c = Integer(static_cast<long>(rng() % 2001) - 1000);
    for (auto& c : b) c = Integer(static_cast<long>(rng() % 2001) - 1000);
    Polynomial f{a}, g{b};
    std::vector<Integer> conv(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) conv[i + j] += a[i] * b[j];
    CHECK(f * g == Polynomial{std::move(conv)});
  }
}

TEST_CASE("substitute_neg") {
  Polynomial q{6, -4, 1};  // x^2 - 4x + 6
  CHECK(q.substitute_neg() == Polynomial{6, 4, 1});
  Polynomial c{7};
  CHECK(c.substitute_neg() == c);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> a(rng() % 9 + 1);
    for (auto& x : a) x = Integer(static_cast<long>(rng() % 41) - 20);
    Polynomial f{std::move(a)};
    CHECK(f.substitute_neg().substitute_neg() == f);
  }
}

TEST_CASE("truncated multiplication") {
  Polynomial f{2, 2, 1}, g{2, -1};
  CHECK(truncated_mul(f, g, 3) == Polynomial{4, 2});
  Polynomial h{5, 7, 11, 13};
  CHECK(truncated_mul(h, Polynomial{1}, 2) == Polynomial{5, 7});
  CHECK(truncated_mul(h, g, 0).is_zero());
}

TEST_CASE("evaluation") {
  Polynomial f{3, 1};
  CHECK(f.evaluate(Rational(-3)) == 0);
  Polynomial g{20, 8, 1};
  CHECK(g.evaluate(Rational(0)) == 20);
  CHECK(exp_poly(2).evaluate(Integer(1)) == 5);
  CHECK(g.evaluate(Rational(1, 2)) == Rational(97, 4));
}

TEST_CASE("discriminant on fixed cases") {
  CHECK(discriminant(Polynomial{20, 8, 1}) == -16);
  CHECK(discriminant(Polynomial{-1, 0, 1}) == 4);
  CHECK(discriminant(Polynomial{3, 1}) == 1);
  CHECK_THROWS_AS(discriminant(Polynomial{5}), std::domain_error);
  CHECK_THROWS_AS(discriminant(Polynomial()), std::domain_error);
}

TEST_CASE("discriminant of (x-a)(x-b) is (a-b)^2") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    long a = static_cast<long>(rng() % 2001) - 1000;
    long b = static_cast<long>(rng() % 2001) - 1000;
    Polynomial f = Polynomial{-a, 1} * Polynomial{-b, 1};
    CHECK(discriminant(f) == Rational(Integer(a - b) * Integer(a - b)));
  }
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
  Polynomial sq = Polynomial{-2, 1} * Polynomial{-2, 1} * Polynomial{5, 1};
  CHECK(discriminant(sq) == 0);
  Polynomial sf = Polynomial{-2, 1} * Polynomial{2, 1} * Polynomial{5, 1};
  CHECK(discriminant(sf) != 0);
}

TEST_CASE("discriminant is invariant under x -> -x") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> a(rng() % 7 + 2);
    for (auto& x : a) x = Integer(static_cast<long>(rng() % 41) - 20);
    Polynomial f{std::move(a)};
    if (f.degree() < 1) continue;
    CHECK(discriminant(f.substitute_neg()) == discriminant(f));
  }
}

TEST_CASE("resultant basics") {
  // Res(x - a, g) = g(a)
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    long a = static_cast<long>(rng() % 41) - 20;
    std::vector<Integer> c(rng() % 5 + 1);
    for (auto& x : c) x = Integer(static_cast<long>(rng() % 21) - 10);
    Polynomial g{std::move(c)};
    if (g.is_zero()) continue;
    CHECK(resultant(Polynomial{-a, 1}, g) == g.evaluate(Integer(a)));
  }
  // multiplicativity in the first argument
  Polynomial f1{1, 3, 1}, f2{-2, 0, 5}, h{7, -1, 2};
  CHECK(resultant(f1 * f2, h) == resultant(f1, h) * resultant(f2, h));
  // constant scaling: Res(c f, g) = c^{deg g} Res(f, g)
  CHECK(resultant(Integer(-3) * f1, h) ==
        Integer(9) * resultant(f1, h));
}

namespace {

// independent oracle: Sylvester matrix determinant by exact rational
// elimination; first deg(g) rows carry f, next deg(f) rows carry g
Integer sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  long m = f.degree(), n = g.degree();
  REQUIRE(m >= 1);
  REQUIRE(n >= 1);
  long size = m + n;
  std::vector<std::vector<Rational>> M(size,
                                       std::vector<Rational>(size, Rational(0)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) M[i][i + j] = Rational(f.coeff(m - j));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) M[n + i][i + j] = Rational(g.coeff(n - j));
  Rational det(1);
  for (long col = 0; col < size; ++col) {
    long pivot = -1;
    for (long row = col; row < size; ++row)
      if (M[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Integer(0);
    if (pivot != col) {
      std::swap(M[pivot], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (long row = col + 1; row < size; ++row) {
      if (M[row][col] == 0) continue;
      Rational factor = M[row][col] / M[col][col];
      for (long k = col; k < size; ++k) M[row][k] -= factor * M[col][k];
    }
  }
  det.canonicalize();
  REQUIRE(det.get_den() == 1);
  return Integer(det.get_num());
}

}  // namespace

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
  // pinned case first: Res(x - 2, x^2 + 1) = g(2) = 5
  CHECK(sylvester_resultant(Polynomial{-2, 1}, Polynomial{1, 0, 1}) == 5);
  std::mt19937_64 rng(59);
  int done = 0;
  while (done < 150) {
    std::vector<Integer> a(rng() % 5 + 2), b(rng() % 5 + 2);
    for (auto& c : a) c = Integer(static_cast<long>(rng() % 21) - 10);
    for (auto& c : b) c = Integer(static_cast<long>(rng() % 21) - 10);
    Polynomial f{std::move(a)}, g{std::move(b)};
    if (f.degree() < 1 || g.degree() < 1) continue;
    CHECK(resultant(f, g) == sylvester_resultant(f, g));
    ++done;
  }
}

TEST_CASE("content and primitive part") {
  Polynomial f{6, -12, 18};
  CHECK(f.content() == 6);
  CHECK(f.primitive_part() == Polynomial{1, -2, 3});
  Polynomial g{-6, -12};
  CHECK(g.content() == -6);  // sign follows the leading coefficient
  CHECK(g.primitive_part() == Polynomial{1, 2});
}

TEST_CASE("text round trip") {
  Polynomial f{3024, 1344, 252, 24, 1};
  CHECK(f.to_text() == "3024 1344 252 24 1");
  CHECK(Polynomial::from_text(f.to_text()) == f);
  CHECK(Polynomial::from_text("-7  0 13") == Polynomial{-7, 0, 13});
}
