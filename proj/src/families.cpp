#include "pade/families.hpp"

#include <stdexcept>

#include "pade/modpoly.hpp"

namespace pade {

namespace {

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

FamilySpec FamilySpec::pade_p(long u, long v) {
  if (u < 0 || v < 0 || u + v < 1)
    throw std::invalid_argument("P(u,v) requires u, v >= 0 with u + v >= 1");
  FamilySpec s;
  s.family = Family::P;
  s.u = u;
  s.v = v;
  return s;
}

FamilySpec FamilySpec::pade_q(long u, long v) {
  if (u < 0 || v < 0 || u + v < 1)
    throw std::invalid_argument("Q(u,v) requires u, v >= 0 with u + v >= 1");
  FamilySpec s;
  s.family = Family::Q;
  s.u = u;
  s.v = v;
  return s;
}

FamilySpec FamilySpec::exp(long n) {
  if (n < 1) throw std::invalid_argument("e_n requires n >= 1");
  FamilySpec s;
  s.family = Family::Exp;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::shifted_glp(long n, long r) {
  if (n < 1) throw std::invalid_argument("shifted GLP requires n >= 1");
  FamilySpec s;
  s.family = Family::ShiftedGlp;
  s.n = n;
  s.r = r;
  return s;
}

long FamilySpec::degree() const {
  switch (family) {
    case Family::P:
      return u;
    case Family::Q:
      return v;
    default:
      return n;
  }
}

std::string FamilySpec::name() const {
  switch (family) {
    case Family::P:
      return "P(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Family::Q:
      return "Q(" + std::to_string(u) + "," + std::to_string(v) + ")";
    case Family::Exp:
      return "e_" + std::to_string(n);
    case Family::Glp:
      return "L^(alpha)_" + std::to_string(n);
    case Family::ShiftedGlp:
      return "L<" + std::to_string(r) + ">_" + std::to_string(n);
  }
  return "?";
}

Polynomial exp_poly(long n) {
  if (n < 0) throw std::invalid_argument("e_n requires n >= 0");
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  for (long j = n; j > 0; --j) c[j - 1] = c[j] * j;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> pade_pair(long u, long v) {
  if (u < 0 || v < 0 || u + v < 1)
    throw std::invalid_argument("pade_pair requires u, v >= 0 with u + v >= 1");
  std::vector<Integer> pc(u + 1), qc(v + 1);
  Integer vfac = factorial(v), ufac = factorial(u);
  for (long j = 0; j <= u; ++j) {
    Integer t = factorial(u + v - j) * binomial(u, j);
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), vfac.get_mpz_t());
    pc[j] = t;
  }
  for (long j = 0; j <= v; ++j) {
    Integer t = factorial(u + v - j) * binomial(v, j);
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), ufac.get_mpz_t());
    qc[j] = (j % 2 == 0) ? t : Integer(-t);
  }
  return {Polynomial(std::move(pc)), Polynomial(std::move(qc))};
}

std::vector<Rational> glp(long n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("GLP requires n >= 1");
  std::vector<Rational> c(n + 1);
  int outer = (n % 2 == 0) ? 1 : -1;
  for (long j = 0; j <= n; ++j) {
    // binom(n + alpha, n - j) = prod_{i=0}^{n-j-1} (n + alpha - i) / (n-j)!
    Rational num(1);
    for (long i = 0; i < n - j; ++i)
      num *= Rational(n) + alpha - Rational(i);
    Rational term = num / Rational(factorial(n - j) * factorial(j));
    int sign = ((j % 2 == 0) ? 1 : -1) * outer;
    c[j] = sign > 0 ? term : Rational(-term);
    c[j].canonicalize();
  }
  return c;
}

Polynomial shifted_glp(long n, long r) {
  if (n < 1) throw std::invalid_argument("shifted GLP requires n >= 1");
  std::vector<Integer> c(n + 1);
  for (long j = 0; j <= n; ++j) {
    Integer prod(1);
    for (long i = 1; i <= n - j; ++i) prod *= Integer(r + i);
    c[j] = binomial(n, j) * prod;
  }
  return Polynomial(std::move(c));
}

Integer closed_form_disc(long n, long r) {
  if (n < 1) throw std::invalid_argument("closed_form_disc requires n >= 1");
  if (r < 0) throw std::invalid_argument("closed_form_disc requires r >= 0");
  Integer d(1);
  for (long j = 2; j <= n; ++j) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), j, j);
    d *= t;
  }
  for (long j = 1; j < n; ++j) {
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), r + j, n - j);
    d *= t;
  }
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

Polynomial construct(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::P:
      return pade_pair(spec.u, spec.v).first;
    case Family::Q:
      return pade_pair(spec.u, spec.v).second;
    case Family::Exp:
      return exp_poly(spec.n);
    case Family::ShiftedGlp:
      return shifted_glp(spec.n, spec.r);
    case Family::Glp:
      throw std::invalid_argument(
          "raw GLP has rational coefficients; use the shifted normalization");
  }
  throw std::logic_error("unknown family");
}

PadeIdentityReport verify_pade_identity(long u, long v, long n) {
  if (u < 0 || v < 0 || u + v < 1)
    throw std::invalid_argument("requires u, v >= 0 with u + v >= 1");
  if (n < u + v) throw std::invalid_argument("requires n >= u + v");
  PadeIdentityReport rep;
  rep.u = u;
  rep.v = v;
  rep.n = n;
  rep.scalar = Rational(factorial(n) * factorial(v), factorial(u));
  rep.scalar.canonicalize();
  auto [P, Q] = pade_pair(u, v);
  Polynomial lhs = factorial(u) * truncated_mul(exp_poly(n), Q, u + v + 1);
  Polynomial rhs =
      (factorial(n) * factorial(v)) * truncated_mul(P, Polynomial{1}, u + v + 1);
  rep.ok = (lhs == rhs);
  return rep;
}

SchurReport schur_congruence_check(Family family, long m, unsigned long p,
                                   int delta) {
  if (family != Family::P && family != Family::Q)
    throw std::invalid_argument("schur check applies to the P/Q families");
  if (m < 1) throw std::invalid_argument("requires m >= 1");
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta in {0,1}");
  if (p < 3 || !is_prime(Integer(static_cast<long>(p))))
    throw std::invalid_argument("requires an odd prime");
  SchurReport rep;
  rep.family = family;
  rep.m = m;
  rep.delta = delta;
  rep.p = p;
  rep.u = m % static_cast<long>(p);
  rep.k = m / static_cast<long>(p);

  auto member = [&](long mm) -> Polynomial {
    if (mm == 0 && delta == 0) return Polynomial{1};  // P(0,0) = Q(0,0) = 1
    auto [P, Q] = pade_pair(mm, mm + delta);
    return family == Family::P ? P : Q;
  };
  ModPoly big = reduce_mod(member(m), p);
  ModPoly small = reduce_mod(member(rep.u), p);

  long shift = rep.k * static_cast<long>(p);
  rep.ok = false;
  rep.scalar = 1;
  if (big.degree() == small.degree() + shift && !small.is_zero()) {
    // candidate scalar from the leading coefficients, then full comparison
    unsigned long inv = 1;
    {
      unsigned long a = small.leading(), r = 1, e = p - 2, base = a;
      while (e) {
        if (e & 1)
          r = static_cast<unsigned long>(
              static_cast<unsigned __int128>(r) * base % p);
        base = static_cast<unsigned long>(
            static_cast<unsigned __int128>(base) * base % p);
        e >>= 1;
      }
      inv = r;
    }
    unsigned long c = static_cast<unsigned long>(
        static_cast<unsigned __int128>(big.leading()) * inv % p);
    bool match = c != 0;
    for (long j = 0; match && j <= big.degree(); ++j) {
      unsigned long expect =
          j < shift ? 0
                    : static_cast<unsigned long>(
                          static_cast<unsigned __int128>(c) *
                          small.coeff(j - shift) % p);
      if (big.coeff(j) != expect) match = false;
    }
    if (match) {
      rep.ok = true;
      rep.scalar = c;
    }
  }
  return rep;
}

}  // namespace pade
