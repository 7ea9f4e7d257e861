#include "pade/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pade {

namespace {

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
  return static_cast<unsigned long>(
      static_cast<unsigned __int128>(a) * b % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

unsigned long invmod(unsigned long a, unsigned long p) {
  return powmod(a, p - 2, p);  // p prime
}

void check_same_prime(const ModPoly& a, const ModPoly& b) {
  if (a.p != b.p) throw std::invalid_argument("mixed moduli");
}

// quotient and remainder of a by b (b nonzero)
std::pair<ModPoly, ModPoly> mod_divmod(const ModPoly& a, const ModPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  unsigned long p = b.p;
  ModPoly r = a, q;
  q.p = p;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, 0);
  unsigned long inv_lead = invmod(b.leading(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    unsigned long coef = mulmod(r.leading(), inv_lead, p);
    long shift = r.degree() - b.degree();
    q.c[shift] = coef;
    for (long i = 0; i <= b.degree(); ++i) {
      unsigned long sub = mulmod(coef, b.c[i], p);
      r.c[i + shift] = (r.c[i + shift] + p - sub) % p;
    }
    r.normalize();
  }
  q.normalize();
  return {std::move(q), std::move(r)};
}

ModPoly mod_divexact(const ModPoly& a, const ModPoly& b) {
  auto [q, r] = mod_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

ModPoly x_poly(unsigned long p) { return ModPoly{p, {0, 1}}; }

// p-th root in F_p[x]; valid when f = g^p (exponents multiples of p).
ModPoly pth_root(const ModPoly& f) {
  ModPoly out;
  out.p = f.p;
  for (std::size_t j = 0; j < f.c.size(); j += f.p) out.c.push_back(f.c[j]);
  out.normalize();
  return out;
}

ModPoly random_poly(unsigned long p, long max_deg, std::mt19937_64& rng) {
  ModPoly out;
  out.p = p;
  out.c.resize(max_deg + 1);
  for (auto& x : out.c) x = rng() % p;
  out.normalize();
  return out;
}

// f monic squarefree, every irreducible factor of degree d
void equal_degree_split(const ModPoly& f, long d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  unsigned long p = f.p;
  while (true) {
    ModPoly a = random_poly(p, f.degree() - 1, rng);
    if (a.degree() < 1) continue;  // constants never split
    ModPoly g = mod_gcd(a, f);
    if (g.degree() == 0) {
      if (p == 2) {
        // trace map T(a) = a + a^2 + ... + a^(2^(d-1))
        ModPoly b = mod_rem(a, f), t = b;
        for (long i = 1; i < d; ++i) {
          t = mod_rem(mod_mul(t, t), f);
          b = mod_add(b, t);
        }
        g = mod_gcd(b, f);
      } else {
        Integer e(static_cast<long>(p));
        mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), d);
        e = (e - 1) / 2;
        ModPoly b = mod_sub(mod_pow(a, e, f), ModPoly{p, {1}});
        g = mod_gcd(b, f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(mod_monic(g), d, rng, out);
      equal_degree_split(mod_divexact(f, g), d, rng, out);
      return;
    }
  }
}

// squarefree decomposition of monic f: list of (monic squarefree, multiplicity)
std::vector<std::pair<ModPoly, unsigned long>> squarefree_decomposition(
    const ModPoly& f) {
  std::vector<std::pair<ModPoly, unsigned long>> out;
  struct Item {
    ModPoly poly;
    unsigned long mult;
  };
  std::vector<Item> stack{{f, 1}};
  while (!stack.empty()) {
    auto [fi, mult] = stack.back();
    stack.pop_back();
    if (fi.degree() < 1) continue;
    ModPoly d = mod_derivative(fi);
    if (d.is_zero()) {
      stack.push_back({pth_root(fi), mult * fi.p});
      continue;
    }
    ModPoly c = mod_gcd(fi, d);
    ModPoly w = mod_divexact(fi, c);
    unsigned long i = 1;
    while (w.degree() > 0) {
      ModPoly y = mod_gcd(w, c);
      ModPoly z = mod_divexact(w, y);
      if (z.degree() > 0) out.emplace_back(mod_monic(z), mult * i);
      ++i;
      c = mod_divexact(c, y);
      w = std::move(y);
    }
    if (c.degree() > 0) stack.push_back({pth_root(c), mult * fi.p});
  }
  return out;
}

}  // namespace

ModPoly reduce_mod(const Polynomial& f, unsigned long p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  ModPoly out;
  out.p = p;
  out.c.reserve(f.coeffs().size());
  for (const Integer& a : f.coeffs())
    out.c.push_back(mpz_fdiv_ui(a.get_mpz_t(), p));
  out.normalize();
  return out;
}

Polynomial lift(const ModPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.c.size());
  for (unsigned long x : f.c) c.emplace_back(x);
  return Polynomial(std::move(c));
}

ModPoly mod_add(const ModPoly& a, const ModPoly& b) {
  check_same_prime(a, b);
  ModPoly out;
  out.p = a.p;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = (a.coeff(i) + b.coeff(i)) % a.p;
  out.normalize();
  return out;
}

ModPoly mod_sub(const ModPoly& a, const ModPoly& b) {
  check_same_prime(a, b);
  ModPoly out;
  out.p = a.p;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = (a.coeff(i) + a.p - b.coeff(i)) % a.p;
  out.normalize();
  return out;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b) {
  check_same_prime(a, b);
  ModPoly out;
  out.p = a.p;
  if (a.is_zero() || b.is_zero()) return out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      unsigned __int128 acc =
          static_cast<unsigned __int128>(a.c[i]) * b.c[j] + out.c[i + j];
      out.c[i + j] = static_cast<unsigned long>(acc % a.p);
    }
  }
  out.normalize();
  return out;
}

ModPoly mod_rem(const ModPoly& a, const ModPoly& b) {
  check_same_prime(a, b);
  return mod_divmod(a, b).second;
}

ModPoly mod_monic(const ModPoly& a) {
  if (a.is_zero() || a.leading() == 1) return a;
  ModPoly out = a;
  unsigned long inv = invmod(a.leading(), a.p);
  for (unsigned long& x : out.c) x = mulmod(x, inv, a.p);
  return out;
}

ModPoly mod_gcd(ModPoly a, ModPoly b) {
  check_same_prime(a, b);
  while (!b.is_zero()) {
    ModPoly r = mod_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return mod_monic(a);
}

ModPoly mod_derivative(const ModPoly& a) {
  ModPoly out;
  out.p = a.p;
  if (a.degree() < 1) return out;
  out.c.resize(a.c.size() - 1);
  for (std::size_t j = 1; j < a.c.size(); ++j)
    out.c[j - 1] = mulmod(a.c[j], j % a.p, a.p);
  out.normalize();
  return out;
}

ModPoly mod_pow(const ModPoly& base, const Integer& e, const ModPoly& mod) {
  ModPoly result{mod.p, {1}};
  if (e == 0) return result;
  if (e < 0) throw std::invalid_argument("negative exponent");
  ModPoly b = mod_rem(base, mod);
  long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (long i = bits - 1; i >= 0; --i) {
    result = mod_rem(mod_mul(result, result), mod);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = mod_rem(mod_mul(result, b), mod);
  }
  return result;
}

unsigned long mod_eval(const ModPoly& a, unsigned long x) {
  unsigned long acc = 0;
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
    acc = (mulmod(acc, x, a.p) + *it) % a.p;
  return acc;
}

FactorizationModP factor_mod(const ModPoly& f, unsigned long seed) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  FactorizationModP out;
  out.p = f.p;
  out.seed = seed;
  out.unit = f.degree() >= 0 && !f.is_zero() ? f.leading() : 1;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(seed);

  for (auto& [part, mult] : squarefree_decomposition(mod_monic(f))) {
    // distinct-degree: peel factors of degree d = 1, 2, ...
    ModPoly rest = part;
    ModPoly h = mod_rem(x_poly(f.p), rest);
    long d = 0;
    while (rest.degree() > 0) {
      ++d;
      if (2 * d > rest.degree()) {
        out.factors.emplace_back(rest, mult);
        break;
      }
      h = mod_pow(h, Integer(static_cast<long>(f.p)), rest);
      ModPoly g = mod_gcd(mod_sub(h, mod_rem(x_poly(f.p), rest)), rest);
      if (g.degree() > 0) {
        std::vector<ModPoly> irreducibles;
        equal_degree_split(g, d, rng, irreducibles);
        for (ModPoly& irr : irreducibles)
          out.factors.emplace_back(std::move(irr), mult);
        rest = mod_divexact(rest, g);
        h = mod_rem(h, rest);
      }
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              if (a.first.c != b.first.c) return a.first.c < b.first.c;
              return a.second < b.second;
            });
  return out;
}

std::vector<long> factor_degrees(const FactorizationModP& fac) {
  std::vector<long> out;
  for (const auto& [poly, mult] : fac.factors)
    for (unsigned long i = 0; i < mult; ++i) out.push_back(poly.degree());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<ModRoot> roots_mod(const ModPoly& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  std::vector<ModRoot> out;
  if (f.degree() == 0) return out;
  ModPoly d = mod_derivative(f);
  for (unsigned long r = 0; r < f.p; ++r) {
    if (mod_eval(f, r) == 0) {
      bool multiple = d.is_zero() || mod_eval(d, r) == 0;
      out.push_back({r, multiple});
    }
  }
  return out;
}

}  // namespace pade
