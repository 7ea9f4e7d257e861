#include "pade/numeric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pade {

namespace {

std::vector<unsigned long> g_primes;
unsigned long g_sieved_to = 0;
std::mutex g_sieve_mutex;

void ensure_sieve(unsigned long bound) {
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  if (bound <= g_sieved_to) return;
  unsigned long target = std::max<unsigned long>(bound, 1u << 16);
  target = std::max(target, 2 * g_sieved_to);
  std::vector<bool> composite(target + 1, false);
  std::vector<unsigned long> primes;
  for (unsigned long i = 2; i <= target; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      for (unsigned long j = i * i; j <= target; j += i) composite[j] = true;
      if (i > target / i) {
        for (unsigned long k = i + 1; k <= target; ++k)
          if (!composite[k]) primes.push_back(k);
        break;
      }
    }
  }
  g_primes = std::move(primes);
  g_sieved_to = target;
}

// Miller-Rabin with a fixed base set, deterministic for n < 3.3 * 10^24.
constexpr unsigned long kMrBases[] = {2,  3,  5,  7,  11, 13,
                                      17, 19, 23, 29, 31, 37};

bool miller_rabin(const Integer& n) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : kMrBases) {
    if (mpz_cmp_ui(n.get_mpz_t(), a) <= 0) break;
    Integer base(a), x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Integer pollard_brent(const Integer& n) {
  // Brent's cycle variant; deterministic parameter sweep keeps it total.
  for (unsigned long c = 1;; ++c) {
    Integer x(2), y(2), d(1), q(1), ys, saved_x;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (d == 1) {
      saved_x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min<unsigned long>(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(saved_x - y) % n;
        }
        d = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      y = ys;
      while (d == 1) {
        y = (y * y + c) % n;
        d = gcd(abs(saved_x - y), n);
      }
    }
    if (d != n) return d;
  }
}

void factor_rec(const Integer& n,
                std::vector<std::pair<Integer, unsigned long>>& out) {
  if (n == 1) return;
  if (mpz_even_p(n.get_mpz_t())) {
    unsigned long e = mpz_scan1(n.get_mpz_t(), 0);
    out.emplace_back(2, e);
    Integer odd;
    mpz_fdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), e);
    factor_rec(odd, out);
    return;
  }
  if (is_prime(n)) {
    out.emplace_back(n, 1);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2;; ++e) {
      Integer root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), e);
      if (rem == 0) {
        std::vector<std::pair<Integer, unsigned long>> base;
        factor_rec(root, base);
        for (auto& [p, k] : base) out.emplace_back(p, k * e);
        return;
      }
      if (root <= 1) break;
    }
  }
  Integer d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

long valuation(unsigned long p, const Integer& x) {
  if (x == 0) throw std::domain_error("valuation of zero undefined");
  Integer stripped, pz(p);
  return static_cast<long>(
      mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long valuation(unsigned long p, const Rational& x) {
  if (x == 0) throw std::domain_error("valuation of zero undefined");
  return valuation(p, Integer(x.get_num())) -
         valuation(p, Integer(x.get_den()));
}

long factorial_valuation(unsigned long p, const Integer& m) {
  if (m < 0) throw std::invalid_argument("factorial of negative");
  DigitExpansion d = base_digits(p, m);
  Integer v = (m - d.digit_sum()) / (p - 1);
  return static_cast<long>(v.get_si());
}

unsigned long DigitExpansion::digit_sum() const {
  unsigned long s = 0;
  for (unsigned long d : digits) s += d;
  return s;
}

DigitExpansion base_digits(unsigned long p, const Integer& m) {
  if (p < 2) throw std::invalid_argument("base must be >= 2");
  if (m < 0) throw std::invalid_argument("digit expansion of negative");
  DigitExpansion out;
  out.prime = p;
  Integer rest = m;
  while (rest > 0) {
    out.digits.push_back(mpz_fdiv_ui(rest.get_mpz_t(), p));
    rest /= p;
  }
  return out;
}

SquareClass squarefree_part(const Integer& x, unsigned long trial_bound) {
  if (x == 0) throw std::domain_error("square class of zero undefined");
  Integer rep = sgn(x) < 0 ? Integer(-1) : Integer(1);
  for (const auto& [p, e] : factorize(abs(x), trial_bound))
    if (e % 2 == 1) rep *= p;
  return SquareClass{rep};
}

SquareClass squarefree_part(const Rational& x, unsigned long trial_bound) {
  if (x == 0) throw std::domain_error("square class of zero undefined");
  // num/den and num*den differ by the square den^2
  return squarefree_part(Integer(x.get_num() * x.get_den()), trial_bound);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    unsigned long v = n.get_ui();
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul}) {
      if (v == p) return true;
      if (v % p == 0) return false;
      if (p * p > v) return true;
    }
  } else if (mpz_even_p(n.get_mpz_t())) {
    return false;
  }
  return miller_rabin(n);
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  ensure_sieve(n);
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  auto end = std::upper_bound(g_primes.begin(), g_primes.end(), n);
  return std::vector<unsigned long>(g_primes.begin(), end);
}

std::vector<unsigned long> primes_in_interval(const Rational& lo,
                                              const Rational& hi) {
  if (lo >= hi) throw std::invalid_argument("empty interval bounds");
  Integer first, last;
  mpz_fdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  ++first;  // floor(lo) + 1 > lo
  mpz_cdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
  --last;  // ceil(hi) - 1 < hi
  std::vector<unsigned long> out;
  if (last < 2 || first > last) return out;
  if (first < 2) first = 2;
  unsigned long a = first.get_ui(), b = last.get_ui();
  for (unsigned long q : primes_up_to(b))
    if (q >= a) out.push_back(q);
  return out;
}

std::vector<std::pair<Integer, unsigned long>> factorize(
    const Integer& n, unsigned long trial_bound) {
  if (n == 0) throw std::domain_error("factorization of zero undefined");
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned long>> out;
  if (rest == 1) return out;
  for (unsigned long p : primes_up_to(trial_bound)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned long e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      out.emplace_back(p, e);
    }
  }
  if (rest > 1) {
    std::vector<std::pair<Integer, unsigned long>> hard;
    factor_rec(rest, hard);
    std::sort(hard.begin(), hard.end());
    for (std::size_t i = 0; i < hard.size(); ++i) {
      if (!out.empty() && out.back().first == hard[i].first)
        out.back().second += hard[i].second;
      else
        out.push_back(hard[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<unsigned long> small_prime_divisors(const Integer& n) {
  std::vector<unsigned long> out;
  for (const auto& [p, e] : factorize(n))
    if (mpz_fits_ulong_p(p.get_mpz_t())) out.push_back(p.get_ui());
  return out;
}

}  // namespace pade
