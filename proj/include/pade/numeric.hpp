#ifndef PADE_NUMERIC_HPP
#define PADE_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pade {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation v_p of a nonzero integer. Throws std::domain_error on 0.
long valuation(unsigned long p, const Integer& x);

/// v_p extended to nonzero rationals: v_p(num) - v_p(den).
long valuation(unsigned long p, const Rational& x);

/// v_p(m!) by the digit formula (m - S_p(m)) / (p - 1).
long factorial_valuation(unsigned long p, const Integer& m);

struct DigitExpansion {
  unsigned long prime = 0;
  std::vector<unsigned long> digits;  // little-endian, no trailing zero
  unsigned long digit_sum() const;
};

/// Base-p digits of m >= 0; the expansion of 0 is empty.
DigitExpansion base_digits(unsigned long p, const Integer& m);

/// A rational's class in Q^x / Q^x2, represented by a squarefree integer.
struct SquareClass {
  Integer representative;
  bool operator==(const SquareClass&) const = default;
};

SquareClass squarefree_part(const Integer& x,
                            unsigned long trial_bound = 1000000);
SquareClass squarefree_part(const Rational& x,
                            unsigned long trial_bound = 1000000);

/// Deterministic primality: sieve for small n, fixed-base Miller-Rabin above
/// (the base set is exact far beyond the 10^12 contract range).
bool is_prime(const Integer& n);

/// All primes q with lo < q < hi (open interval), ascending.
std::vector<unsigned long> primes_in_interval(const Rational& lo,
                                              const Rational& hi);

/// Primes <= n from the shared sieve, ascending.
std::vector<unsigned long> primes_up_to(unsigned long n);

/// Complete factorization of |n|, n != 0: trial division by sieved primes up
/// to trial_bound, then Pollard-rho fallback. Pairs (prime, exponent),
/// ascending primes.
std::vector<std::pair<Integer, unsigned long>> factorize(
    const Integer& n, unsigned long trial_bound = 1000000);

/// Ascending prime divisors of |n| that fit in unsigned long.
std::vector<unsigned long> small_prime_divisors(const Integer& n);

}  // namespace pade

#endif
