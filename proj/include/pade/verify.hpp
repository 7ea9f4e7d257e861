#ifndef PADE_VERIFY_HPP
#define PADE_VERIFY_HPP

#include <string>
#include <vector>

#include "pade/galois.hpp"

namespace pade {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  unsigned long seed = 1;
  bool all_ok() const;
  std::size_t failures() const;
};

/// e_n * Q = c * P through x^{u+v} for every u+v <= max_total, n <= max_n.
SuiteReport run_pade_identity_suite(long max_total = 16, long max_n = 16);

/// P(u,v,x) = Q(v,u,-x) exactly for u, v <= max_uv.
SuiteReport run_symmetry_suite(long max_uv = 30);

/// closed_form_disc == resultant discriminant for n <= max_n, r <= max_r,
/// plus the negative control at (2,3) for the (-1)^u sign variant.
SuiteReport run_discriminant_suite(long max_n = 12, long max_r = 12);

/// disc_square_class of P/Q(m,m+1) against the case table, 2 <= m <= m_max.
SuiteReport run_square_class_suite(long m_max = 40);

/// verify_eisenstein_theorem over the given (p, n) cases, both sides.
SuiteReport run_eisenstein_suite(
    const std::vector<std::pair<unsigned long, long>>& cases, long budget = 400);

/// schur_congruence_check for both families, both deltas, m <= m_max.
SuiteReport run_schur_suite(long m_max = 40,
                            const std::vector<unsigned long>& primes = {3, 5,
                                                                        7});

SuiteReport run_prime_gap_suite(long lo, long hi);

/// near_eisenstein_analysis for each p; checks constraints and exclusion.
SuiteReport run_near_eisenstein_suite(
    const std::vector<unsigned long>& ps = {3, 5, 7, 11, 13},
    unsigned long seed = 1);

/// e_n certified A_n iff n = 0 mod 4, else S_n, for n_lo <= n <= n_hi.
SuiteReport run_coleman_suite(long n_lo = 3, long n_hi = 15,
                              unsigned long seed = 1);

}  // namespace pade

#endif
