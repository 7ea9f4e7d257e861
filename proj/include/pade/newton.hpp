#ifndef PADE_NEWTON_HPP
#define PADE_NEWTON_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pade/modpoly.hpp"
#include "pade/poly.hpp"

namespace pade {

struct NewtonSegment {
  Rational slope;
  long length = 0;  // horizontal
  bool operator==(const NewtonSegment&) const = default;
};

/// p-adic Newton polygon: lower convex hull of (j, v_p(a_j)) over the nonzero
/// coefficients, plus the derived flatness/steepness data.
struct NewtonPolygon {
  unsigned long prime = 0;
  long lowest_index = 0;  // order of vanishing at 0
  std::vector<std::pair<long, long>> vertices;  // ascending in j
  std::vector<NewtonSegment> segments;          // strictly increasing slopes
  long flatness = 0;                            // total slope-0 length
  Rational steepness;                           // max |slope|, 0 if trivial
  std::vector<long> min_valuation_indices;      // ell_v(f), ascending
};

NewtonPolygon newton_polygon(const Polynomial& f, unsigned long p);

/// lcm of the denominators of all polygon slopes over all primes; for integral
/// f with f(0) != 0 only primes dividing a_0 * lc contribute nontrivially.
Integer newton_index(const Polynomial& f);

/// Single segment from (0, m) to (n, 0) with gcd(m, n) = 1.
bool eisenstein_dumas(const Polynomial& f, unsigned long p);

struct SegmentDegreeConstraint {
  Rational slope;
  long length = 0;
  long denominator = 1;        // b for slope -a/b in lowest terms
  std::vector<long> allowed;   // multiples of b up to length
};

std::vector<SegmentDegreeConstraint> local_degree_constraints(
    const Polynomial& f, unsigned long p);

/// Degrees d such that a Q_p-factor of degree d is consistent with every
/// supplied prime: Newton-segment multiples at ramified primes, factor_mod
/// degree subset-sums at unramified ones. Requires disc != 0 and primes
/// coprime to lc(f). {0, deg f} alone certifies irreducibility over Q.
/// known_disc skips the resultant when the caller already has the value.
std::set<long> possible_factor_degrees(
    const Polynomial& f, const std::vector<unsigned long>& primes,
    unsigned long seed = 1,
    const std::optional<Integer>& known_disc = std::nullopt);

std::pair<long, Rational> flatness_steepness(const Polynomial& f,
                                             unsigned long p);

/// Open interval (u, bound) of excluded local factor degrees at p:
/// u = deg f - length of the last nonzero-slope segment, bound the inverse of
/// that segment's absolute slope. Trivial polygon gives (deg f, unbounded).
struct DegreeExclusion {
  long u = 0;
  bool bounded = false;
  Rational bound;  // meaningful iff bounded
};

DegreeExclusion degree_exclusion_interval(const Polynomial& f,
                                          unsigned long p);

}  // namespace pade

#endif
