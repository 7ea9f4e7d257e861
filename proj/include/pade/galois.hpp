#ifndef PADE_GALOIS_HPP
#define PADE_GALOIS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pade/families.hpp"
#include "pade/newton.hpp"

namespace pade {

struct IrreducibilityEvidence {
  enum class Kind { EisensteinDumas, DegreeSieve, Literature, None };
  Kind kind = Kind::None;
  unsigned long prime = 0;                // EisensteinDumas
  std::vector<unsigned long> primes;      // DegreeSieve
  std::set<long> surviving;               // DegreeSieve ({0, n})
  std::string citation;                   // Literature
};

struct AnEvidence {
  enum class Kind {
    NewtonIndexPrime,
    DedekindCycle,
    SmallDegreeExclusion,
    None
  };
  Kind kind = Kind::None;
  unsigned long q = 0;                       // the Jordan-interval prime
  unsigned long p = 0;                       // DedekindCycle witness prime
  std::vector<long> degrees;                 // DedekindCycle factor degrees
  std::vector<unsigned long> sampled_primes;     // SmallDegreeExclusion
  std::vector<std::vector<long>> observed_types;  // SmallDegreeExclusion
  std::vector<std::string> eliminated;            // SmallDegreeExclusion
};

struct GroupTag {
  bool alternating = false;
  long n = 0;
  std::string str() const;
  /// Same abstract group; A_1 and S_1 are both trivial.
  bool same_group(const GroupTag& other) const;
};

enum class Conclusion {
  AlternatingGroup,
  SymmetricGroup,
  ContainsAnConditional,
  Unresolved
};

struct GaloisCertificate {
  FamilySpec spec;
  long degree = 0;
  IrreducibilityEvidence irreducibility;
  AnEvidence an_containment;
  SquareClass square_class{Integer(1)};
  Conclusion conclusion = Conclusion::Unresolved;
  GroupTag group;        // the concluded (or conditional) group
  Integer newton_index;  // of the certified polynomial
};

std::string conclusion_str(const GaloisCertificate& cert);

/// Eisenstein-Dumas at primes dividing a_0, then the local degree sieve over
/// ramified primes plus the first 25 unramified primes, then the literature
/// registry (when the family is known). Never returns a false certificate.
IrreducibilityEvidence certify_irreducible(
    const Polynomial& f, const std::optional<FamilySpec>& spec = std::nullopt,
    const std::optional<Integer>& known_disc = std::nullopt,
    unsigned long seed = 1);

/// A_n-containment: Jordan-interval prime dividing the Newton index, then
/// Dedekind cycle sampling over unramified primes <= 10^4, then (degrees 3..7)
/// cycle-type exclusion against the transitive-group table.
AnEvidence an_containment(const Polynomial& f,
                          const IrreducibilityEvidence& irr,
                          const std::optional<Integer>& known_disc = std::nullopt,
                          unsigned long seed = 1);

/// squarefree_part(discriminant(f)); resultant route.
SquareClass disc_square_class(const Polynomial& f);

GaloisCertificate certify_galois(const FamilySpec& spec,
                                 unsigned long seed = 1);

/// Pure arithmetic prediction for the diagonal families (no polynomial work).
GroupTag classify_diagonal(long m, int delta, Family family);

struct EisensteinCheck {
  std::string what;
  bool ok = false;
  std::string detail;
};

struct EisensteinReport {
  unsigned long p = 0;
  long n = 0;  // exponent: the polynomial index is p^n
  Family side = Family::P;
  long degree = 0;
  long v0 = 0;  // v_p(a_0)
  std::vector<EisensteinCheck> checks;
  bool all_ok() const;
};

/// Theorem verifier for P(p^n, p^n+1) (side P) / Q(p^n-1, p^n) (side Q):
/// v_p(a_0), the coefficient-valuation law, the single-segment polygon, and
/// the Eisenstein-Dumas conclusion.
EisensteinReport verify_eisenstein_theorem(unsigned long p, long n,
                                           Family side, long budget = 400);

struct NearEisensteinSide {
  std::string poly_name;
  std::set<long> constraints;           // possible factor degrees at p
  bool constraints_expected = false;    // == {0, 1, p, p+1}
  DegreeExclusion exclusion;
  std::optional<unsigned long> simple_root_residue;  // mod p, if any
  std::string residue_note;
  bool splits = false;                  // linear x degree-p factorization
  std::optional<Integer> integer_root;
  std::string conclusion;               // "irreducible" or "splits"
};

struct NearEisensteinReport {
  unsigned long p = 0;
  NearEisensteinSide side_p;  // P(p+1, p+2)
  NearEisensteinSide side_q;  // Q(p, p+1)
};

NearEisensteinReport near_eisenstein_analysis(unsigned long p,
                                              unsigned long seed = 1);

struct PrimeGapReport {
  long lo = 0, hi = 0;
  std::vector<long> failures;  // m with no prime in (2m/3, m-3)
};

PrimeGapReport verify_prime_gap(long m_lo, long m_hi);

}  // namespace pade

#endif
