#ifndef PADE_FAMILIES_HPP
#define PADE_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "pade/poly.hpp"

namespace pade {

enum class Family { P, Q, Exp, Glp, ShiftedGlp };

/// Symbolic identity of a constructed polynomial; only the fields relevant to
/// the family are meaningful.
struct FamilySpec {
  Family family = Family::Exp;
  long u = 0, v = 0;  // P/Q
  long n = 0;         // Exp / Glp / ShiftedGlp
  long r = 0;         // ShiftedGlp
  Rational alpha;     // Glp
  int delta = 0;      // diagonal bookkeeping

  static FamilySpec pade_p(long u, long v);
  static FamilySpec pade_q(long u, long v);
  static FamilySpec exp(long n);
  static FamilySpec shifted_glp(long n, long r);

  long degree() const;
  std::string name() const;  // e.g. "P(4,5)", "e_12", "L<3>_5"
};

/// n! * sum x^j / j!, monic of degree n; n = 0 gives the degenerate constant 1.
Polynomial exp_poly(long n);

/// The normalized approximant pair (P(u,v,x), Q(u,v,x)); u + v >= 1.
std::pair<Polynomial, Polynomial> pade_pair(long u, long v);

/// Generalized Laguerre polynomial L_n^(alpha), ascending rational
/// coefficients (leading 1/n!).
std::vector<Rational> glp(long n, const Rational& alpha);

/// Integral shifted normalization: n! L_n^(-1-n-r), monic of degree n.
Polynomial shifted_glp(long n, long r);

/// (-1)^{n(n-1)/2} prod_{j<=n} j^j prod_{j<n} (r+j)^{n-j}; equals
/// discriminant(shifted_glp(n, r)) exactly.
Integer closed_form_disc(long n, long r);

Polynomial construct(const FamilySpec& spec);

struct PadeIdentityReport {
  long u = 0, v = 0, n = 0;
  Rational scalar;  // n! v! / u!
  bool ok = false;
};

/// Checks e_n * Q(u,v) = scalar * P(u,v) through order x^{u+v}, exactly.
PadeIdentityReport verify_pade_identity(long u, long v, long n);

struct SchurReport {
  Family family = Family::P;
  long m = 0;
  int delta = 1;
  unsigned long p = 0;
  long k = 0, u = 0;       // m = u + k p, u in [0, p-1]
  unsigned long scalar = 1;  // unit in F_p with big = scalar * x^{kp} * small
  bool ok = false;
};

/// Checks the mod-p factorization congruence for P(m,m+delta) or Q(m,m+delta)
/// against x^{kp} times the small-index member, up to a reported unit scalar.
SchurReport schur_congruence_check(Family family, long m, unsigned long p,
                                   int delta = 1);

}  // namespace pade

#endif
