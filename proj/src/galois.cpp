#include "pade/galois.hpp"

#include <algorithm>
#include <stdexcept>

#include "pade/groups.hpp"

namespace pade {

namespace {

constexpr unsigned long kDedekindBound = 10000;
constexpr int kUnramifiedSievePrimes = 25;

bool divides(unsigned long p, const Integer& n) {
  return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0;
}

Integer integral_disc(const Polynomial& f) {
  Rational d = discriminant(f);
  if (d.get_den() != 1)
    throw std::logic_error("non-integral discriminant of integral polynomial");
  return Integer(d.get_num());
}

/// Closed-form discriminant when the family admits one, else the resultant.
Integer disc_of(const FamilySpec& spec, const Polynomial& f) {
  switch (spec.family) {
    case Family::P:
      return closed_form_disc(spec.u, spec.v);
    case Family::Q:
      // disc is invariant under x -> -x, and Q(u,v,x) = P(v,u,-x)
      return closed_form_disc(spec.v, spec.u);
    case Family::Exp:
      return closed_form_disc(spec.n, 0);
    case Family::ShiftedGlp:
      if (spec.r >= 0) return closed_form_disc(spec.n, spec.r);
      return integral_disc(f);
    default:
      return integral_disc(f);
  }
}

std::optional<std::string> literature_citation(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::P:
      if (spec.u == spec.v) return "Filaseta-Trifonov (Bessel)";
      if (spec.v >= 0 && spec.v <= 8) return "Hajir (0 <= r <= 8)";
      return std::nullopt;
    case Family::Q:
      if (spec.u == spec.v) return "Filaseta-Trifonov (Bessel)";
      if (spec.u >= 0 && spec.u <= 8) return "Hajir (0 <= r <= 8)";
      return std::nullopt;
    case Family::Exp:
      return "Coleman (truncated exponential)";
    case Family::ShiftedGlp:
      if (spec.r >= 0 && spec.r <= 8) return "Hajir (0 <= r <= 8)";
      if (spec.r == spec.n) return "Filaseta-Trifonov (Bessel)";
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::vector<unsigned long> jordan_primes(long n) {
  if (n < 5) return {};
  Rational lo(n, 2), hi(n - 2);
  lo.canonicalize();
  return primes_in_interval(lo, hi);
}

}  // namespace

std::string GroupTag::str() const {
  return (alternating ? "A_" : "S_") + std::to_string(n);
}

bool GroupTag::same_group(const GroupTag& other) const {
  if (n != other.n) return false;
  if (n <= 1) return true;  // A_1 = S_1 = trivial
  return alternating == other.alternating;
}

std::string conclusion_str(const GaloisCertificate& cert) {
  switch (cert.conclusion) {
    case Conclusion::AlternatingGroup:
    case Conclusion::SymmetricGroup:
      return cert.group.str();
    case Conclusion::ContainsAnConditional:
      return cert.group.str() + " (conditional on " +
             cert.irreducibility.citation + ")";
    case Conclusion::Unresolved:
      return "unresolved";
  }
  return "?";
}

IrreducibilityEvidence certify_irreducible(
    const Polynomial& f, const std::optional<FamilySpec>& spec,
    const std::optional<Integer>& known_disc, unsigned long seed) {
  IrreducibilityEvidence ev;
  if (f.is_zero() || f.degree() < 1)
    throw std::invalid_argument("irreducibility needs degree >= 1");
  Polynomial g = f.primitive_part();
  if (g.coeff(0) == 0)
    throw std::invalid_argument("requires f(0) != 0 (strip x-power first)");
  Integer disc = known_disc ? *known_disc : integral_disc(g);
  if (disc == 0) throw std::domain_error("not squarefree");
  long n = g.degree();

  // 1. Eisenstein-Dumas at primes dividing a_0, ascending
  for (unsigned long p : small_prime_divisors(g.coeff(0))) {
    if (eisenstein_dumas(g, p)) {
      ev.kind = IrreducibilityEvidence::Kind::EisensteinDumas;
      ev.prime = p;
      return ev;
    }
  }

  // 2. local degree sieve: ramified primes + first 25 unramified primes
  std::vector<unsigned long> sieve_primes;
  for (unsigned long p : small_prime_divisors(disc))
    if (!divides(p, g.leading())) sieve_primes.push_back(p);
  int unramified = 0;
  for (unsigned long p = 2; unramified < kUnramifiedSievePrimes; ++p) {
    if (!is_prime(Integer(static_cast<long>(p)))) continue;
    if (divides(p, disc) || divides(p, g.leading())) continue;
    sieve_primes.push_back(p);
    ++unramified;
  }
  std::set<long> surviving =
      possible_factor_degrees(g, sieve_primes, seed, disc);
  if (surviving == std::set<long>{0, n}) {
    ev.kind = IrreducibilityEvidence::Kind::DegreeSieve;
    ev.primes = sieve_primes;
    ev.surviving = surviving;
    return ev;
  }

  // 3. literature registry; the tag must actually name this polynomial
  if (spec) {
    if (construct(*spec) != g)
      throw std::invalid_argument("family tag does not match the polynomial");
    if (auto cite = literature_citation(*spec)) {
      ev.kind = IrreducibilityEvidence::Kind::Literature;
      ev.citation = *cite;
      return ev;
    }
  }
  ev.kind = IrreducibilityEvidence::Kind::None;
  return ev;
}

AnEvidence an_containment(const Polynomial& f,
                          const IrreducibilityEvidence& irr,
                          const std::optional<Integer>& known_disc,
                          unsigned long seed) {
  if (irr.kind == IrreducibilityEvidence::Kind::None)
    throw std::invalid_argument("needs irreducibility evidence");
  Polynomial g = f.primitive_part();
  long n = g.degree();
  if (n < 3) throw std::invalid_argument("needs degree >= 3");
  AnEvidence ev;
  Integer disc = known_disc ? *known_disc : integral_disc(g);

  std::vector<unsigned long> jordan = jordan_primes(n);
  if (!jordan.empty()) {
    // (a) a Jordan-interval prime dividing the Newton index
    Integer idx = newton_index(g);
    for (unsigned long q : jordan) {
      if (divides(q, idx)) {
        ev.kind = AnEvidence::Kind::NewtonIndexPrime;
        ev.q = q;
        return ev;
      }
    }
    // (b) Dedekind: a Frobenius cycle type with exactly one q-part
    for (unsigned long p = 2; p <= kDedekindBound; ++p) {
      if (!is_prime(Integer(static_cast<long>(p)))) continue;
      if (divides(p, disc) || divides(p, g.leading())) continue;
      std::vector<long> degrees =
          factor_degrees(factor_mod(reduce_mod(g, p), seed));
      for (unsigned long q : jordan) {
        long count = static_cast<long>(
            std::count(degrees.begin(), degrees.end(), static_cast<long>(q)));
        if (count != 1) continue;
        // no other part divisible by q: parts are <= n < 2q
        ev.kind = AnEvidence::Kind::DedekindCycle;
        ev.p = p;
        ev.q = q;
        ev.degrees = degrees;
        return ev;
      }
    }
    return ev;  // None
  }

  if (n > 7) return ev;  // empty Jordan interval outside the table range

  // (c) cycle-type exclusion against the transitive groups of degree n
  const auto& table = transitive_groups(static_cast<int>(n));
  std::vector<const TransitiveGroup*> alive;
  for (const auto& grp : table)
    if (!grp.contains_alternating) alive.push_back(&grp);
  ev.kind = AnEvidence::Kind::SmallDegreeExclusion;
  if (alive.empty()) return ev;  // degree 3: every transitive group works

  std::set<std::vector<long>> seen;
  for (unsigned long p = 2; p <= kDedekindBound && !alive.empty(); ++p) {
    if (!is_prime(Integer(static_cast<long>(p)))) continue;
    if (divides(p, disc) || divides(p, g.leading())) continue;
    std::vector<long> type =
        factor_degrees(factor_mod(reduce_mod(g, p), seed));
    if (!seen.insert(type).second) continue;
    ev.sampled_primes.push_back(p);
    ev.observed_types.push_back(type);
    std::vector<const TransitiveGroup*> next;
    for (const TransitiveGroup* grp : alive) {
      if (grp->has_type(type)) {
        next.push_back(grp);
      } else {
        ev.eliminated.push_back(grp->name);
      }
    }
    alive.swap(next);
  }
  if (!alive.empty()) {
    ev.kind = AnEvidence::Kind::None;  // sampling bound exhausted
    ev.eliminated.clear();
  }
  return ev;
}

SquareClass disc_square_class(const Polynomial& f) {
  Rational disc = discriminant(f);
  if (disc == 0) throw std::domain_error("discriminant is zero");
  return squarefree_part(disc);
}

GaloisCertificate certify_galois(const FamilySpec& spec, unsigned long seed) {
  GaloisCertificate cert;
  cert.spec = spec;
  Polynomial f = construct(spec);
  cert.degree = f.degree();
  Integer disc = disc_of(spec, f);
  if (disc == 0) throw std::domain_error("discriminant is zero");
  cert.square_class = squarefree_part(disc);
  cert.newton_index = newton_index(f);
  cert.irreducibility = certify_irreducible(f, spec, disc, seed);

  long n = cert.degree;
  bool irr_known =
      cert.irreducibility.kind != IrreducibilityEvidence::Kind::None;
  bool an_known = false;
  if (irr_known && n >= 3) {
    cert.an_containment = an_containment(f, cert.irreducibility, disc, seed);
    an_known = cert.an_containment.kind != AnEvidence::Kind::None;
  }

  bool class_trivial = cert.square_class.representative == 1;
  cert.group = GroupTag{class_trivial, n};
  if (!irr_known) {
    cert.conclusion = Conclusion::Unresolved;
  } else if (n <= 3 || an_known) {
    bool conditional =
        cert.irreducibility.kind == IrreducibilityEvidence::Kind::Literature;
    if (conditional)
      cert.conclusion = Conclusion::ContainsAnConditional;
    else
      cert.conclusion = class_trivial ? Conclusion::AlternatingGroup
                                      : Conclusion::SymmetricGroup;
  } else {
    cert.conclusion = Conclusion::Unresolved;
  }
  return cert;
}

GroupTag classify_diagonal(long m, int delta, Family family) {
  if (m < 1) throw std::invalid_argument("requires m >= 1");
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta in {0,1}");
  if (family != Family::P && family != Family::Q)
    throw std::invalid_argument("diagonal classification covers P and Q");
  if (delta == 0) return GroupTag{false, m};  // Grosswald: S_m for both
  if (family == Family::P) {
    // A_m iff m = 0 mod 4 or m = 2(2k+1)^2 - 1
    bool alt = (m % 4 == 0);
    if (!alt && m % 2 == 1) {
      Integer half((m + 1) / 2);
      if (mpz_perfect_square_p(half.get_mpz_t())) {
        Integer root;
        mpz_sqrt(root.get_mpz_t(), half.get_mpz_t());
        if (mpz_odd_p(root.get_mpz_t())) alt = true;
      }
    }
    return GroupTag{alt, m};
  }
  // Q: A_{m+1} iff m = (2k+1)^2 - 1 with k >= 1
  Integer next(m + 1);
  bool alt = false;
  if (mpz_perfect_square_p(next.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), next.get_mpz_t());
    if (mpz_odd_p(root.get_mpz_t()) && root >= 3) alt = true;
  }
  return GroupTag{alt, m + 1};
}

bool EisensteinReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

EisensteinReport verify_eisenstein_theorem(unsigned long p, long n,
                                           Family side, long budget) {
  if (p < 3 || !is_prime(Integer(static_cast<long>(p))))
    throw std::invalid_argument("requires an odd prime");
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  if (side != Family::P && side != Family::Q)
    throw std::invalid_argument("side is P or Q");
  Integer pn_big;
  mpz_ui_pow_ui(pn_big.get_mpz_t(), p, n);
  if (pn_big > budget) throw std::runtime_error("budget exceeded");
  long N = static_cast<long>(pn_big.get_si());

  EisensteinReport rep;
  rep.p = p;
  rep.n = n;
  rep.side = side;
  Polynomial f = side == Family::P ? pade_pair(N, N + 1).first
                                   : pade_pair(N - 1, N).second;
  rep.degree = f.degree();
  long expected_v0 = (N - 1) / static_cast<long>(p - 1);
  rep.v0 = valuation(p, f.coeff(0));

  auto push = [&rep](std::string what, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(what), ok, std::move(detail)});
  };

  if (side == Family::Q) {
    long oracle_v0 =
        factorial_valuation(p, Integer(2 * N - 1)) -
        factorial_valuation(p, Integer(N - 1));
    push("v_p(a_0) matches factorial-valuation oracle", rep.v0 == oracle_v0,
         "v=" + std::to_string(rep.v0) + " oracle=" + std::to_string(oracle_v0));
  }
  push("v_p(a_0) = (p^n - 1)/(p - 1)", rep.v0 == expected_v0,
       "v=" + std::to_string(rep.v0) +
           " expected=" + std::to_string(expected_v0));
  push("v_p(a_0) coprime to p", expected_v0 % static_cast<long>(p) != 0);

  bool law_ok = true;
  std::string law_fail;
  if (side == Family::P) {
    // the coefficient-valuation law, exact for j >= 2
    for (long j = 2; j <= N; ++j) {
      long lhs = valuation(p, f.coeff(j));
      long rhs = rep.v0 + valuation(p, Integer(j - 1)) -
                 factorial_valuation(p, Integer(j));
      if (lhs != rhs) {
        law_ok = false;
        law_fail = "j=" + std::to_string(j);
        break;
      }
    }
    push("valuation law for 2 <= j <= p^n", law_ok, law_fail);
    // j = 1 gets only the segment inequality: v * N * (p-1) >= (N-1)^2
    long v1 = valuation(p, f.coeff(1));
    bool ineq =
        Integer(v1) * N * (static_cast<long>(p) - 1) >= Integer(N - 1) * (N - 1);
    push("j = 1 lies on or above the segment", ineq,
         "v_p(a_1)=" + std::to_string(v1));
  } else {
    // every coefficient against the pure Legendre oracle
    for (long j = 1; j <= N; ++j) {
      long lhs = valuation(p, f.coeff(j));
      long rhs = factorial_valuation(p, Integer(2 * N - 1 - j)) -
                 factorial_valuation(p, Integer(N - 1)) +
                 factorial_valuation(p, Integer(N)) -
                 factorial_valuation(p, Integer(j)) -
                 factorial_valuation(p, Integer(N - j));
      if (lhs != rhs) {
        law_ok = false;
        law_fail = "j=" + std::to_string(j);
        break;
      }
    }
    push("valuations match factorial-valuation oracle for 1 <= j <= p^n",
         law_ok, law_fail);
  }

  NewtonPolygon np = newton_polygon(f, p);
  bool single =
      np.segments.size() == 1 && np.vertices.front() == std::make_pair(0l, expected_v0) &&
      np.vertices.back() == std::make_pair(N, 0l);
  push("polygon is the single segment (0, v0) -> (p^n, 0)", single);
  push("eisenstein_dumas", eisenstein_dumas(f, p));
  return rep;
}

namespace {

NearEisensteinSide near_eisenstein_side(const Polynomial& f, unsigned long p,
                                        const std::string& name,
                                        const Integer& disc,
                                        unsigned long seed) {
  NearEisensteinSide side;
  side.poly_name = name;
  long n = f.degree();

  side.constraints = possible_factor_degrees(f, {p}, seed, disc);
  side.constraints_expected =
      side.constraints ==
      std::set<long>{0, 1, static_cast<long>(p), static_cast<long>(p) + 1};
  side.exclusion = degree_exclusion_interval(f, p);

  ModPoly fp = reduce_mod(f, p);
  std::vector<unsigned long> root_residues;
  for (const ModRoot& root : roots_mod(fp)) {
    root_residues.push_back(root.r);
    if (!root.multiple) side.simple_root_residue = root.r;
  }
  if (!side.simple_root_residue)
    side.residue_note = "no simple root mod p; dichotomy rests on the polygon";

  // integer-root hunt: a missing root mod some auxiliary prime settles it
  bool maybe_root = true;
  for (unsigned long q : primes_up_to(200)) {
    if (roots_mod(reduce_mod(f, q)).empty()) {
      maybe_root = false;
      break;
    }
  }
  if (maybe_root) {
    // Fujiwara-style bound: 2 * max_j |a_j|^{1/(n-j)} (f is monic)
    Integer bound(1);
    for (long j = 0; j < n; ++j) {
      if (f.coeff(j) == 0) continue;
      Integer root;
      mpz_root(root.get_mpz_t(), Integer(abs(f.coeff(j))).get_mpz_t(), n - j);
      root += 1;
      if (root > bound) bound = root;
    }
    bound *= 2;
    long b = static_cast<long>(bound.get_si());
    for (long t = 1; t <= b && !side.integer_root; ++t) {
      for (long s : {-t, t}) {
        unsigned long residue = static_cast<unsigned long>(
            ((s % static_cast<long>(p)) + static_cast<long>(p)) %
            static_cast<long>(p));
        bool residue_ok = false;
        for (unsigned long r : root_residues)
          if (r == residue) residue_ok = true;
        if (!residue_ok) continue;
        if (f.evaluate(Integer(s)) == 0) {
          side.integer_root = Integer(s);
          break;
        }
      }
    }
  }
  side.splits = side.integer_root.has_value();
  side.conclusion = side.splits ? "splits as linear x degree-p" : "irreducible";
  return side;
}

}  // namespace

NearEisensteinReport near_eisenstein_analysis(unsigned long p,
                                              unsigned long seed) {
  if (p < 3 || !is_prime(Integer(static_cast<long>(p))))
    throw std::invalid_argument("requires an odd prime");
  NearEisensteinReport rep;
  rep.p = p;
  long pl = static_cast<long>(p);
  rep.side_p = near_eisenstein_side(
      pade_pair(pl + 1, pl + 2).first, p,
      "P(" + std::to_string(pl + 1) + "," + std::to_string(pl + 2) + ")",
      closed_form_disc(pl + 1, pl + 2), seed);
  rep.side_q = near_eisenstein_side(
      pade_pair(pl, pl + 1).second, p,
      "Q(" + std::to_string(pl) + "," + std::to_string(pl + 1) + ")",
      closed_form_disc(pl + 1, pl), seed);
  if (rep.side_q.simple_root_residue && *rep.side_q.simple_root_residue != p - 1)
    rep.side_q.residue_note =
        "computed simple-root residue " +
        std::to_string(*rep.side_q.simple_root_residue) +
        " (not -1 mod p)";
  if (rep.side_p.simple_root_residue &&
      *rep.side_p.simple_root_residue != (p - 3) % p)
    rep.side_p.residue_note =
        "computed simple-root residue " +
        std::to_string(*rep.side_p.simple_root_residue) +
        " (not -3 mod p)";
  return rep;
}

PrimeGapReport verify_prime_gap(long m_lo, long m_hi) {
  if (m_lo < 2 || m_hi < m_lo) throw std::invalid_argument("bad range");
  PrimeGapReport rep;
  rep.lo = m_lo;
  rep.hi = m_hi;
  for (long m = m_lo; m <= m_hi; ++m) {
    Rational lo(2 * m, 3), hi(m - 3);
    lo.canonicalize();
    bool has_prime = false;
    if (lo < hi) has_prime = !primes_in_interval(lo, hi).empty();
    if (!has_prime) rep.failures.push_back(m);
  }
  return rep;
}

}  // namespace pade
