#include "pade/verify.hpp"

namespace pade {

namespace {

void add(SuiteReport& rep, std::string name, bool ok, std::string detail = "") {
  rep.checks.push_back({std::move(name), ok, std::move(detail)});
}

}  // namespace

bool SuiteReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.ok) ++n;
  return n;
}

SuiteReport run_pade_identity_suite(long max_total, long max_n) {
  SuiteReport rep;
  rep.suite = "pade-identity";
  for (long u = 0; u <= max_total; ++u)
    for (long v = 0; u + v <= max_total; ++v) {
      if (u + v < 1) continue;
      for (long n = u + v; n <= max_n; ++n) {
        PadeIdentityReport r = verify_pade_identity(u, v, n);
        add(rep,
            "e_" + std::to_string(n) + " ~ P/Q(" + std::to_string(u) + "," +
                std::to_string(v) + ")",
            r.ok, "c=" + r.scalar.get_str());
      }
    }
  return rep;
}

SuiteReport run_symmetry_suite(long max_uv) {
  SuiteReport rep;
  rep.suite = "symmetry";
  for (long u = 0; u <= max_uv; ++u)
    for (long v = 0; v <= max_uv; ++v) {
      if (u + v < 1) continue;
      Polynomial P = pade_pair(u, v).first;
      Polynomial Q_swapped = pade_pair(v, u).second;
      bool ok = (P == Q_swapped.substitute_neg());
      add(rep,
          "P(" + std::to_string(u) + "," + std::to_string(v) +
              ") = Q(v,u,-x)",
          ok);
    }
  return rep;
}

SuiteReport run_discriminant_suite(long max_n, long max_r) {
  SuiteReport rep;
  rep.suite = "discriminant";
  for (long n = 1; n <= max_n; ++n)
    for (long r = 0; r <= max_r; ++r) {
      Integer closed = closed_form_disc(n, r);
      Rational oracle = discriminant(shifted_glp(n, r));
      bool ok = (oracle.get_den() == 1 && Integer(oracle.get_num()) == closed);
      add(rep,
          "disc L<" + std::to_string(r) + ">_" + std::to_string(n),
          ok, closed.get_str());
    }
  {
    // negative control: the (-1)^u sign variant disagrees at (u,v) = (2,3)
    Integer closed = closed_form_disc(2, 3);
    Integer printed = abs(closed);  // (-1)^2 = +1
    Rational oracle = discriminant(pade_pair(2, 3).first);
    bool control = (printed != Integer(oracle.get_num())) &&
                   (closed == Integer(oracle.get_num()));
    add(rep, "negative control: (-1)^u sign fails at (2,3)", control,
        "printed=+16, true=-16");
  }
  return rep;
}

SuiteReport run_square_class_suite(long m_max) {
  SuiteReport rep;
  rep.suite = "square-class";
  for (long m = 2; m <= m_max; ++m) {
    auto [P, Q] = pade_pair(m, m + 1);
    SquareClass cp = disc_square_class(P);
    SquareClass cq = disc_square_class(Q);
    bool okp = false, okq = false;
    std::string expect_p, expect_q;
    switch (m % 4) {
      case 0:
        okp = cp.representative == 1;
        expect_p = "1";
        break;
      case 1: {
        Integer want = squarefree_part(Integer(2 * ((m - 1) / 4) + 1))
                           .representative;
        okp = cp.representative == want;
        expect_p = "squarefree(2r+1)=" + want.get_str();
        break;
      }
      default:
        okp = cp.representative < 0;
        expect_p = "negative";
    }
    switch (m % 4) {
      case 3:
        okq = cq.representative == 2;
        expect_q = "2";
        break;
      case 0: {
        Integer want = squarefree_part(Integer(m + 1)).representative;
        okq = cq.representative == want;
        expect_q = "squarefree(m+1)=" + want.get_str();
        break;
      }
      default:
        okq = cq.representative < 0;
        expect_q = "negative";
    }
    add(rep, "class P(" + std::to_string(m) + "," + std::to_string(m + 1) + ")",
        okp, "got " + cp.representative.get_str() + ", expect " + expect_p);
    add(rep, "class Q(" + std::to_string(m) + "," + std::to_string(m + 1) + ")",
        okq, "got " + cq.representative.get_str() + ", expect " + expect_q);
  }
  return rep;
}

SuiteReport run_eisenstein_suite(
    const std::vector<std::pair<unsigned long, long>>& cases, long budget) {
  SuiteReport rep;
  rep.suite = "eisenstein";
  for (auto [p, n] : cases) {
    for (Family side : {Family::P, Family::Q}) {
      EisensteinReport r = verify_eisenstein_theorem(p, n, side, budget);
      std::string label = std::string(side == Family::P ? "P" : "Q") + " p=" +
                          std::to_string(p) + " n=" + std::to_string(n);
      for (const auto& c : r.checks)
        add(rep, label + ": " + c.what, c.ok, c.detail);
    }
  }
  return rep;
}

SuiteReport run_schur_suite(long m_max,
                            const std::vector<unsigned long>& primes) {
  SuiteReport rep;
  rep.suite = "schur-mod-p";
  for (unsigned long p : primes)
    for (long m = 1; m <= m_max; ++m)
      for (int delta : {1, 0})
        for (Family fam : {Family::P, Family::Q}) {
          SchurReport r = schur_congruence_check(fam, m, p, delta);
          add(rep,
              std::string(fam == Family::P ? "P(" : "Q(") + std::to_string(m) +
                  "," + std::to_string(m + delta) + ") mod " +
                  std::to_string(p),
              r.ok,
              "k=" + std::to_string(r.k) + " u=" + std::to_string(r.u) +
                  " c=" + std::to_string(r.scalar));
        }
  return rep;
}

SuiteReport run_prime_gap_suite(long lo, long hi) {
  SuiteReport rep;
  rep.suite = "prime-gap";
  PrimeGapReport r = verify_prime_gap(lo, hi);
  if (r.failures.empty()) {
    add(rep, "every m in [" + std::to_string(lo) + "," + std::to_string(hi) +
                 "] has a prime in (2m/3, m-3)",
        true);
  } else {
    std::string which;
    for (long m : r.failures) which += std::to_string(m) + " ";
    add(rep, "prime in (2m/3, m-3) for all m in range", false,
        "failures at m = " + which);
  }
  return rep;
}

SuiteReport run_near_eisenstein_suite(const std::vector<unsigned long>& ps,
                                      unsigned long seed) {
  SuiteReport rep;
  rep.suite = "near-eisenstein";
  rep.seed = seed;
  for (unsigned long p : ps) {
    NearEisensteinReport r = near_eisenstein_analysis(p, seed);
    for (const NearEisensteinSide* side : {&r.side_p, &r.side_q}) {
      std::string label = side->poly_name + " at p=" + std::to_string(p);
      add(rep, label + ": factor degrees {0,1,p,p+1}",
          side->constraints_expected);
      bool excl_ok = side->exclusion.u == 1 && side->exclusion.bounded &&
                     side->exclusion.bound == Rational(static_cast<long>(p));
      add(rep, label + ": exclusion interval (1, p)", excl_ok);
      add(rep, label + ": conclusion " + side->conclusion, true,
          side->residue_note);
    }
  }
  return rep;
}

SuiteReport run_coleman_suite(long n_lo, long n_hi, unsigned long seed) {
  SuiteReport rep;
  rep.suite = "coleman";
  for (long n = n_lo; n <= n_hi; ++n) {
    GaloisCertificate cert = certify_galois(FamilySpec::exp(n), seed);
    GroupTag expect{n % 4 == 0, n};
    bool definite = cert.conclusion == Conclusion::AlternatingGroup ||
                    cert.conclusion == Conclusion::SymmetricGroup;
    bool ok = definite && cert.group.same_group(expect);
    add(rep, "e_" + std::to_string(n), ok,
        "certified " + conclusion_str(cert) + ", expect " + expect.str());
  }
  return rep;
}

}  // namespace pade
