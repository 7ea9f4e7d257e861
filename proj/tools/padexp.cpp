// padexp: construct Pade approximants of the truncated exponential, dump
// p-adic Newton polygons, certify Galois groups, and run the verification
// suites. All arithmetic is exact; output is deterministic.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pade/io.hpp"

using namespace pade;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 64;

struct GlobalOpts {
  std::string format = "pretty";
  long budget = 400;
  unsigned long seed = 1;
};

FamilySpec parse_family(const std::string& family,
                        const std::vector<long>& params, long budget) {
  FamilySpec spec;
  if (family == "P" || family == "Q") {
    if (params.size() != 2)
      throw CLI::ValidationError("family " + family + " takes u v");
    spec = family == "P" ? FamilySpec::pade_p(params[0], params[1])
                         : FamilySpec::pade_q(params[0], params[1]);
  } else if (family == "e") {
    if (params.size() != 1) throw CLI::ValidationError("family e takes n");
    spec = FamilySpec::exp(params[0]);
  } else if (family == "L") {
    if (params.size() != 2) throw CLI::ValidationError("family L takes n r");
    spec = FamilySpec::shifted_glp(params[0], params[1]);
  } else {
    throw CLI::ValidationError("unknown family '" + family +
                               "' (use P, Q, e, L)");
  }
  if (spec.degree() > budget)
    throw CLI::ValidationError("degree " + std::to_string(spec.degree()) +
                               " exceeds budget " + std::to_string(budget));
  return spec;
}

void print_suite(const SuiteReport& rep, const GlobalOpts& g) {
  if (g.format == "json") {
    std::cout << suite_json(rep).dump(2) << "\n";
    return;
  }
  if (g.format == "tsv") {
    for (const auto& c : rep.checks)
      std::cout << c.name << "\t" << (c.ok ? "PASS" : "FAIL") << "\t"
                << c.detail << "\n";
    return;
  }
  for (const auto& c : rep.checks) {
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << rep.suite << ": " << (rep.checks.size() - rep.failures())
            << "/" << rep.checks.size() << " checks passed\n";
}

std::pair<long, long> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    long v = std::stol(text);
    return {v, v};
  }
  return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

std::string evidence_brief(const GaloisCertificate& cert) {
  std::string s;
  switch (cert.irreducibility.kind) {
    case IrreducibilityEvidence::Kind::EisensteinDumas:
      s = "ED@" + std::to_string(cert.irreducibility.prime);
      break;
    case IrreducibilityEvidence::Kind::DegreeSieve:
      s = "sieve";
      break;
    case IrreducibilityEvidence::Kind::Literature:
      s = "lit";
      break;
    case IrreducibilityEvidence::Kind::None:
      s = "none";
      break;
  }
  switch (cert.an_containment.kind) {
    case AnEvidence::Kind::NewtonIndexPrime:
      s += "+Nq=" + std::to_string(cert.an_containment.q);
      break;
    case AnEvidence::Kind::DedekindCycle:
      s += "+cyc" + std::to_string(cert.an_containment.q) + "@" +
           std::to_string(cert.an_containment.p);
      break;
    case AnEvidence::Kind::SmallDegreeExclusion:
      s += "+excl";
      break;
    case AnEvidence::Kind::None:
      break;
  }
  s += ",sq=" + cert.square_class.representative.get_str();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "padexp: exact arithmetic of Pade approximants to the truncated\n"
      "exponential: polynomial families, p-adic Newton polygons, and Galois\n"
      "group certificates. Table rows are indexed by m = deg P(m,m+delta)."};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  bool json_flag = false;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"tsv", "json", "pretty"}))
      ->capture_default_str();
  app.add_flag("--json", json_flag, "shorthand for --format json");
  app.add_option("--budget", g.budget, "max constructed degree")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "equal-degree splitting seed")
      ->capture_default_str();

  // poly
  auto* cmd_poly = app.add_subcommand("poly", "print a family member");
  std::string poly_family;
  std::vector<long> poly_params;
  cmd_poly->add_option("family", poly_family, "P | Q | e | L")->required();
  cmd_poly->add_option("params", poly_params, "u v | n | n r")->required();

  // np
  auto* cmd_np = app.add_subcommand("np", "dump a p-adic Newton polygon");
  std::string np_family;
  std::vector<long> np_params;
  std::string np_coeffs;
  unsigned long np_prime = 0;
  cmd_np->add_option("family", np_family, "P | Q | e | L");
  cmd_np->add_option("params", np_params, "u v | n | n r");
  cmd_np->add_option("--coeffs", np_coeffs,
                     "ascending coefficients instead of a family");
  cmd_np->add_option("--prime", np_prime, "the prime p")->required();

  // certify
  auto* cmd_certify = app.add_subcommand("certify", "emit a Galois certificate");
  std::string cert_family;
  std::vector<long> cert_params;
  cmd_certify->add_option("family", cert_family, "P | Q | e | L")->required();
  cmd_certify->add_option("params", cert_params, "u v | n | n r")->required();

  // table
  auto* cmd_table = app.add_subcommand(
      "table", "certified groups of the diagonal approximants, one row per m");
  int table_delta = 1;
  std::string table_range = "2..20";
  cmd_table->add_option("--delta", table_delta, "0 or 1")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();
  cmd_table->add_option("--m", table_range, "range a..b")
      ->capture_default_str();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cmd_verify
      ->add_option("suite", suite,
                   "pade-identity | discriminant | square-class | eisenstein |"
                   " schur-mod-p | prime-gap | near-eisenstein | coleman")
      ->required();
  long v_max = -1, v_lo = -1, v_hi = -1, v_n = 1;
  std::vector<unsigned long> v_primes;
  cmd_verify->add_option("--max", v_max, "sweep bound");
  cmd_verify->add_option("--lo", v_lo, "range start");
  cmd_verify->add_option("--hi", v_hi, "range end");
  cmd_verify->add_option("--n", v_n, "prime-power exponent (eisenstein)");
  cmd_verify->add_option("--p", v_primes, "primes (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }
  if (json_flag) g.format = "json";

  try {
    if (*cmd_poly) {
      FamilySpec spec = parse_family(poly_family, poly_params, g.budget);
      Polynomial f = construct(spec);
      if (g.format == "json") {
        Json j;
        j["family"] = family_str(spec.family);
        j["name"] = spec.name();
        j["coefficients"] = poly_json(f);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << f.to_text() << "\n";
      }
      return kExitOk;
    }

    if (*cmd_np) {
      Polynomial f;
      std::string name;
      if (!np_coeffs.empty()) {
        f = Polynomial::from_text(np_coeffs);
        name = "coeffs";
      } else {
        if (np_family.empty())
          throw CLI::ValidationError("np needs a family or --coeffs");
        FamilySpec spec = parse_family(np_family, np_params, g.budget);
        f = construct(spec);
        name = spec.name();
      }
      NewtonPolygon np = newton_polygon(f, np_prime);
      if (g.format == "json" || g.format == "tsv") {
        std::cout << polygon_json(np).dump(2) << "\n";
      } else {
        std::cout << name << " at p=" << np_prime << "\n";
        std::cout << "vertices:";
        for (auto& [x, y] : np.vertices)
          std::cout << " (" << x << "," << y << ")";
        std::cout << "\nsegments:";
        for (auto& s : np.segments)
          std::cout << " slope " << rational_str(s.slope) << " length "
                    << s.length << ";";
        std::cout << "\nflatness " << np.flatness << ", steepness "
                  << rational_str(np.steepness) << "\n";
      }
      return kExitOk;
    }

    if (*cmd_certify) {
      FamilySpec spec = parse_family(cert_family, cert_params, g.budget);
      GaloisCertificate cert = certify_galois(spec, g.seed);
      if (g.format == "json") {
        std::cout << certificate_json(cert).dump(2) << "\n";
      } else {
        std::cout << spec.name() << ": degree " << cert.degree
                  << ", conclusion " << conclusion_str(cert) << "\n";
        std::cout << "evidence: " << evidence_brief(cert)
                  << ", N_f = " << cert.newton_index.get_str() << "\n";
      }
      bool definite = cert.conclusion == Conclusion::AlternatingGroup ||
                      cert.conclusion == Conclusion::SymmetricGroup;
      return definite ? kExitOk : kExitUnresolved;
    }

    if (*cmd_table) {
      auto [m_lo, m_hi] = parse_range(table_range);
      if (m_lo < 1 || m_hi < m_lo) throw CLI::ValidationError("bad --m range");
      if (m_hi + table_delta > g.budget)
        throw CLI::ValidationError("range exceeds budget");
      bool all_definite = true;
      Json rows = Json::array();
      for (long m = m_lo; m <= m_hi; ++m) {
        GaloisCertificate cp =
            certify_galois(FamilySpec::pade_p(m, m + table_delta), g.seed);
        GaloisCertificate cq =
            certify_galois(FamilySpec::pade_q(m, m + table_delta), g.seed);
        for (const auto* c : {&cp, &cq})
          if (c->conclusion != Conclusion::AlternatingGroup &&
              c->conclusion != Conclusion::SymmetricGroup)
            all_definite = false;
        if (g.format == "json") {
          Json row;
          row["m"] = m;
          row["P"] = certificate_json(cp);
          row["Q"] = certificate_json(cq);
          rows.push_back(row);
        } else if (g.format == "tsv") {
          std::cout << m << "\t" << conclusion_str(cp) << "\t"
                    << conclusion_str(cq) << "\t" << evidence_brief(cp) << "\t"
                    << evidence_brief(cq) << "\n";
        } else {
          std::printf("m=%-3ld  P: %-24s  Q: %-24s  [%s | %s]\n", m,
                      conclusion_str(cp).c_str(), conclusion_str(cq).c_str(),
                      evidence_brief(cp).c_str(), evidence_brief(cq).c_str());
        }
      }
      if (g.format == "json") std::cout << rows.dump(2) << "\n";
      return all_definite ? kExitOk : kExitUnresolved;
    }

    if (*cmd_verify) {
      SuiteReport rep;
      if (suite == "pade-identity") {
        long max = v_max > 0 ? v_max : 16;
        rep = run_pade_identity_suite(max, max);
      } else if (suite == "discriminant") {
        long max = v_max > 0 ? v_max : 12;
        rep = run_discriminant_suite(max, max);
      } else if (suite == "square-class") {
        rep = run_square_class_suite(v_max > 0 ? v_max : 40);
      } else if (suite == "eisenstein") {
        std::vector<std::pair<unsigned long, long>> cases;
        if (v_primes.empty()) {
          cases = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                   {7, 1}, {7, 2}, {7, 3}, {11, 1}};
        } else {
          for (unsigned long p : v_primes) cases.emplace_back(p, v_n);
        }
        rep = run_eisenstein_suite(cases, g.budget);
      } else if (suite == "schur-mod-p") {
        std::vector<unsigned long> ps =
            v_primes.empty() ? std::vector<unsigned long>{3, 5, 7} : v_primes;
        rep = run_schur_suite(v_max > 0 ? v_max : 40, ps);
      } else if (suite == "prime-gap") {
        rep = run_prime_gap_suite(v_lo > 0 ? v_lo : 21,
                                  v_hi > 0 ? v_hi : 100000);
      } else if (suite == "near-eisenstein") {
        std::vector<unsigned long> ps =
            v_primes.empty() ? std::vector<unsigned long>{3, 5, 7, 11, 13}
                             : v_primes;
        rep = run_near_eisenstein_suite(ps, g.seed);
      } else if (suite == "coleman") {
        rep = run_coleman_suite(v_lo > 0 ? v_lo : 3, v_hi > 0 ? v_hi : 15,
                                g.seed);
      } else {
        throw CLI::ValidationError("unknown suite '" + suite + "'");
      }
      print_suite(rep, g);
      return rep.all_ok() ? kExitOk : kExitVerifyFailure;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
