#include "pade/io.hpp"

namespace pade {

std::string rational_str(const Rational& x) {
  return x.get_str();  // "a/b" in lowest terms, "/1" omitted
}

std::string family_str(Family f) {
  switch (f) {
    case Family::P:
      return "P";
    case Family::Q:
      return "Q";
    case Family::Exp:
      return "e";
    case Family::Glp:
      return "glp";
    case Family::ShiftedGlp:
      return "L";
  }
  return "?";
}

Json poly_json(const Polynomial& f) {
  Json arr = Json::array();
  for (const Integer& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json polygon_json(const NewtonPolygon& np) {
  Json j;
  j["prime"] = np.prime;
  Json verts = Json::array();
  for (const auto& [x, y] : np.vertices) verts.push_back(Json::array({x, y}));
  j["vertices"] = verts;
  Json segs = Json::array();
  for (const auto& seg : np.segments) {
    Json s;
    s["slope"] = rational_str(seg.slope);
    s["length"] = seg.length;
    segs.push_back(s);
  }
  j["segments"] = segs;
  j["flatness"] = np.flatness;
  j["steepness"] = rational_str(np.steepness);
  j["min_valuation_indices"] = np.min_valuation_indices;
  return j;
}

namespace {

Json irreducibility_json(const IrreducibilityEvidence& ev) {
  Json j;
  switch (ev.kind) {
    case IrreducibilityEvidence::Kind::EisensteinDumas:
      j["kind"] = "EISENSTEIN_DUMAS";
      j["prime"] = ev.prime;
      break;
    case IrreducibilityEvidence::Kind::DegreeSieve: {
      j["kind"] = "DEGREE_SIEVE";
      j["primes"] = ev.primes;
      Json surv = Json::array();
      for (long d : ev.surviving) surv.push_back(d);
      j["surviving"] = surv;
      break;
    }
    case IrreducibilityEvidence::Kind::Literature:
      j["kind"] = "LITERATURE";
      j["citation"] = ev.citation;
      break;
    case IrreducibilityEvidence::Kind::None:
      j["kind"] = "NONE";
      break;
  }
  return j;
}

Json an_json(const AnEvidence& ev) {
  Json j;
  switch (ev.kind) {
    case AnEvidence::Kind::NewtonIndexPrime:
      j["kind"] = "NEWTON_INDEX_PRIME";
      j["q"] = ev.q;
      break;
    case AnEvidence::Kind::DedekindCycle:
      j["kind"] = "DEDEKIND_CYCLE";
      j["prime"] = ev.p;
      j["q"] = ev.q;
      j["degrees"] = ev.degrees;
      break;
    case AnEvidence::Kind::SmallDegreeExclusion:
      j["kind"] = "SMALL_DEGREE_EXCLUSION";
      j["sampled_primes"] = ev.sampled_primes;
      j["cycle_types"] = ev.observed_types;
      j["eliminated"] = ev.eliminated;
      break;
    case AnEvidence::Kind::None:
      j["kind"] = "NONE";
      break;
  }
  return j;
}

}  // namespace

Json certificate_json(const GaloisCertificate& cert) {
  Json j;
  j["family"] = family_str(cert.spec.family);
  switch (cert.spec.family) {
    case Family::P:
    case Family::Q:
      j["u"] = cert.spec.u;
      j["v"] = cert.spec.v;
      break;
    case Family::ShiftedGlp:
      j["n"] = cert.spec.n;
      j["r"] = cert.spec.r;
      break;
    default:
      j["n"] = cert.spec.n;
  }
  j["degree"] = cert.degree;
  j["irreducibility"] = irreducibility_json(cert.irreducibility);
  j["an_containment"] = an_json(cert.an_containment);
  j["square_class"] = cert.square_class.representative.get_str();
  j["newton_index"] = cert.newton_index.get_str();
  switch (cert.conclusion) {
    case Conclusion::AlternatingGroup:
    case Conclusion::SymmetricGroup:
      j["conclusion"] = cert.group.str();
      break;
    case Conclusion::ContainsAnConditional:
      j["conclusion"] = "CONTAINS_A_n_CONDITIONAL";
      j["provisional_group"] = cert.group.str();
      j["conditional_on"] = cert.irreducibility.citation;
      break;
    case Conclusion::Unresolved:
      j["conclusion"] = "UNRESOLVED";
      break;
  }
  return j;
}

Json suite_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["seed"] = rep.seed;
  j["total"] = rep.checks.size();
  j["failures"] = rep.failures();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

namespace {

Json near_side_json(const NearEisensteinSide& side) {
  Json j;
  j["poly"] = side.poly_name;
  Json cons = Json::array();
  for (long d : side.constraints) cons.push_back(d);
  j["possible_factor_degrees"] = cons;
  j["exclusion_u"] = side.exclusion.u;
  j["exclusion_bound"] =
      side.exclusion.bounded ? rational_str(side.exclusion.bound) : "inf";
  if (side.simple_root_residue)
    j["simple_root_residue"] = *side.simple_root_residue;
  else
    j["simple_root_residue"] = nullptr;
  if (!side.residue_note.empty()) j["note"] = side.residue_note;
  j["conclusion"] = side.conclusion;
  if (side.integer_root) j["integer_root"] = side.integer_root->get_str();
  return j;
}

}  // namespace

Json near_eisenstein_json(const NearEisensteinReport& rep) {
  Json j;
  j["p"] = rep.p;
  j["P_side"] = near_side_json(rep.side_p);
  j["Q_side"] = near_side_json(rep.side_q);
  return j;
}

}  // namespace pade
