#ifndef PADE_IO_HPP
#define PADE_IO_HPP

#include <string>

#include "json.hpp"
#include "pade/galois.hpp"
#include "pade/verify.hpp"

namespace pade {

using Json = nlohmann::ordered_json;

std::string rational_str(const Rational& x);

Json poly_json(const Polynomial& f);          // array of decimal strings
Json polygon_json(const NewtonPolygon& np);
Json certificate_json(const GaloisCertificate& cert);
Json suite_json(const SuiteReport& rep);
Json near_eisenstein_json(const NearEisensteinReport& rep);

std::string family_str(Family f);

}  // namespace pade

#endif
