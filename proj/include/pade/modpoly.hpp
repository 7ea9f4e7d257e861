#ifndef PADE_MODPOLY_HPP
#define PADE_MODPOLY_HPP

#include <vector>

#include "pade/poly.hpp"

namespace pade {

/// Dense polynomial over the p-element field, residues in [0, p-1] ascending,
/// no trailing zero.
struct ModPoly {
  unsigned long p = 0;
  std::vector<unsigned long> c;

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  unsigned long coeff(long j) const {
    return (j < 0 || j >= static_cast<long>(c.size())) ? 0 : c[j];
  }
  unsigned long leading() const { return c.back(); }
  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const ModPoly&) const = default;
};

ModPoly reduce_mod(const Polynomial& f, unsigned long p);
Polynomial lift(const ModPoly& f);  // symmetric-free lift, residues as-is

ModPoly mod_add(const ModPoly& a, const ModPoly& b);
ModPoly mod_sub(const ModPoly& a, const ModPoly& b);
ModPoly mod_mul(const ModPoly& a, const ModPoly& b);
ModPoly mod_rem(const ModPoly& a, const ModPoly& b);
ModPoly mod_gcd(ModPoly a, ModPoly b);  // monic
ModPoly mod_monic(const ModPoly& a);
ModPoly mod_derivative(const ModPoly& a);
ModPoly mod_pow(const ModPoly& base, const Integer& e, const ModPoly& mod);
unsigned long mod_eval(const ModPoly& a, unsigned long x);

struct FactorizationModP {
  unsigned long p = 0;
  unsigned long unit = 1;   // leading residue of the input
  unsigned long seed = 1;   // equal-degree splitting seed, for reproducibility
  std::vector<std::pair<ModPoly, unsigned long>> factors;  // monic irreducible
};

/// Complete factorization over F_p (squarefree decomposition, distinct-degree,
/// then seeded Cantor-Zassenhaus equal-degree splitting).
FactorizationModP factor_mod(const ModPoly& f, unsigned long seed = 1);

/// Degrees of the irreducible factors, with multiplicity, descending.
std::vector<long> factor_degrees(const FactorizationModP& fac);

struct ModRoot {
  unsigned long r;
  bool multiple;
  bool operator==(const ModRoot&) const = default;
};

/// All residues r with f(r) = 0, flagged simple/multiple, ascending.
std::vector<ModRoot> roots_mod(const ModPoly& f);

}  // namespace pade

#endif
