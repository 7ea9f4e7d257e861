#ifndef PADE_POLY_HPP
#define PADE_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "pade/numeric.hpp"

namespace pade {

/// Dense univariate polynomial with exact integer coefficients, ascending
/// order (index j holds a_j). No trailing zero is stored; the zero polynomial
/// is the empty list and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(Integer c);
  static Polynomial monomial(Integer c, long k);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& coeff(long j) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Integer& c, const Polynomial& f);

  Polynomial derivative() const;
  /// f(-x): coefficient j negated iff j odd.
  Polynomial substitute_neg() const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;

  /// gcd of coefficients (0 for the zero polynomial), sign of the leading one.
  Integer content() const;
  Polynomial primitive_part() const;

  /// Largest k with x^k dividing f; 0 for the zero polynomial.
  long order_at_zero() const;

  std::string to_text() const;  // ascending space-separated decimal
  static Polynomial from_text(const std::string& text);

 private:
  std::vector<Integer> coeffs_;
  void normalize();
};

/// Product with every term of degree >= k dropped.
Polynomial truncated_mul(const Polynomial& f, const Polynomial& g, long k);

/// Exact resultant via fraction-free subresultant PRS.
Integer resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 1 (integer-valued for
/// integral f, returned as an exact rational).
Rational discriminant(const Polynomial& f);

}  // namespace pade

#endif
