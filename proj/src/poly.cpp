#include "pade/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pade {

namespace {

const Integer kZero(0);

constexpr std::size_t kKaratsubaThreshold = 32;

std::vector<Integer> schoolbook(const std::vector<Integer>& a,
                                const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Integer> mul_rec(const std::vector<Integer>& a,
                             const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
    return schoolbook(a, b);
  std::size_t m = std::max(a.size(), b.size()) / 2;
  auto split = [m](const std::vector<Integer>& v) {
    std::vector<Integer> lo(v.begin(),
                            v.begin() + std::min(m, v.size()));
    std::vector<Integer> hi(v.begin() + std::min(m, v.size()), v.end());
    return std::make_pair(lo, hi);
  };
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  auto z0 = mul_rec(a0, b0);
  auto z2 = mul_rec(a1, b1);
  auto add_vec = [](std::vector<Integer> x, const std::vector<Integer>& y) {
    if (x.size() < y.size()) x.resize(y.size(), kZero);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    return x;
  };
  auto z1 = mul_rec(add_vec(a0, a1), add_vec(b0, b1));
  std::vector<Integer> out(a.size() + b.size() - 1, kZero);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) {
    out[i + m] += z1[i];
    if (i < z0.size()) out[i + m] -= z0[i];
    if (i < z2.size()) out[i + m] -= z2[i];
  }
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * m] += z2[i];
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(Integer c) {
  Polynomial f;
  if (c != 0) f.coeffs_.push_back(std::move(c));
  return f;
}

Polynomial Polynomial::monomial(Integer c, long k) {
  Polynomial f;
  if (c != 0) {
    f.coeffs_.assign(k + 1, kZero);
    f.coeffs_[k] = std::move(c);
  }
  return f;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Polynomial::coeff(long j) const {
  if (j < 0 || j >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[j];
}

const Integer& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Integer& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  std::vector<Integer> out = f.coeffs_;
  if (out.size() < g.coeffs_.size()) out.resize(g.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] += g.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  std::vector<Integer> out = f.coeffs_;
  if (out.size() < g.coeffs_.size()) out.resize(g.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) out[i] -= g.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Polynomial();
  return Polynomial(mul_rec(f.coeffs_, g.coeffs_));
}

Polynomial operator*(const Integer& c, const Polynomial& f) {
  if (c == 0) return Polynomial();
  std::vector<Integer> out = f.coeffs_;
  for (Integer& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    out[j - 1] = Integer(j) * coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_neg() const {
  Polynomial out = *this;
  for (std::size_t j = 1; j < out.coeffs_.size(); j += 2)
    out.coeffs_[j] = -out.coeffs_[j];
  return out;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + Rational(*it);
  return acc;
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Integer Polynomial::content() const {
  Integer g(0);
  for (const Integer& c : coeffs_) g = gcd(g, c);
  if (!is_zero() && leading() < 0) g = -g;
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return Polynomial();
  Integer c = content();
  std::vector<Integer> out = coeffs_;
  for (Integer& x : out)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return Polynomial(std::move(out));
}

long Polynomial::order_at_zero() const {
  if (is_zero()) return 0;
  long k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

std::string Polynomial::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ' ';
    out += coeffs_[j].get_str();
  }
  return out;
}

Polynomial Polynomial::from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<Integer> coeffs;
  std::string tok;
  while (in >> tok) coeffs.emplace_back(tok);
  return Polynomial(std::move(coeffs));
}

Polynomial truncated_mul(const Polynomial& f, const Polynomial& g, long k) {
  if (k <= 0 || f.is_zero() || g.is_zero()) return Polynomial();
  std::vector<Integer> out(
      std::min<long>(k, f.degree() + g.degree() + 1), kZero);
  for (long i = 0; i <= f.degree() && i < k; ++i) {
    if (f.coeff(i) == 0) continue;
    for (long j = 0; j <= g.degree() && i + j < k; ++j)
      out[i + j] += f.coeff(i) * g.coeff(j);
  }
  return Polynomial(std::move(out));
}

namespace {

// lc(B)^(deg A - deg B + 1) * A = Q*B + R; returns R.
Polynomial pseudo_rem(const Polynomial& A, const Polynomial& B) {
  long delta = A.degree() - B.degree();
  Polynomial R = A;
  long steps = 0;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    Polynomial shift = Polynomial::monomial(R.leading(),
                                            R.degree() - B.degree());
    R = B.leading() * R - shift * B;
    ++steps;
  }
  // pad the multiplier up to the defining power
  for (long i = steps; i <= delta; ++i) R = B.leading() * R;
  return R;
}

Polynomial exact_div_scalar(const Polynomial& f, const Integer& d) {
  std::vector<Integer> out = f.coeffs();
  for (Integer& c : out)
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return Polynomial(std::move(out));
}

Integer int_pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

// Fraction-free subresultant PRS (Cohen, Alg. 3.3.7).
Integer resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return Integer(0);
  if (f.degree() == 0 && g.degree() == 0) return Integer(1);
  Polynomial A = f, B = g;
  int sign = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
  }
  // signed contents: primitive parts keep positive leading coefficient
  Integer ca = A.content(), cb = B.content();
  A = exact_div_scalar(A, ca);
  B = exact_div_scalar(B, cb);
  Integer t = int_pow(ca, B.degree()) * int_pow(cb, A.degree());
  Integer gg(1), h(1);
  while (B.degree() > 0) {
    long delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    Polynomial R = pseudo_rem(A, B);
    if (R.is_zero()) return Integer(0);  // nonconstant gcd
    A = B;
    B = exact_div_scalar(R, gg * int_pow(h, delta));
    gg = A.leading();
    if (delta > 0) {
      Integer num = int_pow(gg, delta);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(),
                   int_pow(h, delta - 1).get_mpz_t());
    }
  }
  // B is a nonzero constant: res = s * t * lc(B)^{deg A} / h^{deg A - 1}
  Integer num = int_pow(B.leading(), A.degree());
  Integer r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(),
               int_pow(h, A.degree() - 1).get_mpz_t());
  return sign * t * r;
}

Rational discriminant(const Polynomial& f) {
  if (f.is_zero() || f.degree() < 1)
    throw std::domain_error("discriminant requires degree >= 1");
  long n = f.degree();
  Integer res = resultant(f, f.derivative());
  int sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  Rational out(sign * res, f.leading());
  out.canonicalize();
  return out;
}

}  // namespace pade
