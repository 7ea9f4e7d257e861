#include "pade/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace pade {

namespace {

// cross(o, a, b) <= 0  <=>  b on or below the line through o, a
long cross(const std::pair<long, long>& o, const std::pair<long, long>& a,
           const std::pair<long, long>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

Rational make_slope(const std::pair<long, long>& a,
                    const std::pair<long, long>& b) {
  Rational s(b.second - a.second, b.first - a.first);
  s.canonicalize();
  return s;
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f, unsigned long p) {
  if (f.is_zero()) throw std::domain_error("newton polygon of zero");
  NewtonPolygon np;
  np.prime = p;
  np.lowest_index = f.order_at_zero();

  std::vector<std::pair<long, long>> points;
  long min_val = 0;
  bool have_min = false;
  for (long j = 0; j <= f.degree(); ++j) {
    if (f.coeff(j) == 0) continue;
    long v = valuation(p, f.coeff(j));
    points.emplace_back(j, v);
    if (!have_min || v < min_val) {
      min_val = v;
      have_min = true;
    }
  }
  for (const auto& [j, v] : points)
    if (v == min_val) np.min_valuation_indices.push_back(j);

  // monotone chain, lower hull; collinear middle points are merged away
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  np.vertices = hull;

  for (std::size_t i = 1; i < hull.size(); ++i) {
    NewtonSegment seg;
    seg.slope = make_slope(hull[i - 1], hull[i]);
    seg.length = hull[i].first - hull[i - 1].first;
    if (seg.slope == 0) np.flatness += seg.length;
    np.segments.push_back(std::move(seg));
  }
  np.steepness = Rational(0);
  for (const auto& seg : np.segments)
    if (abs(seg.slope) > np.steepness) np.steepness = abs(seg.slope);
  return np;
}

Integer newton_index(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("newton index of zero");
  if (f.coeff(0) == 0)
    throw std::domain_error(
        "newton index requires f(0) != 0 (strip x-power first)");
  Polynomial g = f.primitive_part();
  Integer idx(1);
  std::set<unsigned long> primes;
  for (unsigned long p : small_prime_divisors(g.coeff(0))) primes.insert(p);
  for (unsigned long p : small_prime_divisors(g.leading())) primes.insert(p);
  for (unsigned long p : primes) {
    NewtonPolygon np = newton_polygon(g, p);
    for (const auto& seg : np.segments)
      idx = lcm(idx, Integer(seg.slope.get_den()));
  }
  return idx;
}

bool eisenstein_dumas(const Polynomial& f, unsigned long p) {
  if (f.is_zero() || f.degree() < 1) return false;
  if (f.coeff(0) == 0) return false;
  NewtonPolygon np = newton_polygon(f, p);
  if (np.segments.size() != 1) return false;
  const auto& lo = np.vertices.front();
  const auto& hi = np.vertices.back();
  if (lo.first != 0 || hi.second != 0) return false;
  Integer m(lo.second), n(hi.first);
  return gcd(m, n) == 1;
}

std::vector<SegmentDegreeConstraint> local_degree_constraints(
    const Polynomial& f, unsigned long p) {
  NewtonPolygon np = newton_polygon(f, p);
  std::vector<SegmentDegreeConstraint> out;
  for (const auto& seg : np.segments) {
    SegmentDegreeConstraint c;
    c.slope = seg.slope;
    c.length = seg.length;
    c.denominator = static_cast<long>(seg.slope.get_den().get_si());
    for (long d = c.denominator; d <= c.length; d += c.denominator)
      c.allowed.push_back(d);
    out.push_back(std::move(c));
  }
  return out;
}

std::set<long> possible_factor_degrees(
    const Polynomial& f, const std::vector<unsigned long>& primes,
    unsigned long seed, const std::optional<Integer>& known_disc) {
  Integer disc_num = known_disc ? *known_disc
                                : Integer(discriminant(f).get_num());
  if (disc_num == 0) throw std::domain_error("not squarefree");
  long n = f.degree();
  std::set<long> result;
  for (long d = 0; d <= n; ++d) result.insert(d);

  for (unsigned long p : primes) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
      throw std::invalid_argument("prime divides leading coefficient");
    std::vector<bool> reachable(n + 1, false);
    reachable[0] = true;
    auto add_part = [&](long step, long total) {
      // Minkowski-add {0, step, 2*step, ..., total}
      std::vector<bool> next(n + 1, false);
      for (long base = 0; base <= n; ++base) {
        if (!reachable[base]) continue;
        for (long t = 0; t <= total; t += step)
          if (base + t <= n) next[base + t] = true;
      }
      reachable.swap(next);
    };
    bool ramified = mpz_divisible_ui_p(disc_num.get_mpz_t(), p);
    if (ramified) {
      NewtonPolygon np = newton_polygon(f, p);
      if (np.lowest_index > 0) add_part(1, np.lowest_index);
      for (const auto& seg : np.segments) {
        long b = static_cast<long>(seg.slope.get_den().get_si());
        add_part(b, seg.length);
      }
    } else {
      FactorizationModP fac = factor_mod(reduce_mod(f, p), seed);
      for (long d : factor_degrees(fac)) add_part(d, d);
    }
    std::set<long> keep;
    for (long d : result)
      if (reachable[d]) keep.insert(d);
    result.swap(keep);
  }
  return result;
}

std::pair<long, Rational> flatness_steepness(const Polynomial& f,
                                             unsigned long p) {
  NewtonPolygon np = newton_polygon(f, p);
  return {np.flatness, np.steepness};
}

DegreeExclusion degree_exclusion_interval(const Polynomial& f,
                                          unsigned long p) {
  if (f.is_zero() || !f.is_monic())
    throw std::invalid_argument("degree exclusion requires a monic input");
  NewtonPolygon np = newton_polygon(f, p);
  DegreeExclusion out;
  const NewtonSegment* last_nonzero = nullptr;
  for (const auto& seg : np.segments)
    if (seg.slope != 0) last_nonzero = &seg;
  if (last_nonzero == nullptr) {
    out.u = f.degree();
    out.bounded = false;
    return out;
  }
  out.u = f.degree() - last_nonzero->length;
  out.bounded = true;
  out.bound = 1 / abs(last_nonzero->slope);
  return out;
}

}  // namespace pade
