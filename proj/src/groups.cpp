#include "pade/groups.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace pade {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<long> cycle_type_of(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<long> type;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

void expand(TransitiveGroup& g) {
  Perm ident(g.degree);
  for (int i = 0; i < g.degree; ++i) ident[i] = i;
  std::set<Perm> elems{ident};
  std::vector<Perm> frontier{ident};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const auto& gen : g.generators) {
        Perm x = compose(gen, e);
        if (elems.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  if (static_cast<long>(elems.size()) != g.order)
    throw std::logic_error("group table inconsistent: " + g.name);
  std::set<std::vector<long>> types;
  for (const Perm& e : elems) types.insert(cycle_type_of(e));
  g.cycle_types.assign(types.begin(), types.end());
}

std::vector<TransitiveGroup> build_degree(int degree) {
  // Classified transitive groups of degrees 3..7; generators verified against
  // the stated orders at expansion time.
  static const std::vector<TransitiveGroup> all = {
      {"C3", 3, 3, true, {{1, 2, 0}}, {}},
      {"S3", 3, 6, true, {{1, 2, 0}, {1, 0, 2}}, {}},

      {"C4", 4, 4, false, {{1, 2, 3, 0}}, {}},
      {"V4", 4, 4, false, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {}},
      {"D4", 4, 8, false, {{1, 2, 3, 0}, {2, 1, 0, 3}}, {}},
      {"A4", 4, 12, true, {{1, 2, 0, 3}, {1, 0, 3, 2}}, {}},
      {"S4", 4, 24, true, {{1, 2, 3, 0}, {1, 0, 2, 3}}, {}},

      {"C5", 5, 5, false, {{1, 2, 3, 4, 0}}, {}},
      {"D5", 5, 10, false, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, {}},
      {"F20", 5, 20, false, {{1, 2, 3, 4, 0}, {1, 3, 0, 2, 4}}, {}},
      {"A5", 5, 60, true, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, {}},
      {"S5", 5, 120, true, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, {}},

      {"C6", 6, 6, false, {{1, 2, 3, 4, 5, 0}}, {}},
      {"S3(6)", 6, 6, false,
       {{1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1}}, {}},
      {"D6", 6, 12, false,
       {{1, 2, 3, 4, 5, 0}, {5, 4, 3, 2, 1, 0}}, {}},
      {"A4(6)", 6, 12, false,
       {{5, 4, 0, 1, 3, 2}, {0, 1, 3, 2, 5, 4}}, {}},
      {"F18", 6, 18, false,
       {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}}, {}},
      {"2A4", 6, 24, false,
       {{5, 4, 0, 1, 3, 2}, {0, 1, 3, 2, 5, 4}, {1, 0, 3, 2, 5, 4}}, {}},
      {"S4(6+)", 6, 24, false,
       {{5, 4, 3, 2, 0, 1}, {0, 1, 5, 4, 3, 2}}, {}},
      {"S4(6-)", 6, 24, false,
       {{0, 5, 3, 1, 4, 2}, {2, 4, 0, 5, 1, 3}}, {}},
      {"S3xS3", 6, 36, false,
       {{3, 2, 5, 4, 0, 1},
        {2, 3, 0, 1, 5, 4},
        {4, 2, 5, 0, 3, 1},
        {2, 4, 0, 5, 1, 3}}, {}},
      {"F36", 6, 36, false,
       {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 1, 0, 2}}, {}},
      {"2S4", 6, 48, false,
       {{5, 4, 3, 2, 0, 1}, {0, 1, 5, 4, 3, 2}, {1, 0, 3, 2, 5, 4}}, {}},
      {"PSL(2,5)", 6, 60, false,
       {{1, 2, 3, 4, 0, 5}, {5, 1, 3, 2, 4, 0}}, {}},
      {"F36:2", 6, 72, false,
       {{1, 2, 0, 3, 4, 5},
        {0, 1, 2, 4, 5, 3},
        {3, 4, 5, 1, 0, 2},
        {3, 4, 5, 0, 1, 2}}, {}},
      {"PGL(2,5)", 6, 120, false,
       {{1, 2, 3, 4, 0, 5}, {5, 1, 3, 2, 4, 0}, {0, 2, 4, 1, 3, 5}}, {}},
      {"A6", 6, 360, true,
       {{1, 2, 3, 4, 0, 5}, {0, 2, 3, 4, 5, 1}}, {}},
      {"S6", 6, 720, true,
       {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, {}},

      {"C7", 7, 7, false, {{1, 2, 3, 4, 5, 6, 0}}, {}},
      {"D7", 7, 14, false,
       {{1, 2, 3, 4, 5, 6, 0}, {5, 4, 3, 2, 1, 0, 6}}, {}},
      {"F21", 7, 21, false,
       {{1, 2, 3, 4, 5, 6, 0}, {1, 3, 5, 0, 2, 4, 6}}, {}},
      {"F42", 7, 42, false,
       {{1, 2, 3, 4, 5, 6, 0}, {2, 5, 1, 4, 0, 3, 6}}, {}},
      {"PSL(3,2)", 7, 168, false,
       {{1, 3, 5, 2, 0, 6, 4}, {0, 1, 2, 4, 3, 6, 5}}, {}},
      {"A7", 7, 2520, true,
       {{1, 2, 3, 4, 0, 5, 6}, {0, 1, 3, 4, 5, 6, 2}}, {}},
      {"S7", 7, 5040, true,
       {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}, {}},
  };
  std::vector<TransitiveGroup> out;
  for (const TransitiveGroup& g : all)
    if (g.degree == degree) {
      TransitiveGroup copy = g;
      expand(copy);
      out.push_back(std::move(copy));
    }
  return out;
}

}  // namespace

bool TransitiveGroup::has_type(const std::vector<long>& type) const {
  return std::binary_search(cycle_types.begin(), cycle_types.end(), type);
}

const std::vector<TransitiveGroup>& transitive_groups(int degree) {
  if (degree < 3 || degree > 7)
    throw std::invalid_argument("group table covers degrees 3..7");
  static std::map<int, std::vector<TransitiveGroup>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(degree);
  if (it == cache.end()) it = cache.emplace(degree, build_degree(degree)).first;
  return it->second;
}

}  // namespace pade
