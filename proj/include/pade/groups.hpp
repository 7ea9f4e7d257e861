#ifndef PADE_GROUPS_HPP
#define PADE_GROUPS_HPP

#include <string>
#include <vector>

namespace pade {

/// One transitive permutation group of degree 3..7, given by generators; the
/// cycle-type set is derived by closure on first use.
struct TransitiveGroup {
  std::string name;
  int degree = 0;
  long order = 0;
  bool contains_alternating = false;
  std::vector<std::vector<int>> generators;   // 0-based images
  std::vector<std::vector<long>> cycle_types;  // sorted descending partitions

  bool has_type(const std::vector<long>& type) const;
};

/// The classified transitive groups of the given degree (3..7), with cycle
/// types already expanded and the stated order verified against the closure.
const std::vector<TransitiveGroup>& transitive_groups(int degree);

}  // namespace pade

#endif
