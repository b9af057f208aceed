#pragma once

#include <cstddef>
#include <vector>

#include "cayrep/permutation.hpp"

namespace cayrep {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A fully materialized permutation group: the element list is closed under
/// composition and inversion, contains the identity, and is sorted by image
/// sequence so equal groups compare equal.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const Permutation& p) const;
};

/// Breadth-first closure of the generators. Throws ResourceLimitError with
/// the partial count if the closure exceeds cap.
PermGroup generate_group(const std::vector<Permutation>& gens, int degree,
                         std::size_t cap = kDefaultClosureCap);

/// Sharply transitive on {0,...,n-1}: transitive and |P| = n.
bool is_regular(const PermGroup& p, int n);

bool is_transitive(const PermGroup& p);

/// All pairs of elements commute.
bool is_abelian(const PermGroup& p);

/// Orbit of a point under the generators, ascending.
std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens, int degree);

} // namespace cayrep
