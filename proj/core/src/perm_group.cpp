#include "cayrep/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "cayrep/errors.hpp"

namespace cayrep {

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup generate_group(const std::vector<Permutation>& gens, int degree, std::size_t cap) {
  if (cap < 1) throw ValidationError("closure cap must be >= 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw ValidationError("generator degree " + std::to_string(g.degree()) +
                            " does not match group degree " + std::to_string(degree));

  std::set<std::vector<int>> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id.images());
  queue.push_back(id);

  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation prod = compose(cur, g);
      if (seen.contains(prod.images())) continue;
      if (seen.size() + 1 > cap)
        throw ResourceLimitError("group closure exceeds cap of " + std::to_string(cap) +
                                     " elements",
                                 seen.size() + 1);
      seen.insert(prod.images());
      queue.push_back(std::move(prod));
    }
  }

  PermGroup result;
  result.degree = degree;
  result.generators = gens;
  result.elements.reserve(seen.size());
  for (const auto& images : seen) result.elements.emplace_back(images);
  // std::set iterates in lexicographic image order: the canonical order.
  return result;
}

bool is_transitive(const PermGroup& p) {
  if (p.degree == 0) return true;
  std::vector<char> hit(p.degree, 0);
  int count = 0;
  for (const auto& e : p.elements) {
    int v = e(0);
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
  }
  return count == p.degree;
}

bool is_regular(const PermGroup& p, int n) {
  if (p.degree != n)
    throw ValidationError("degree " + std::to_string(p.degree) +
                          " does not match point count " + std::to_string(n));
  return static_cast<int>(p.order()) == n && is_transitive(p);
}

bool is_abelian(const PermGroup& p) {
  // Pairwise commuting generators already force the group abelian.
  const auto& probe = p.generators.empty() ? p.elements : p.generators;
  for (std::size_t i = 0; i < probe.size(); ++i)
    for (std::size_t j = i + 1; j < probe.size(); ++j)
      if (compose(probe[i], probe[j]) != compose(probe[j], probe[i])) return false;
  return true;
}

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens, int degree) {
  std::vector<char> hit(degree, 0);
  std::vector<int> frontier{point};
  hit[point] = 1;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (const auto& g : gens) {
      int w = g(frontier[i]);
      if (!hit[w]) {
        hit[w] = 1;
        frontier.push_back(w);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

} // namespace cayrep
