#include "cayrep/permutation.hpp"

#include <numeric>
#include <sstream>

#include "cayrep/errors.hpp"

namespace cayrep {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw ValidationError("image table is not a bijection on {0,...," +
                            std::to_string(n - 1) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ValidationError("cycle point out of range");
      im[from] = to;
    }
  }
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (images_[v] != v) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::vector<char> done(degree(), 0);
  std::ostringstream out;
  bool any = false;
  for (int v = 0; v < degree(); ++v) {
    if (done[v] || images_[v] == v) continue;
    any = true;
    out << '(';
    int u = v;
    bool first = true;
    while (!done[u]) {
      done[u] = 1;
      if (!first) out << ' ';
      out << u;
      first = false;
      u = images_[u];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw ValidationError("cannot compose permutations of degrees " +
                          std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  std::vector<int> im(p.degree());
  for (int v = 0; v < p.degree(); ++v) im[v] = p(q(v));
  return Permutation(std::move(im));
}

Permutation invert(const Permutation& p) {
  std::vector<int> im(p.degree());
  for (int v = 0; v < p.degree(); ++v) im[p(v)] = v;
  return Permutation(std::move(im));
}

Permutation power(const Permutation& p, int k) {
  Permutation acc = Permutation::identity(p.degree());
  for (int i = 0; i < k; ++i) acc = compose(acc, p);
  return acc;
}

} // namespace cayrep
