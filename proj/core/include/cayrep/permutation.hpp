#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cayrep {

/// A permutation of {0,...,n-1}, stored as its image table.
/// Immutable after construction; the constructor rejects non-bijections.
class Permutation {
public:
  Permutation() = default; // degree 0

  /// images[v] is the image of v. Throws ValidationError unless it is a
  /// bijection on {0,...,n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Build from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Cycle notation, e.g. "(0 2 4)(1 3 5)"; "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Lexicographic order on image sequences; this is the canonical total
  /// order used for deterministic element lists.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<int> images_;
};

/// result(v) = p(q(v)): q is applied first. The single composition
/// convention used everywhere, including certificate algebra.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation invert(const Permutation& p);

/// p composed with itself k times (k >= 0).
Permutation power(const Permutation& p, int k);

} // namespace cayrep
