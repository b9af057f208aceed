#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cayrep {

inline constexpr long long kDefaultMaxGroupOrder = 65536;

/// Orders of the cyclic factors of an abelian group, as given (not reduced
/// to invariant factors).
struct AbelianSpec {
  std::vector<int> factors; // each >= 2

  long long order() const;
  bool is_elementary_abelian_2() const;

  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;
};

/// x^flip * a, where a has the given exponent vector in the abelian part.
/// Plain abelian groups use the flip = 0 slice only.
struct GroupElement {
  int flip = 0;         // 0 or 1
  std::vector<int> vec; // vec[i] in [0, factors[i])

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  /// Lexicographic on (flip, vec): the canonical element order.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.flip <=> b.flip; c != 0) return c;
    return a.vec <=> b.vec;
  }
};

/// An abelian group A or its generalized dihedral extension Dih(A,x), with
/// x^2 = 1 and x^-1 a x = a^-1. Elements are enumerated canonically:
/// lexicographic on (flip, vector), identity at index 0.
class FiniteGroup {
public:
  static FiniteGroup abelian(AbelianSpec spec, long long max_order = kDefaultMaxGroupOrder);
  static FiniteGroup generalized_dihedral(AbelianSpec spec,
                                          long long max_order = kDefaultMaxGroupOrder);

  const AbelianSpec& abelian_part() const { return spec_; }
  bool dihedral() const { return dihedral_; }
  long long order() const { return order_; }

  /// Dih(A,x) is abelian exactly when A is elementary abelian 2.
  bool is_abelian() const { return !dihedral_ || spec_.is_elementary_abelian_2(); }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int index) const { return elements_[index]; }
  int index_of(const GroupElement& g) const;

  GroupElement identity_element() const;
  /// The inverting involution x = (1, 0); dihedral groups only.
  GroupElement flip_element() const;

  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inv(const GroupElement& g) const;
  int order_of(GroupElement g) const;

  /// One generator per cyclic factor, plus x when dihedral.
  std::vector<GroupElement> standard_generators() const;

  bool valid_element(const GroupElement& g) const;
  void require_valid(const GroupElement& g) const;

  /// Canonical spec string: cyclic:n, abelian:..., or gendih:...
  const std::string& spec_string() const { return spec_string_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.dihedral_ == b.dihedral_ && a.spec_ == b.spec_;
  }

private:
  FiniteGroup(AbelianSpec spec, bool dihedral, long long max_order);

  AbelianSpec spec_;
  bool dihedral_ = false;
  long long order_ = 0;
  std::vector<long long> strides_; // mixed-radix strides of the exponent vector
  std::vector<GroupElement> elements_;
  std::string spec_string_;
};

/// Parse the group-spec grammar:
///   cyclic:<n> | abelian:<n1>x...x<nr> | dihedral:<k> | gendih:<n1>x...x<nr>
/// with every factor a base-10 integer >= 2. dihedral:<k> is an alias for
/// gendih:<k>. Parse errors carry the offending position.
FiniteGroup build_group(std::string_view spec, long long max_order = kDefaultMaxGroupOrder);

} // namespace cayrep
