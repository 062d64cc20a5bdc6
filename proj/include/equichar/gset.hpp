#pragma once

#include <span>
#include <vector>

#include "equichar/group.hpp"

namespace equichar {

using Perm = std::vector<Index>;

/// A finite set of points 0..size-1 with commuting actions of two groups.
///
/// The O-side ("orbifold") group `gO` and the B-side ("Burnside") group `gB`
/// act through one permutation per generator. The image of an arbitrary
/// element is obtained by walking its word back to the identity, so no
/// |G| x |X| table is ever stored.
class BiSet {
public:
  BiSet(GroupPtr gO, GroupPtr gB, std::size_t size, std::vector<Perm> actO, std::vector<Perm> actB);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const GroupPtr& gO() const { return gO_; }
  const GroupPtr& gB() const { return gB_; }
  std::span<const Perm> actO() const { return actO_; }
  std::span<const Perm> actB() const { return actB_; }

  Index act_o(Index g, Index x) const {
    while (g != 0) {
      x = actO_[gO_->word_letter(g)][x];
      g = gO_->word_parent(g);
    }
    return x;
  }
  Index act_b(Index b, Index x) const {
    while (b != 0) {
      x = actB_[gB_->word_letter(b)][x];
      b = gB_->word_parent(b);
    }
    return x;
  }

  /// Full permutation of an O-side element.
  Perm perm_o(Index g) const;

  bool o_side_trivial() const;
  bool b_side_trivial() const;

  /// Throws InvariantViolation unless both actions are homomorphisms and commute.
  /// The homomorphism check walks |G| x |generators| x |X| images and is skipped
  /// above `work_limit` (commutation is always checked).
  void validate(std::uint64_t work_limit = 50000000) const;

  static BiSet empty_set(GroupPtr gO, GroupPtr gB);
  /// `size` points, both actions trivial.
  static BiSet trivial_set(GroupPtr gO, GroupPtr gB, std::size_t size);
  /// gO acting on itself by left multiplication; gB trivial.
  static BiSet regular(GroupPtr gO, GroupPtr gB);
  /// gO x gB with gO acting on the first factor and gB on the second, both by left multiplication.
  static BiSet biregular(GroupPtr gO, GroupPtr gB);
  /// gB-set gB/H for a subgroup H of gB (left cosets, ordered by minimal element); O-side trivial.
  static BiSet coset_space(GroupPtr gO, const Subgroup& h);

private:
  GroupPtr gO_;
  GroupPtr gB_;
  std::size_t size_ = 0;
  std::vector<Perm> actO_;
  std::vector<Perm> actB_;
};

/// Orbit label per point under the group generated by the given O-side elements;
/// labels are dense and ordered by the orbit's smallest point.
std::vector<Index> orbit_labels(const BiSet& x, std::span<const Index> o_elements, std::size_t* count = nullptr);

/// Points of `x` fixed by every entry of `phi`, with the centralizer of `phi`
/// (re-indexed as a group) acting on the O-side and all of gB on the B-side.
BiSet fixed_set(const BiSet& x, const CommutingTuple& phi);

/// K-orbits of `x` with the induced gB action; the O-side action is trivial.
BiSet quotient_by(const BiSet& x, const Subgroup& k);

/// Multisets of size k with diagonal actions.
BiSet symmetric_power(const BiSet& x, int k, const Budget& budget = default_budget());

/// x^n under wreath(gO, n) on the O-side and diagonal gB.
BiSet wreath_power(const BiSet& x, int n, const Budget& budget = default_budget());
/// wreath_power when the wreath group has already been built.
BiSet wreath_power(const BiSet& x, const GroupPtr& wreath_group, const Budget& budget = default_budget());

BiSet product(const BiSet& x, const BiSet& y);
BiSet disjoint_union(const BiSet& x, const BiSet& y);

/// Point index of a tuple in x^n (coordinate 0 least significant).
std::uint64_t tuple_index(std::span<const Index> coords, std::size_t base);

}  // namespace equichar
