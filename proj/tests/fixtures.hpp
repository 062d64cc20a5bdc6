#pragma once

// Small spaces shared by the unit and acceptance tests.

#include "equichar/gset.hpp"

namespace fixture {

using namespace equichar;

inline GroupPtr triv() { return FiniteGroup::trivial(); }
inline GroupPtr z2() { return FiniteGroup::cyclic(2); }
inline GroupPtr z3() { return FiniteGroup::cyclic(3); }
inline GroupPtr s3() { return FiniteGroup::symmetric(3); }

// Images of the generators of gO acting on {a, b, c} = {0, 1, 2}:
// Z/2 swaps a and b, Z/3 rotates, S3 acts naturally.
inline std::vector<Perm> natural_on_three(const GroupPtr& g) {
  if (g->order() == 1) return std::vector<Perm>(g->generators().size(), Perm{0, 1, 2});
  if (g->order() == 2) return {Perm{1, 0, 2}};
  if (g->order() == 3) return {Perm{1, 2, 0}};
  if (g->order() == 6) return {Perm{1, 0, 2}, Perm{1, 2, 0}};
  throw UsageError("natural_on_three: unsupported group");
}

// {a, b, c} with gO acting through natural_on_three; the B-side swaps a and b
// whenever that commutes with the O-side, and is trivial otherwise.
inline BiSet swap_set(const GroupPtr& gO, const GroupPtr& gB) {
  auto ao = natural_on_three(gO);
  std::vector<Perm> ab;
  const bool commutes = gO->order() <= 2;
  for (std::size_t i = 0; i < gB->generators().size(); ++i)
    ab.push_back(gB->order() == 2 && commutes ? Perm{1, 0, 2} : Perm{0, 1, 2});
  return BiSet(gO, gB, 3, std::move(ao), std::move(ab));
}

// gB acting on gB by left multiplication; trivial O-side.
inline BiSet b_regular(const GroupPtr& gO, const GroupPtr& gB) {
  return BiSet::coset_space(gO, Subgroup::generated_by(gB, {}));
}

inline BiSet point(const GroupPtr& gO, const GroupPtr& gB) { return BiSet::trivial_set(gO, gB, 1); }

}  // namespace fixture
