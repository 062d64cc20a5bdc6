#pragma once

// Brute-force reference computations used to pin expected values in tests.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "equichar/group.hpp"

namespace oracle {

using equichar::FiniteGroup;
using equichar::Index;

// All commuting k-tuples of g, grouped into conjugation orbits (sizes, sorted).
inline std::vector<std::uint64_t> commuting_tuple_orbits(const FiniteGroup& g, int k) {
  const Index n = static_cast<Index>(g.order());
  std::vector<std::vector<Index>> tuples{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Index>> next;
    for (const auto& t : tuples)
      for (Index x = 0; x < n; ++x) {
        bool ok = true;
        for (auto y : t) ok = ok && g.commute(x, y);
        if (!ok) continue;
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::set<std::vector<Index>> seen;
  std::vector<std::uint64_t> sizes;
  for (const auto& t : tuples) {
    if (seen.count(t)) continue;
    std::set<std::vector<Index>> orbit;
    for (Index s = 0; s < n; ++s) {
      std::vector<Index> c;
      for (auto x : t) c.push_back(g.conj(s, x));
      orbit.insert(c);
    }
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Every subgroup of g, as sorted element lists (closure of all subsets generated
// incrementally from single elements).
inline std::set<std::vector<Index>> all_subgroups(const FiniteGroup& g) {
  const Index n = static_cast<Index>(g.order());
  auto close = [&](std::vector<Index> gens) {
    std::set<Index> s{0};
    std::vector<Index> frontier{0};
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto y : gens) {
        auto z = g.mul(x, y);
        if (s.insert(z).second) frontier.push_back(z);
      }
    }
    return std::vector<Index>(s.begin(), s.end());
  };
  std::set<std::vector<Index>> subs{{0}};
  std::vector<std::vector<Index>> frontier{{0}};
  while (!frontier.empty()) {
    auto h = frontier.back();
    frontier.pop_back();
    for (Index x = 0; x < n; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      auto gens = h;
      gens.push_back(x);
      auto c = close(gens);
      if (subs.insert(c).second) frontier.push_back(c);
    }
  }
  return subs;
}

// Subgroup classes up to conjugacy, each as the set of its conjugates.
inline std::vector<std::set<std::vector<Index>>> subgroup_classes(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  std::vector<std::set<std::vector<Index>>> classes;
  std::set<std::vector<Index>> seen;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    std::set<std::vector<Index>> cls;
    for (Index s = 0; s < g.order(); ++s) {
      std::vector<Index> c;
      for (auto x : h) c.push_back(g.conj(s, x));
      std::sort(c.begin(), c.end());
      cls.insert(c);
    }
    seen.insert(cls.begin(), cls.end());
    classes.push_back(cls);
  }
  return classes;
}

}  // namespace oracle
