#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "equichar/group.hpp"
#include "oracles.hpp"

using namespace equichar;

namespace {

std::vector<std::size_t> class_sizes(const GroupPtr& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<GroupPtr> small_groups() {
  return {FiniteGroup::trivial(),
          FiniteGroup::cyclic(2),
          FiniteGroup::cyclic(4),
          FiniteGroup::cyclic(6),
          FiniteGroup::symmetric(3),
          FiniteGroup::dihedral(4),
          FiniteGroup::symmetric(4),
          FiniteGroup::product({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)}),
          FiniteGroup::product({FiniteGroup::symmetric(3), FiniteGroup::cyclic(2)}),
          FiniteGroup::wreath(FiniteGroup::cyclic(2), 2),
          FiniteGroup::wreath(FiniteGroup::cyclic(3), 2),
          FiniteGroup::permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}})};
}

std::uint64_t partitions(int n) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int i = part; i <= n; ++i) p[i] += p[i - part];
  return p[n];
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(FiniteGroup::cyclic(2)->order() == 2);
  CHECK(FiniteGroup::symmetric(4)->order() == 24);
  CHECK(FiniteGroup::dihedral(5)->order() == 10);
  CHECK(FiniteGroup::wreath(FiniteGroup::cyclic(2), 2)->order() == 8);
  CHECK(FiniteGroup::wreath(FiniteGroup::cyclic(2), 3)->order() == 48);
  CHECK(FiniteGroup::wreath(FiniteGroup::symmetric(3), 4)->order() == 31104);
  CHECK(FiniteGroup::product({FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)})->order() == 12);
}

TEST_CASE("descriptor errors") {
  GroupSpec bad;
  bad.kind = GroupSpec::Kind::cyclic;
  bad.n = 0;
  CHECK_THROWS_AS(make_group(bad), UsageError);
  CHECK_THROWS_AS(FiniteGroup::symmetric(-1), UsageError);
  CHECK_THROWS_AS(FiniteGroup::permutations(3, {{1, 0, 2}, {1, 0}}), UsageError);
  CHECK_THROWS_AS(FiniteGroup::permutations(3, {{1, 1, 2}}), UsageError);
}

TEST_CASE("group axioms hold for constructed groups") {
  for (const auto& g : small_groups()) {
    CAPTURE(g->label());
    CHECK_NOTHROW(g->validate());
    for (Index a = 0; a < g->order(); ++a) CHECK(g->mul(g->inv(a), a) == 0);
  }
  CHECK_NOTHROW(FiniteGroup::wreath(FiniteGroup::symmetric(3), 3)->validate(20000));
  CHECK_NOTHROW(FiniteGroup::wreath(FiniteGroup::cyclic(3), 4)->validate(20000));
}

TEST_CASE("structural wreath multiplication matches the defining formula") {
  auto w = FiniteGroup::wreath(FiniteGroup::symmetric(3), 4);
  auto inner = FiniteGroup::symmetric(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(w->order() - 1));
  for (int trial = 0; trial < 500; ++trial) {
    Index x = pick(rng), y = pick(rng);
    std::vector<Index> a, b, c;
    std::vector<int> s, t, u;
    w->wreath_decode(x, a, s);
    w->wreath_decode(y, b, t);
    w->wreath_decode(w->mul(x, y), c, u);
    std::vector<int> sinv(4);
    for (int i = 0; i < 4; ++i) sinv[s[i]] = i;
    for (int i = 0; i < 4; ++i) {
      CHECK(u[i] == s[t[i]]);
      CHECK(c[i] == inner->mul(a[i], b[sinv[i]]));
    }
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(FiniteGroup::symmetric(3)) == std::vector<std::size_t>{1, 2, 3});
  CHECK(class_sizes(FiniteGroup::cyclic(4)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(conjugacy_classes(FiniteGroup::symmetric(3)).front() == std::vector<Index>{0});
  for (const auto& g : small_groups()) {
    auto cls = conjugacy_classes(g);
    std::vector<Index> all;
    for (const auto& c : cls) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    std::vector<Index> expect(g->order());
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all == expect);
    CHECK(cls.size() == oracle::commuting_tuple_orbits(*g, 1).size());
  }
}

TEST_CASE("wreath class counts are multipartition counts") {
  // classes of G wr S_n = number of c(G)-tuples of partitions with total size n
  auto multipartitions = [](int colours, int n) {
    std::vector<std::uint64_t> f(n + 1, 0);
    f[0] = 1;
    for (int c = 0; c < colours; ++c) {
      std::vector<std::uint64_t> g(n + 1, 0);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) g[i + j] += f[i] * partitions(j);
      f = g;
    }
    return f[n];
  };
  CHECK(multipartitions(3, 4) == 51);
  CHECK(conjugacy_classes(FiniteGroup::wreath(FiniteGroup::cyclic(2), 3)).size() == multipartitions(2, 3));
  CHECK(conjugacy_classes(FiniteGroup::wreath(FiniteGroup::cyclic(3), 3)).size() == multipartitions(3, 3));
  CHECK(conjugacy_classes(FiniteGroup::wreath(FiniteGroup::symmetric(3), 3)).size() == multipartitions(3, 3));
  CHECK(conjugacy_classes(FiniteGroup::wreath(FiniteGroup::symmetric(3), 4)).size() == 51);
}

TEST_CASE("centralizers") {
  auto s3 = FiniteGroup::symmetric(3);
  // generators: (0 1) then the 3-cycle
  const Index swap = s3->generators()[0];
  const Index cycle = s3->generators()[1];
  CHECK(centralizer(s3, CommutingTuple{{swap}}).order() == 2);
  CHECK(centralizer(s3, CommutingTuple{{cycle}}).order() == 3);
  CHECK(centralizer(s3, CommutingTuple{{0}}).order() == 6);
  CHECK(centralizer(s3, CommutingTuple{}).order() == 6);
  for (const auto& g : small_groups())
    for (Index x = 0; x < g->order(); ++x) {
      auto c = centralizer(g, CommutingTuple{{x}});
      std::uint64_t brute = 0;
      for (Index y = 0; y < g->order(); ++y) brute += g->commute(x, y) ? 1 : 0;
      CHECK(c.order() == brute);
    }
}

TEST_CASE("subgroup classes") {
  auto orders = [](const GroupPtr& g) {
    std::vector<std::uint64_t> o;
    for (const auto& h : subgroups_up_to_conjugacy(g)) o.push_back(h.order());
    return o;
  };
  CHECK(orders(FiniteGroup::cyclic(2)) == std::vector<std::uint64_t>{1, 2});
  CHECK(orders(FiniteGroup::symmetric(3)) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(FiniteGroup::cyclic(6)) == std::vector<std::uint64_t>{1, 2, 3, 6});
  CHECK(orders(FiniteGroup::trivial()) == std::vector<std::uint64_t>{1});
  for (const auto& g : small_groups()) {
    CAPTURE(g->label());
    auto reps = subgroups_up_to_conjugacy(g);
    auto brute = oracle::subgroup_classes(*g);
    REQUIRE(reps.size() == brute.size());
    std::set<std::vector<Index>> canon;
    for (const auto& h : reps) {
      canon.insert(h.elements);
      CHECK(canonical_conjugate(h) == h.elements);
      bool found = false;
      for (const auto& cls : brute) found = found || cls.count(h.elements) > 0;
      CHECK(found);
    }
    CHECK(canon.size() == reps.size());
    CHECK(reps.front().order() == 1);
    CHECK(reps.back().order() == g->order());
  }
}

TEST_CASE("subgroup budget") {
  Budget b;
  b.max_subgroup_lattice_order = 10;
  CHECK_THROWS_AS(subgroups_up_to_conjugacy(FiniteGroup::symmetric(4), b), ResourceError);
}

TEST_CASE("commuting tuple classes") {
  auto s3 = FiniteGroup::symmetric(3);
  auto total = [](const std::vector<TupleClass>& v) {
    std::uint64_t t = 0;
    for (const auto& c : v) t += c.size;
    return t;
  };
  CHECK(commuting_tuple_classes(s3, 0).size() == 1);
  CHECK(commuting_tuple_classes(s3, 1).size() == 3);
  auto pairs = commuting_tuple_classes(s3, 2);
  CHECK(pairs.size() == 8);
  CHECK(total(pairs) == 18);
  CHECK(commuting_tuple_classes(FiniteGroup::cyclic(2), 2).size() == 4);

  for (const auto& g : small_groups()) {
    if (g->order() > 24) continue;
    CAPTURE(g->label());
    for (int k = 0; k <= 3; ++k) {
      auto classes = commuting_tuple_classes(g, k);
      std::vector<std::uint64_t> sizes;
      for (const auto& c : classes) {
        CHECK(is_commuting(*g, c.representative.entries));
        CHECK(c.representative.entries.size() == static_cast<std::size_t>(k));
        sizes.push_back(c.size);
      }
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == oracle::commuting_tuple_orbits(*g, k));
    }
  }
}

TEST_CASE("tuple classes fiber over element classes") {
  for (const auto& g : small_groups()) {
    if (g->order() > 24) continue;
    for (int k = 0; k <= 2; ++k) {
      std::size_t fibered = 0;
      for (const auto& cls : conjugacy_classes(g)) {
        auto c = centralizer(g, CommutingTuple{{cls.front()}});
        fibered += commuting_tuple_classes(c, k).size();
      }
      CHECK(fibered == commuting_tuple_classes(g, k + 1).size());
    }
  }
}
