#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "equichar/gset.hpp"
#include "fixtures.hpp"

using namespace equichar;
using namespace fixture;

namespace {

std::uint64_t orbit_count_o(const BiSet& x) {
  std::size_t n = 0;
  auto all = Subgroup::whole(x.gO());
  orbit_labels(x, all.generators, &n);
  return n;
}

std::uint64_t fixed_count_o(const BiSet& x, Index g) {
  std::uint64_t c = 0;
  for (Index p = 0; p < x.size(); ++p) c += x.act_o(g, p) == p ? 1 : 0;
  return c;
}

std::vector<BiSet> sample_sets() {
  return {swap_set(z2(), z2()),        swap_set(z3(), z2()),          swap_set(s3(), triv()),
          BiSet::regular(s3(), z2()),  BiSet::biregular(z2(), z2()),  BiSet::biregular(z3(), z2()),
          point(s3(), z2()),           BiSet::empty_set(z2(), z2()),  product(swap_set(s3(), z2()), swap_set(s3(), z2())),
          disjoint_union(BiSet::regular(z3(), triv()), point(z3(), triv()))};
}

}  // namespace

TEST_CASE("fixed sets") {
  auto x = swap_set(z2(), triv());
  auto f = fixed_set(x, CommutingTuple{{1}});
  CHECK(f.size() == 1);
  CHECK(fixed_set(x, CommutingTuple{{0}}).size() == 3);
  CHECK(fixed_set(BiSet::regular(z2(), triv()), CommutingTuple{{1}}).empty());
  auto s = swap_set(s3(), triv());
  auto fs = fixed_set(s, CommutingTuple{{s3()->generators()[0]}});
  CHECK(fs.size() == 1);
  CHECK(fs.gO()->order() == 2);
  CHECK_NOTHROW(fs.validate());
}

TEST_CASE("fixed set size is a class function") {
  for (const auto& x : sample_sets()) {
    const auto& g = x.gO();
    for (const auto& cls : conjugacy_classes(g)) {
      const auto n = fixed_set(x, CommutingTuple{{cls.front()}}).size();
      for (auto y : cls) CHECK(fixed_set(x, CommutingTuple{{y}}).size() == n);
    }
  }
}

TEST_CASE("quotients") {
  auto x = BiSet::biregular(z2(), z2());
  auto q = quotient_by(x, Subgroup::whole(z2()));
  CHECK(q.size() == 2);
  CHECK(q.o_side_trivial());
  CHECK(q.actB()[0] == Perm{1, 0});
  CHECK(quotient_by(x, Subgroup::generated_by(z2(), {})).size() == 4);
  CHECK(quotient_by(BiSet::regular(s3(), triv()), Subgroup::whole(s3())).size() == 1);
}

TEST_CASE("symmetric powers") {
  auto x = BiSet::regular(z2(), triv());
  auto s2 = symmetric_power(x, 2);
  CHECK(s2.size() == 3);
  CHECK(s2.actO()[0] == Perm{2, 1, 0});
  CHECK(symmetric_power(x, 0).size() == 1);
  CHECK(symmetric_power(x, 1).actO()[0] == x.actO()[0]);
  CHECK(symmetric_power(BiSet::empty_set(z2(), triv()), 0).size() == 1);
  CHECK(symmetric_power(BiSet::empty_set(z2(), triv()), 3).size() == 0);
  CHECK(symmetric_power(BiSet::regular(s3(), triv()), 3).size() == 56);
  for (const auto& y : sample_sets())
    for (int k = 0; k <= 3; ++k) CHECK_NOTHROW(symmetric_power(y, k).validate());
  Budget tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(symmetric_power(BiSet::regular(s3(), triv()), 3, tiny), ResourceError);
}

TEST_CASE("multiset sum map is onto") {
  // every (a+b)-multiset splits as an a-multiset plus a b-multiset
  const int m = 4;
  auto x = BiSet::trivial_set(triv(), triv(), m);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      std::set<std::vector<Index>> sums;
      std::vector<std::vector<Index>> sa, sb;
      auto enumerate = [&](int k, std::vector<std::vector<Index>>& out) {
        std::vector<Index> cur;
        auto rec = [&](auto&& self, Index from) -> void {
          if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
          }
          for (Index v = from; v < m; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
          }
        };
        rec(rec, 0);
      };
      enumerate(a, sa);
      enumerate(b, sb);
      for (const auto& u : sa)
        for (const auto& v : sb) {
          auto w = u;
          w.insert(w.end(), v.begin(), v.end());
          std::sort(w.begin(), w.end());
          sums.insert(w);
        }
      CHECK(sums.size() == symmetric_power(x, a + b).size());
    }
}

TEST_CASE("wreath powers") {
  auto x = BiSet::regular(z2(), triv());
  auto w3 = wreath_power(x, 3);
  CHECK(w3.size() == 8);
  CHECK(w3.gO()->order() == 48);
  CHECK_NOTHROW(w3.validate());
  auto w1 = wreath_power(x, 1);
  CHECK(w1.size() == 2);
  auto b = wreath_power(BiSet::biregular(z2(), z2()), 2);
  CHECK(b.size() == 16);
  CHECK_NOTHROW(b.validate());
  CHECK_NOTHROW(wreath_power(swap_set(s3(), triv()), 3).validate());
  CHECK_NOTHROW(wreath_power(swap_set(z2(), z2()), 3).validate());
  Budget tiny;
  tiny.max_points = 100;
  CHECK_THROWS_AS(wreath_power(swap_set(s3(), triv()), 5, tiny), ResourceError);
}

TEST_CASE("products and unions") {
  auto r = BiSet::regular(z2(), triv());
  auto p = product(r, r);
  CHECK(p.size() == 4);
  CHECK(orbit_count_o(p) == 2);
  CHECK(product(r, point(z2(), triv())).actO()[0] == r.actO()[0]);
  CHECK(disjoint_union(r, BiSet::empty_set(z2(), triv())).actO()[0] == r.actO()[0]);
  CHECK_THROWS_AS(product(r, BiSet::regular(z3(), triv())), UsageError);
}

TEST_CASE("orbit counting lemma") {
  for (const auto& x : sample_sets()) {
    std::uint64_t total = 0;
    for (Index g = 0; g < x.gO()->order(); ++g) total += fixed_count_o(x, g);
    CHECK(total == orbit_count_o(x) * x.gO()->order());
  }
  auto w = wreath_power(swap_set(z3(), triv()), 3);
  std::uint64_t total = 0;
  for (Index g = 0; g < w.gO()->order(); ++g) total += fixed_count_o(w, g);
  CHECK(total == orbit_count_o(w) * w.gO()->order());
}

TEST_CASE("biset validation rejects bad actions") {
  CHECK_THROWS_AS(BiSet(z2(), triv(), 2, {Perm{0, 0}}, {}), UsageError);
  // a 3-cycle is not an involution, so it does not define a Z/2 action
  CHECK_THROWS_AS(BiSet(z2(), triv(), 3, {Perm{1, 2, 0}}, {}).validate(), InvariantViolation);
  // non-commuting actions
  CHECK_THROWS_AS(BiSet(z2(), z2(), 3, {Perm{1, 0, 2}}, {Perm{0, 2, 1}}).validate(), InvariantViolation);
  for (const auto& x : sample_sets()) CHECK_NOTHROW(x.validate());
}
