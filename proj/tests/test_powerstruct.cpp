#include <random>

#include "doctest.h"
#include "equichar/powerstruct.hpp"
#include "fixtures.hpp"

using namespace equichar;
using namespace fixture;

namespace {

IntSeries ints(std::vector<Int> c) { return IntSeries(IntegerRing::get(), std::move(c)); }

IntSeries random_int_series(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Int> c{1};
  for (int i = 1; i <= n; ++i) c.push_back(d(rng));
  return ints(c);
}

BurnsideSeries random_burnside_series(const std::shared_ptr<const BurnsideLambda>& lam, std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  auto out = BurnsideSeries::one(lam, n);
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> c;
    for (std::size_t j = 0; j < lam->burnside()->rank(); ++j) c.push_back(d(rng));
    out[i] = BurnsideElement(lam->burnside(), c);
  }
  return out;
}

std::vector<Int> partition_numbers(int n) {
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, Int(0));
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int i = part; i <= n; ++i) p[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i - part)];
  return p;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto one_minus_t = ints({1, -1, 0, 0, 0});
  auto geometric = ints({1, 1, 1, 1, 1});
  CHECK(one_minus_t * geometric == ints({1, 0, 0, 0, 0}));
  CHECK(substitute(ints({1, 1, 0, 0}), Int(1), 2) == ints({1, 0, 1, 0}));
  CHECK(invert(ints({1, 1, 0, 0, 0})) == ints({1, -1, 1, -1, 1}));
  CHECK(invert(ints({-1, 0, 0})) == ints({-1, 0, 0}));
  CHECK_THROWS_AS(invert(ints({2, 1})), UsageError);
  CHECK_THROWS_AS(substitute(ints({1, 1}), Int(1), 0), UsageError);
  CHECK(truncate(geometric, 2) == ints({1, 1, 1}));
  CHECK(pow_int(one_minus_t, -2) == ints({1, 2, 3, 4, 5}));
  CHECK(to_string(ints({1, 2, 0, -1})) == "1 + 2·t - t^3");
}

TEST_CASE("lambda factorization over the integers") {
  auto z = IntegerRing::get();
  auto b = lambda_factorize(ints({1, 1, 0, 0, 0, 0, 0}));
  // 1 + t = (1 - t^2) / (1 - t)
  CHECK(b == std::vector<Int>{1, -1, 0, 0, 0, 0});
  CHECK(lambda_product(z, b, 6) == ints({1, 1, 0, 0, 0, 0, 0}));
  auto zero = lambda_factorize(ints({1, 0, 0, 0}));
  CHECK(zero == std::vector<Int>{0, 0, 0});
  auto zeta = TruncatedSeries<IntegerRing>(z, z->zeta(0, 5));
  CHECK(lambda_factorize(zeta) == std::vector<Int>{1, 0, 0, 0, 0});
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_int_series(rng, 7);
    CHECK(lambda_product(z, lambda_factorize(a), 7) == a);
  }
}

TEST_CASE("integer oracle") {
  CHECK(integer_power_oracle(ints({1, 1, 0, 0}), 2) == ints({1, 2, 1, 0}));
  CHECK(integer_power_oracle(ints({1, -1, 0, 0, 0}), -2) == ints({1, 2, 3, 4, 5}));
  CHECK(integer_power_oracle(ints({1, 1, 1, 0, 0}), 3)[3] == 7);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_int_series(rng, 8);
    const Int m = d(rng);
    CHECK(power(a, m) == integer_power_oracle(a, m));
  }
}

TEST_CASE("power over the Burnside ring") {
  auto lam = BurnsideLambda::create(BurnsideRing::create(z2()));
  const auto& ring = *lam->burnside();
  auto one_minus_t = BurnsideSeries::one(lam, 4);
  one_minus_t[1] = -ring.one();
  auto p = power(one_minus_t, -ring.basis(0));
  CHECK(p[1] == ring.basis(0));
  CHECK(p[2] == ring.basis(0) + ring.basis(1));
  CHECK(p[3] == Int(2) * ring.basis(0));
  CHECK(to_string(truncate(p, 2)) == "[G/G] + [G/e]·t + ([G/e] + [G/G])·t^2");
  CHECK(power(p, ring.zero()) == BurnsideSeries::one(lam, 4));
  CHECK(power(p, ring.one()) == p);
}

TEST_CASE("zeta of a class gives symmetric powers") {
  for (auto g : {z2(), s3()}) {
    auto lam = BurnsideLambda::create(BurnsideRing::create(g));
    const auto& ring = *lam->burnside();
    auto one_minus_t = BurnsideSeries::one(lam, 4);
    one_minus_t[1] = -ring.one();
    for (const auto& x : {b_regular(triv(), g), swap_set(triv(), g), point(triv(), g),
                          disjoint_union(b_regular(triv(), g), point(triv(), g))}) {
      auto p = power(one_minus_t, -ring.class_of(x));
      for (int k = 0; k <= 4; ++k) CHECK(p[k] == ring.class_of(symmetric_power(x, k)));
    }
  }
}

TEST_CASE("geometric oracle") {
  auto lam = BurnsideLambda::create(BurnsideRing::create(z2()));
  const auto& ring = *lam->burnside();
  auto pt = point(triv(), z2());
  auto reg = b_regular(triv(), z2());
  auto g = geometric_power_oracle(lam, {pt}, reg, 3);
  CHECK(g[1] == ring.basis(0));
  CHECK(g[2] == ring.one());
  CHECK(g[3] == ring.zero());
  CHECK(geometric_power_oracle(lam, {pt}, BiSet::empty_set(triv(), z2()), 3) == BurnsideSeries::one(lam, 3));
  auto gp = geometric_power_oracle(lam, {pt}, pt, 3);
  CHECK(gp[1] == ring.one());
  CHECK(gp[2] == ring.zero());

  auto a = BurnsideSeries::one(lam, 4);
  a[1] = ring.class_of(swap_set(triv(), z2()));
  a[2] = ring.class_of(reg);
  auto m = ring.class_of(swap_set(triv(), z2()));
  CHECK(geometric_power_oracle(lam, {swap_set(triv(), z2()), reg}, swap_set(triv(), z2()), 4) == power(a, m));
}

TEST_CASE("power axioms over the Burnside ring") {
  std::mt19937 rng(4);
  auto lam = BurnsideLambda::create(BurnsideRing::create(s3()));
  const auto& ring = *lam->burnside();
  std::uniform_int_distribution<int> d(-2, 2);
  auto random_element = [&] {
    std::vector<Int> c;
    for (std::size_t j = 0; j < ring.rank(); ++j) c.push_back(d(rng));
    return BurnsideElement(lam->burnside(), c);
  };
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_burnside_series(lam, rng, 4);
    auto b = random_burnside_series(lam, rng, 4);
    auto m = random_element();
    auto n = random_element();
    CHECK(power(a * b, m) == power(a, m) * power(b, m));
    CHECK(power(a, m + n) == power(a, m) * power(a, n));
    CHECK(power(a, m * n) == power(power(a, m), n));
    CHECK(power(a, m)[1] == m * a[1]);
  }
}

TEST_CASE("cardinality specialization commutes with power") {
  std::mt19937 rng(8);
  auto lam = BurnsideLambda::create(BurnsideRing::create(s3()));
  const auto& ring = *lam->burnside();
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_burnside_series(lam, rng, 4);
    std::vector<Int> c;
    for (std::size_t j = 0; j < ring.rank(); ++j) c.push_back(d(rng));
    BurnsideElement m(lam->burnside(), c);
    auto p = power(a, m);
    std::vector<Int> spec_a, spec_p;
    for (int k = 0; k <= 4; ++k) {
      spec_a.push_back(cardinality_hom(a[k]));
      spec_p.push_back(cardinality_hom(p[k]));
    }
    CHECK(ints(spec_p) == integer_power_oracle(ints(spec_a), cardinality_hom(m)));
  }
}

TEST_CASE("right hand side of the Macdonald identity") {
  auto z = IntegerRing::get();
  const auto parts = partition_numbers(8);
  CHECK(rhs_theorem1(z, Int(1), 1, 8).coeffs() == parts);
  auto k2 = rhs_theorem1(z, Int(1), 2, 2);
  CHECK(k2.coeffs() == std::vector<Int>{1, 1, 4});
  CHECK(rhs_theorem1(z, Int(2), 0, 4) == ints({1, 2, 3, 4, 5}));
  auto lam = BurnsideLambda::create(BurnsideRing::create(z2()));
  const auto& ring = *lam->burnside();
  auto r0 = rhs_theorem1(lam, ring.basis(0), 0, 4);
  for (int k = 0; k <= 4; ++k) CHECK(r0[k] == ring.class_of(symmetric_power(b_regular(triv(), z2()), k)));
  // classes of commuting pairs in S_n: 1, 1, 4, 8, 21
  CHECK(rhs_theorem1(z, Int(1), 2, 4).coeffs() == std::vector<Int>{1, 1, 4, 8, 21});
}
