#include <random>

#include "doctest.h"
#include "equichar/euler.hpp"
#include "equichar/motivic.hpp"
#include "fixtures.hpp"

using namespace equichar;
using namespace fixture;

namespace {

struct Rings {
  BurnsidePtr burnside;
  std::shared_ptr<const LExtLambda> lext;
  std::shared_ptr<const BurnsideLambda> lam;
};

Rings rings(const GroupPtr& g) {
  auto b = BurnsideRing::create(g);
  return {b, LExtLambda::create(b), BurnsideLambda::create(b)};
}

LExtElement random_lext(const Rings& r, std::mt19937& rng, bool effective = false) {
  std::uniform_int_distribution<int> coeff(effective ? 0 : -2, 2);
  std::uniform_int_distribution<int> half(effective ? 0 : -2, 3);
  std::uniform_int_distribution<int> count(1, 2);
  auto out = r.lext->zero();
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<Int> c;
    for (std::size_t i = 0; i < r.burnside->rank(); ++i) c.push_back(coeff(rng));
    out += LExtElement::monomial(Rational(half(rng), 2), BurnsideElement(r.burnside, c));
  }
  return out;
}

LExtSeries random_series(const Rings& r, std::mt19937& rng, int n) {
  auto s = LExtSeries::one(r.lext, n);
  for (int k = 1; k <= n; ++k) s[k] = random_lext(r, rng);
  return s;
}

}  // namespace

TEST_CASE("L-extended arithmetic") {
  auto r = rings(z2());
  const auto& L = *r.lext;
  CHECK(L.L(Rational(1, 2)) * L.L(Rational(1, 2)) == L.L(1));
  auto x = L.embed(r.burnside->basis(0));
  auto y = L.embed(r.burnside->one());
  CHECK((L.L(Rational(1, 3)) * x) * (L.L(Rational(1, 4)) * y) == L.L(Rational(7, 12)) * (x * y));
  auto sum = x + L.L(1) * y;
  CHECK(sum + (-(L.L(1) * y)) == x);
  CHECK(sum.to_string() == "[G/e] + L");
  CHECK((L.L(Rational(1, 2)) * x).to_string() == "L^1/2·[G/e]");
  CHECK((L.L(Rational(1, 2)) * x).denominator() == 2);
  CHECK(L.zero().to_string() == "0");
  CHECK(L.zero().is_zero());
}

TEST_CASE("zeta series with L shifts") {
  auto triv_rings = rings(triv());
  auto z = zeta_L(triv_rings.lext, Rational(1, 2), 0, 4);
  for (int k = 0; k <= 4; ++k) CHECK(z[k] == triv_rings.lext->L(Rational(k, 2)));
  auto r = rings(z2());
  auto plain = zeta_L(r.lext, 0, 0, 4);
  auto zb = r.burnside->zeta_basis(0, 4);
  for (int k = 0; k <= 4; ++k) CHECK(plain[k] == r.lext->embed(zb[static_cast<std::size_t>(k)]));
  auto shifted = zeta_L(r.lext, 1, 0, 4);
  CHECK(shifted[2] == r.lext->L(2) * r.lext->embed(r.burnside->basis(0) + r.burnside->one()));
}

TEST_CASE("ages and Phi") {
  CHECK(age({Rational(1, 2), Rational(1, 2)}) == Rational(1));
  CHECK(age({0, 0, 0}) == Rational(0));
  CHECK(age({Rational(1, 3), Rational(2, 3)}) == Rational(1));
  CHECK_THROWS_AS(age({Rational(1)}), UsageError);
  CHECK_THROWS_AS(age({Rational(-1, 2)}), UsageError);
  CHECK(phi_k({1, 1, 1}, {Rational(3), Rational(-2), Rational(1, 7)}) == Rational(0));
  CHECK(phi_k({3}, {Rational(1)}) == Rational(2));
  CHECK(phi_k({2, 3}, {Rational(1), Rational(1)}) == Rational(5));
}

TEST_CASE("orbifold classes from data") {
  auto r = rings(triv());
  const auto& L = *r.lext;
  OrbifoldDatum d{z2(), 1, {Rational(1)}, {}};
  d.strata.push_back({CommutingTuple{{0}}, L.L(1), 0});
  d.strata.push_back({CommutingTuple{{1}}, L.one(), shift_from_ages({Rational(1)}, {Rational(1, 2)})});
  CHECK(orbifold_class_from_datum(L, d) == L.L(1) + L.L(Rational(1, 2)));
  d.strata.push_back({CommutingTuple{{2}}, L.one(), 0});
  CHECK_THROWS_AS(orbifold_class_from_datum(L, d), UsageError);
  d.strata.pop_back();
  d.strata.push_back({CommutingTuple{{0, 1}}, L.one(), 0});
  CHECK_THROWS_AS(orbifold_class_from_datum(L, d), UsageError);
  OrbifoldDatum nc{s3(), 2, {Rational(1), Rational(1)}, {{CommutingTuple{{s3()->generators()[0], s3()->generators()[1]}}, L.one(), 0}}};
  CHECK_THROWS_AS(orbifold_class_from_datum(L, nc), UsageError);
  OrbifoldDatum empty{z2(), 1, {Rational(1)}, {}};
  CHECK(orbifold_class_from_datum(L, empty).is_zero());
}

TEST_CASE("data generated from bisets") {
  auto r = rings(z2());
  const auto& L = *r.lext;
  std::vector<BiSet> sets{point(s3(), z2()), BiSet::biregular(z2(), z2()), swap_set(z2(), z2()), swap_set(s3(), z2()),
                          BiSet::empty_set(z3(), z2())};
  for (const auto& x : sets)
    for (int k = 0; k <= 2; ++k) {
      auto d = datum_from_biset(L, x, k, {});
      for (const auto& s : d.strata) CHECK(s.shift == Rational(0));
      CHECK(orbifold_class_from_datum(L, d) == L.embed(chi_k_equivariant(*r.burnside, x, k)));
    }
  CHECK(orbifold_class_from_datum(L, datum_from_biset(L, BiSet::biregular(z2(), z2()), 1, {})) ==
        L.embed(r.burnside->basis(0)));
  CHECK(datum_from_biset(L, BiSet::empty_set(z3(), z2()), 1, {}).strata.empty());
  CHECK(datum_from_biset(L, point(s3(), z2()), 1, {}).strata.size() == 3);
}

TEST_CASE("Propositions 1 and 2 as ring laws") {
  std::mt19937 rng(21);
  for (auto g : {triv(), z2()}) {
    auto r = rings(g);
    for (int trial = 0; trial < 6; ++trial) {
      auto a = random_series(r, rng, 4);
      auto m = random_lext(r, rng);
      for (auto s : {Rational(1, 2), Rational(1), Rational(2)}) {
        const auto Ls = r.lext->L(s);
        CHECK(power_L(substitute(a, Ls, 1), m) == substitute(power_L(a, m), Ls, 1));
      }
    }
    for (std::size_t i = 0; i < r.burnside->rank(); ++i)
      for (auto q : {Rational(0), Rational(1, 2)})
        CHECK(zeta_L(r.lext, q + 1, i, 5) == substitute(zeta_L(r.lext, q, i, 5), r.lext->L(1), 1));
  }
}

TEST_CASE("specialization L -> 1 commutes with power") {
  std::mt19937 rng(9);
  auto r = rings(z2());
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_series(r, rng, 4);
    auto m = random_lext(r, rng);
    CHECK(specialize(r.lam, power_L(a, m)) == power(specialize(r.lam, a), m.specialize()));
  }
}

TEST_CASE("Theorem 2 right hand side") {
  auto r = rings(triv());
  const auto& L = *r.lext;
  auto rhs = rhs_theorem2(r.lext, L.one(), 1, 2, {Rational(1)}, 3);
  CHECK(rhs[2] == L.one() + L.L(1));
  auto z = rings(z2());
  std::mt19937 rng(13);
  for (int trial = 0; trial < 4; ++trial) {
    auto m = random_lext(z, rng);
    for (int k = 1; k <= 2; ++k) {
      const std::vector<Rational> w(static_cast<std::size_t>(k), Rational(1));
      const std::vector<Rational> zero(static_cast<std::size_t>(k), Rational(0));
      auto d0 = rhs_theorem2(z.lext, m, k, 0, w, 4);
      CHECK(specialize(z.lam, d0) == rhs_theorem1(z.lam, m.specialize(), k, 4));
      auto phi0 = rhs_theorem2(z.lext, m, k, 2, zero, 4);
      CHECK(phi0 == d0);
      // an L-free exponent keeps an L-free series
      auto lfree = rhs_theorem2(z.lext, z.lext->embed(m.specialize()), k, 0, w, 4);
      CHECK(specialize(z.lam, lfree) == rhs_theorem1(z.lam, m.specialize(), k, 4));
      for (const auto& c : lfree.coeffs())
        for (const auto& [q, x] : c.terms()) CHECK(q == Rational(0));
    }
  }
  CHECK_THROWS_AS(rhs_theorem2(r.lext, L.one(), 0, 2, {}, 3), UsageError);
}
