#include "equichar/powerstruct.hpp"

#include <map>

namespace equichar {

std::shared_ptr<const IntegerRing> IntegerRing::get() {
  static const auto ring = std::make_shared<const IntegerRing>();
  return ring;
}

std::vector<std::pair<BurnsideLambda::Generator, Int>> BurnsideLambda::decompose(const Element& x) const {
  std::vector<std::pair<Generator, Int>> out;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i)
    if (x.coeffs()[i] != 0) out.emplace_back(i, x.coeffs()[i]);
  return out;
}

IntSeries integer_power_oracle(const IntSeries& a, const Int& m) {
  require(a[0] == 1, "integer_power_oracle requires constant term 1");
  const int n = a.degree();
  auto out = IntSeries::one(a.ring_ptr(), n);
  // multiplicities k_i of each exponent i, with sum i k_i = k
  std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self, int i, int remaining, int weight) -> void {
    if (i == 0) {
      if (weight == 0) return;
      int s = 0;
      Int denom = 1, prod = 1;
      for (int j = 1; j <= n; ++j) {
        const int kj = mult[static_cast<std::size_t>(j)];
        s += kj;
        for (int f = 2; f <= kj; ++f) denom *= f;
        for (int e = 0; e < kj; ++e) prod *= a[j];
      }
      Int falling = 1;
      for (int e = 0; e < s; ++e) falling *= (m - e);
      const Int numer = falling * prod;
      ensure(numer % denom == 0, "multinomial term is not integral");
      out[weight] += numer / denom;
      return;
    }
    for (int c = 0; c * i <= remaining; ++c) {
      mult[static_cast<std::size_t>(i)] = c;
      self(self, i - 1, remaining - c * i, weight + c * i);
    }
    mult[static_cast<std::size_t>(i)] = 0;
  };
  // enumerate all multiplicity vectors with total weight <= n
  rec(rec, n, n, 0);
  return out;
}

BurnsideSeries geometric_power_oracle(const std::shared_ptr<const BurnsideLambda>& lam, const std::vector<BiSet>& a,
                                      const BiSet& m, int n, const Budget& budget) {
  require(n >= 0, "geometric_power_oracle requires N >= 0");
  const auto& ring = *lam->burnside();
  const auto& g = ring.group();
  auto check = [&](const BiSet& x) {
    require(x.o_side_trivial(), "geometric_power_oracle needs trivial O-side actions");
    require(x.gB()->same_as(*g), "geometric_power_oracle: sets over different groups");
  };
  check(m);
  // labels: 0 = absent, then the points of A_1, A_2, ... in order
  std::vector<int> weight{0};
  std::vector<std::pair<std::size_t, Index>> origin{{0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    check(a[i]);
    for (Index p = 0; p < a[i].size(); ++p) {
      weight.push_back(static_cast<int>(i) + 1);
      origin.emplace_back(i, p);
    }
  }
  std::vector<std::vector<std::vector<Index>>> by_weight(static_cast<std::size_t>(n) + 1);
  std::uint64_t total = 0;
  std::vector<Index> cur(m.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int w) -> void {
    if (pos == m.size()) {
      if (++total > budget.max_configurations)
        throw ResourceError("configurations", total, budget.max_configurations);
      by_weight[static_cast<std::size_t>(w)].push_back(cur);
      return;
    }
    for (Index l = 0; l < weight.size(); ++l) {
      if (w + weight[l] > n) continue;
      cur[pos] = l;
      self(self, pos + 1, w + weight[l]);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);

  auto trivial = FiniteGroup::trivial();
  auto out = BurnsideSeries::one(lam, n);
  for (int k = 0; k <= n; ++k) {
    const auto& configs = by_weight[static_cast<std::size_t>(k)];
    std::map<std::vector<Index>, Index> index;
    for (Index i = 0; i < configs.size(); ++i) index.emplace(configs[i], i);
    std::vector<Perm> ab;
    for (std::size_t s = 0; s < g->generators().size(); ++s) {
      Perm p(configs.size());
      std::vector<Index> img(m.size());
      for (Index i = 0; i < configs.size(); ++i) {
        // (s.f)(s x) = s f(x)
        for (Index x = 0; x < m.size(); ++x) {
          const Index l = configs[i][x];
          Index moved = 0;
          if (l != 0) {
            const auto [set, pt] = origin[l];
            moved = l - pt + a[set].actB()[s][pt];
          }
          img[m.actB()[s][x]] = moved;
        }
        p[i] = index.at(img);
      }
      ab.push_back(std::move(p));
    }
    std::vector<Perm> ao(trivial->generators().size());
    BiSet space(trivial, g, configs.size(), ao, std::move(ab));
    out[k] = ring.class_of(space);
  }
  return out;
}

std::vector<Int> theorem1_base(int k, int n) {
  require(k >= 0 && n >= 0, "theorem1_base requires k >= 0 and N >= 0");
  const auto ring = IntegerRing::get();
  auto base = IntSeries::one(ring, n);
  auto factor = [&](int r, const Int& e) {
    // (1 - t^r)^e, e >= 1
    auto f = IntSeries::one(ring, n);
    Int binom = 1;
    for (int j = 1; j * r <= n; ++j) {
      binom = binom * (e - (j - 1)) / j;
      f[j * r] = (j % 2 == 0) ? binom : Int(-binom);
    }
    base = base * f;
  };
  if (k == 0) {
    if (n >= 1) factor(1, 1);
  } else {
    for_each_bounded_tuple(k, n, [&](const std::vector<int>& r) {
      int prod = 1;
      Int e = 1;
      for (std::size_t j = 0; j < r.size(); ++j) {
        prod *= r[j];
        for (std::size_t p = 0; p < j; ++p) e *= r[j];
      }
      factor(prod, e);
    });
  }
  return base.coeffs();
}

}  // namespace equichar
