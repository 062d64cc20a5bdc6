#include "equichar/motivic.hpp"

#include <numeric>

#include "equichar/euler.hpp"

namespace equichar {

LExtElement::LExtElement(BurnsidePtr ring) : ring_(std::move(ring)) {
  require(ring_ != nullptr, "LExtElement without a ring");
}

LExtElement::LExtElement(BurnsidePtr ring, std::map<Rational, BurnsideElement> terms) : LExtElement(std::move(ring)) {
  for (const auto& [q, x] : terms) add_term(q, x);
}

LExtElement LExtElement::monomial(const Rational& q, const BurnsideElement& x) {
  LExtElement out(x.ring_ptr());
  out.add_term(q, x);
  return out;
}

void LExtElement::add_term(const Rational& q, const BurnsideElement& x) {
  require(x.ring().group()->same_as(*ring_->group()), "LExtElement terms over different groups");
  if (x.is_zero()) return;
  auto it = terms_.find(q);
  if (it == terms_.end()) {
    terms_.emplace(q, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) terms_.erase(it);
}

std::int64_t LExtElement::denominator() const {
  std::int64_t d = 1;
  for (const auto& [q, x] : terms_) d = std::lcm(d, q.denominator());
  return d;
}

LExtElement LExtElement::shifted(const Rational& q) const {
  LExtElement out(ring_);
  for (const auto& [r, x] : terms_) out.terms_.emplace(r + q, x);
  return out;
}

BurnsideElement LExtElement::specialize() const {
  auto out = ring_->zero();
  for (const auto& [q, x] : terms_) out += x;
  return out;
}

LExtElement& LExtElement::operator+=(const LExtElement& o) {
  for (const auto& [q, x] : o.terms_) add_term(q, x);
  return *this;
}

LExtElement operator-(LExtElement a) {
  for (auto& [q, x] : a.terms_) x = -x;
  return a;
}

LExtElement operator*(const LExtElement& a, const LExtElement& b) {
  LExtElement out(a.ring_);
  for (const auto& [q, x] : a.terms_)
    for (const auto& [r, y] : b.terms_) out.add_term(q + r, x * y);
  return out;
}

std::string LExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto one = ring_->one();
  for (const auto& [q, x] : terms_) {
    std::string term;
    if (q == Rational(0)) {
      term = x.to_string();
    } else {
      const std::string l = q == Rational(1) ? "L" : "L^" + equichar::to_string(q);
      if (x == one) {
        term = l;
      } else if (x == -one) {
        term = "-" + l;
      } else {
        const auto s = x.to_string();
        term = l + "·" + (s.find(' ') != std::string::npos ? "(" + s + ")" : s);
      }
    }
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::vector<std::pair<LExtLambda::Generator, Int>> LExtLambda::decompose(const Element& x) const {
  std::vector<std::pair<Generator, Int>> out;
  for (const auto& [q, b] : x.terms())
    for (std::size_t i = 0; i < b.coeffs().size(); ++i)
      if (b.coeffs()[i] != 0) out.push_back({{q, i}, b.coeffs()[i]});
  return out;
}

std::vector<LExtElement> LExtLambda::zeta(const Generator& gen, int n) const {
  const auto base = ring_->zeta_basis(gen.second, n);
  std::vector<LExtElement> out;
  for (int k = 0; k <= n; ++k) out.push_back(LExtElement::monomial(gen.first * k, base[static_cast<std::size_t>(k)]));
  return out;
}

LExtSeries zeta_L(const std::shared_ptr<const LExtLambda>& ring, const Rational& q, std::size_t i, int n) {
  require(i < ring->burnside()->rank(), "zeta_L: basis index out of range");
  return LExtSeries(ring, ring->zeta({q, i}, n));
}

LExtSeries power_L(const LExtSeries& a, const LExtElement& m) { return power(a, m); }

BurnsideSeries specialize(const std::shared_ptr<const BurnsideLambda>& target, const LExtSeries& a) {
  std::vector<BurnsideElement> c;
  for (const auto& x : a.coeffs()) c.push_back(x.specialize());
  return BurnsideSeries(target, std::move(c));
}

Rational age(const std::vector<Rational>& angles) {
  Rational total = 0;
  for (const auto& theta : angles) {
    require(theta >= Rational(0) && theta < Rational(1), "age: angle " + to_string(theta) + " is outside [0, 1)");
    total += theta;
  }
  return total;
}

Rational phi_k(const std::vector<int>& r, const std::vector<Rational>& weights) {
  require(weights.size() >= r.size(), "phi_k needs one weight per r_i");
  Rational total = 0;
  std::int64_t prefix = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    require(r[i] >= 1, "phi_k requires r_i >= 1");
    total += weights[i] * Rational(prefix * (r[i] - 1));
    prefix *= r[i];
  }
  return total;
}

Rational shift_from_ages(const std::vector<Rational>& weights, const std::vector<Rational>& ages) {
  require(weights.size() == ages.size(), "one age per tuple entry is required");
  Rational total = 0;
  for (std::size_t i = 0; i < ages.size(); ++i) {
    require(ages[i] >= Rational(0), "ages are non-negative");
    total += weights[i] * ages[i];
  }
  return total;
}

LExtElement orbifold_class_from_datum(const LExtLambda& ring, const OrbifoldDatum& datum) {
  require(datum.gO != nullptr, "orbifold datum without an O-side group");
  require(datum.k >= 0, "orbifold datum order must be non-negative");
  require(datum.weights.size() == static_cast<std::size_t>(datum.k), "orbifold datum needs k weights");
  auto total = ring.zero();
  for (const auto& s : datum.strata) {
    require(s.tuple.entries.size() == static_cast<std::size_t>(datum.k),
            "stratum tuple length differs from the order k");
    for (auto e : s.tuple.entries)
      require(e < datum.gO->order(), "stratum tuple entry " + std::to_string(e) + " is not an element of gO");
    require(is_commuting(*datum.gO, s.tuple.entries), "stratum tuple is not a commuting tuple");
    total += s.cls.shifted(s.shift);
  }
  return total;
}

OrbifoldDatum datum_from_biset(const LExtLambda& ring, const BiSet& x, int k, std::vector<Rational> weights,
                               const Budget& budget) {
  require(k >= 0, "datum_from_biset requires k >= 0");
  if (weights.empty()) weights.assign(static_cast<std::size_t>(k), Rational(1));
  OrbifoldDatum datum{x.gO(), k, std::move(weights), {}};
  const auto cells = CellSpace::from_biset(x);
  for (const auto& cls : commuting_tuple_classes(x.gO(), k, budget)) {
    const auto fixed = fixed_cells(cells, cls.representative);
    if (fixed.cells().empty()) continue;
    const auto quotient = quotient_cells(fixed, Subgroup::whole(fixed.gO()));
    datum.strata.push_back(
        OrbifoldStratum{cls.representative, ring.embed(chi_equivariant(*ring.burnside(), quotient)), Rational(0)});
  }
  return datum;
}

LExtSeries rhs_theorem2(const std::shared_ptr<const LExtLambda>& ring, const LExtElement& m, int k, int d,
                        const std::vector<Rational>& weights, int n) {
  require(k >= 1, "rhs_theorem2 requires k >= 1");
  require(d >= 0, "rhs_theorem2 requires d >= 0");
  require(weights.size() == static_cast<std::size_t>(k), "rhs_theorem2 needs k weights");
  auto base = LExtSeries::one(ring, n);
  for_each_bounded_tuple(k, n, [&](const std::vector<int>& r) {
    int prod = 1;
    Int e = 1;
    for (std::size_t j = 0; j < r.size(); ++j) {
      prod *= r[j];
      for (std::size_t p = 0; p < j; ++p) e *= r[j];
    }
    // (1 - c t^prod)^e with c = L^{Phi d / 2}
    const auto c = ring->L(phi_k(r, weights) * Rational(d, 2));
    auto f = LExtSeries::one(ring, n);
    Int binom = 1;
    auto cj = ring->one();
    for (int j = 1; j * prod <= n; ++j) {
      binom = binom * (e - (j - 1)) / j;
      cj = cj * c;
      f[j * prod] = ring->from_int(j % 2 == 0 ? binom : Int(-binom)) * cj;
    }
    base = base * f;
  });
  return power_L(base, -m);
}

}  // namespace equichar
