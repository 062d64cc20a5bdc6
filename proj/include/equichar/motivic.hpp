#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equichar/powerstruct.hpp"

namespace equichar {

/// Element of A(G)[L^{±1/D}]: finitely many terms L^q · x_q with x_q in A(G).
class LExtElement {
public:
  explicit LExtElement(BurnsidePtr ring);
  LExtElement(BurnsidePtr ring, std::map<Rational, BurnsideElement> terms);
  /// L^q · x
  static LExtElement monomial(const Rational& q, const BurnsideElement& x);

  const BurnsidePtr& ring() const { return ring_; }
  const std::map<Rational, BurnsideElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// lcm of the exponent denominators (1 for the zero element).
  std::int64_t denominator() const;

  /// L^q · this
  LExtElement shifted(const Rational& q) const;
  /// L -> 1
  BurnsideElement specialize() const;

  LExtElement& operator+=(const LExtElement& o);
  friend LExtElement operator+(LExtElement a, const LExtElement& b) { return a += b; }
  friend LExtElement operator-(LExtElement a);
  friend LExtElement operator-(LExtElement a, const LExtElement& b) { return a += -b; }
  friend LExtElement operator*(const LExtElement& a, const LExtElement& b);
  friend bool operator==(const LExtElement& a, const LExtElement& b) { return a.terms_ == b.terms_; }

  /// "[G/e] + L^1/2·[G/G]"
  std::string to_string() const;

private:
  void add_term(const Rational& q, const BurnsideElement& x);

  BurnsidePtr ring_;
  std::map<Rational, BurnsideElement> terms_;
};

/// Lambda-structure on A(G)[L^{±1/D}] with generators L^q [G/H] and
/// zeta_{L^q [G/H]}(t) = zeta_{[G/H]}(L^q t).
class LExtLambda {
public:
  using Element = LExtElement;
  using Generator = std::pair<Rational, std::size_t>;

  explicit LExtLambda(BurnsidePtr ring) : ring_(std::move(ring)) {}
  static std::shared_ptr<const LExtLambda> create(BurnsidePtr ring) {
    return std::make_shared<const LExtLambda>(std::move(ring));
  }

  const BurnsidePtr& burnside() const { return ring_; }
  Element zero() const { return LExtElement(ring_); }
  Element one() const { return LExtElement::monomial(0, ring_->one()); }
  Element from_int(const Int& n) const { return LExtElement::monomial(0, ring_->from_int(n)); }
  /// L^q
  Element L(const Rational& q) const { return LExtElement::monomial(q, ring_->one()); }
  Element embed(const BurnsideElement& x) const { return LExtElement::monomial(0, x); }
  std::vector<std::pair<Generator, Int>> decompose(const Element& x) const;
  std::vector<Element> zeta(const Generator& gen, int n) const;
  std::string render(const Element& x) const { return x.to_string(); }

private:
  BurnsidePtr ring_;
};

using LExtSeries = TruncatedSeries<LExtLambda>;

/// zeta_{L^q [G/H_i]}(t) to degree n.
LExtSeries zeta_L(const std::shared_ptr<const LExtLambda>& ring, const Rational& q, std::size_t i, int n);

/// (A(t))^m over the L-extended ring.
LExtSeries power_L(const LExtSeries& a, const LExtElement& m);

/// Coefficientwise L -> 1.
BurnsideSeries specialize(const std::shared_ptr<const BurnsideLambda>& target, const LExtSeries& a);

/// Sum of the angles theta_j, each in [0, 1).
Rational age(const std::vector<Rational>& angles);

/// phi_1 (r_1 - 1) + phi_2 r_1 (r_2 - 1) + ... + phi_k r_1...r_{k-1} (r_k - 1).
Rational phi_k(const std::vector<int>& r, const std::vector<Rational>& weights);

struct OrbifoldStratum {
  CommutingTuple tuple;
  LExtElement cls;
  Rational shift;
};

/// User-supplied stratum data for the order-k class of weight phi.
struct OrbifoldDatum {
  GroupPtr gO;
  int k = 1;
  std::vector<Rational> weights;
  std::vector<OrbifoldStratum> strata;
};

/// shift = sum_i weights_i · ages_i (ages of the tuple entries at the stratum).
Rational shift_from_ages(const std::vector<Rational>& weights, const std::vector<Rational>& ages);

/// Sum over strata of cls · L^shift. Every tuple must be a commuting k-tuple of gO.
LExtElement orbifold_class_from_datum(const LExtLambda& ring, const OrbifoldDatum& datum);

/// Datum of a finite biset: one stratum per commuting-tuple class with a nonempty
/// fixed set, class chi^{G_B}(X^<phi>/C(phi)) and shift 0.
OrbifoldDatum datum_from_biset(const LExtLambda& ring, const BiSet& x, int k, std::vector<Rational> weights,
                               const Budget& budget = default_budget());

/// prod_{r_1...r_k <= N} (1 - L^{Phi_k(r) d/2} t^{r_1...r_k})^{r_2 r_3^2...r_k^{k-1}} raised to -m.
LExtSeries rhs_theorem2(const std::shared_ptr<const LExtLambda>& ring, const LExtElement& m, int k, int d,
                        const std::vector<Rational>& weights, int n);

}  // namespace equichar
