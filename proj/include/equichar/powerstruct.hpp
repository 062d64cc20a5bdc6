#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "equichar/burnside.hpp"

namespace equichar {

// A coefficient ring with a lambda-structure is described by a handle type R:
//   R::Element, R::Generator
//   zero(), one(), from_int(Int)
//   decompose(x)  -> integer combination of generators equal to x
//   zeta(gen, n)  -> coefficients 0..n of zeta_gen(t) = 1 + gen t + ...
//   render(x)     -> text form of an element
// Elements support +, -, *, unary - and ==.

/// Power series over R truncated at degree N (coefficients for t^0..t^N).
template <class R>
class TruncatedSeries {
public:
  using Element = typename R::Element;

  TruncatedSeries(std::shared_ptr<const R> ring, std::vector<Element> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    require(ring_ != nullptr, "series without a coefficient ring");
    require(!c_.empty(), "series needs at least the constant coefficient");
  }

  static TruncatedSeries one(std::shared_ptr<const R> ring, int n) {
    require(n >= 0, "truncation degree must be non-negative");
    std::vector<Element> c(static_cast<std::size_t>(n) + 1, ring->zero());
    c[0] = ring->one();
    return TruncatedSeries(std::move(ring), std::move(c));
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Element>& coeffs() const { return c_; }
  const Element& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Element& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
  std::shared_ptr<const R> ring_;
  std::vector<Element> c_;
};

template <class R>
TruncatedSeries<R> truncate(const TruncatedSeries<R>& a, int n) {
  require(n >= 0, "truncation degree must be non-negative");
  auto out = TruncatedSeries<R>::one(a.ring_ptr(), n);
  for (int k = 0; k <= n; ++k) out[k] = k <= a.degree() ? a[k] : a.ring().zero();
  return out;
}

template <class R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  const int n = std::min(a.degree(), b.degree());
  auto out = truncate(a, n);
  for (int k = 0; k <= n; ++k) out[k] = a[k] + b[k];
  return out;
}

template <class R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  const int n = std::min(a.degree(), b.degree());
  const auto zero = a.ring().zero();
  auto out = TruncatedSeries<R>::one(a.ring_ptr(), n);
  for (int k = 0; k <= n; ++k) out[k] = zero;
  for (int i = 0; i <= n; ++i) {
    if (a[i] == zero) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == zero) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

/// Multiplicative inverse; the constant term must be 1 or -1.
template <class R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& a) {
  const auto& ring = a.ring();
  const auto one = ring.one();
  bool negate = false;
  if (!(a[0] == one)) {
    require(a[0] == -one, "invert: constant term is not a unit");
    negate = true;
  }
  const int n = a.degree();
  auto out = TruncatedSeries<R>::one(a.ring_ptr(), n);
  // b_k = -sum_{i=1..k} a_i b_{k-i} for a_0 = 1
  for (int k = 1; k <= n; ++k) {
    auto acc = ring.zero();
    for (int i = 1; i <= k; ++i) acc = acc + (negate ? -a[i] : a[i]) * out[k - i];
    out[k] = -acc;
  }
  if (negate)
    for (int k = 0; k <= n; ++k) out[k] = -out[k];
  return out;
}

/// t -> c t^r, keeping the truncation degree.
template <class R>
TruncatedSeries<R> substitute(const TruncatedSeries<R>& a, const typename R::Element& c, int r) {
  require(r >= 1, "substitute requires r >= 1");
  const int n = a.degree();
  auto out = TruncatedSeries<R>::one(a.ring_ptr(), n);
  out[0] = a[0];
  for (int k = 1; k <= n; ++k) out[k] = a.ring().zero();
  auto power = a.ring().one();
  for (int k = 1; k * r <= n; ++k) {
    power = power * c;
    out[k * r] = a[k] * power;
  }
  return out;
}

/// A^e for an integer exponent; negative exponents go through invert.
template <class R>
TruncatedSeries<R> pow_int(const TruncatedSeries<R>& a, Int e) {
  auto base = e < 0 ? invert(a) : a;
  if (e < 0) e = -e;
  auto result = TruncatedSeries<R>::one(a.ring_ptr(), a.degree());
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// lambda_c(t) for an arbitrary element: the product of zeta series of its generators.
template <class R>
TruncatedSeries<R> lambda_series(const std::shared_ptr<const R>& ring, const typename R::Element& c, int n) {
  auto out = TruncatedSeries<R>::one(ring, n);
  for (const auto& [gen, mult] : ring->decompose(c)) {
    if (mult == 0) continue;
    TruncatedSeries<R> z(ring, ring->zeta(gen, n));
    out = out * pow_int(z, mult);
  }
  return out;
}

/// b_1..b_N with A = prod lambda_{b_i}(t^i) up to degree N (result index i-1 holds b_i).
template <class R>
std::vector<typename R::Element> lambda_factorize(const TruncatedSeries<R>& a) {
  require(a[0] == a.ring().one(), "lambda_factorize requires constant term 1");
  const int n = a.degree();
  std::vector<typename R::Element> b;
  auto residual = a;
  for (int i = 1; i <= n; ++i) {
    const auto bi = residual[i];
    b.push_back(bi);
    if (bi == a.ring().zero()) continue;
    // divide out lambda_{b_i}(t^i)
    auto lam = lambda_series(a.ring_ptr(), -bi, n / i);
    auto lam_full = TruncatedSeries<R>::one(a.ring_ptr(), n);
    for (int k = 1; k * i <= n; ++k) lam_full[k * i] = lam[k];
    residual = residual * lam_full;
  }
  return b;
}

/// prod lambda_{b_i}(t^i) to degree n.
template <class R>
TruncatedSeries<R> lambda_product(const std::shared_ptr<const R>& ring, const std::vector<typename R::Element>& b,
                                  int n) {
  auto out = TruncatedSeries<R>::one(ring, n);
  for (int i = 1; i <= n && i <= static_cast<int>(b.size()); ++i) {
    const auto& bi = b[static_cast<std::size_t>(i - 1)];
    if (bi == ring->zero()) continue;
    auto lam = lambda_series(ring, bi, n / i);
    auto lam_full = TruncatedSeries<R>::one(ring, n);
    for (int k = 1; k * i <= n; ++k) lam_full[k * i] = lam[k];
    out = out * lam_full;
  }
  return out;
}

/// (A(t))^m through the lambda-factorization of A.
template <class R>
TruncatedSeries<R> power(const TruncatedSeries<R>& a, const typename R::Element& m) {
  auto b = lambda_factorize(a);
  for (auto& bi : b) bi = m * bi;
  return lambda_product(a.ring_ptr(), b, a.degree());
}

/// Embeds an integer series coefficientwise.
template <class R>
TruncatedSeries<R> embed(const std::shared_ptr<const R>& ring, const std::vector<Int>& coeffs) {
  std::vector<typename R::Element> c;
  for (const auto& x : coeffs) c.push_back(ring->from_int(x));
  return TruncatedSeries<R>(ring, std::move(c));
}

/// "1 + c1·t + (c2)·t^2"; zero coefficients are skipped.
template <class R>
std::string to_string(const TruncatedSeries<R>& a) {
  std::string out;
  const auto zero = a.ring().zero();
  for (int k = 0; k <= a.degree(); ++k) {
    if (a[k] == zero) continue;
    std::string c = a.ring().render(a[k]);
    std::string term;
    const bool compound = c.find(' ') != std::string::npos;
    if (k == 0) {
      term = c;
    } else {
      const std::string tk = k == 1 ? "t" : "t^" + std::to_string(k);
      if (c == "1")
        term = tk;
      else if (c == "-1")
        term = "-" + tk;
      else
        term = (compound ? "(" + c + ")" : c) + "·" + tk;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-' && !compound) {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Ring handles

/// Z with zeta_1(t) = 1/(1 - t).
struct IntegerRing {
  using Element = Int;
  using Generator = int;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(const Int& n) const { return n; }
  std::vector<std::pair<Generator, Int>> decompose(const Element& x) const { return {{0, x}}; }
  std::vector<Element> zeta(const Generator&, int n) const { return std::vector<Element>(static_cast<std::size_t>(n) + 1, Int(1)); }
  std::string render(const Element& x) const { return x.str(); }

  static std::shared_ptr<const IntegerRing> get();
};

/// A(G) with the Kapranov zeta functions of the basis classes [G/H] as lambda-generators.
class BurnsideLambda {
public:
  using Element = BurnsideElement;
  using Generator = std::size_t;

  explicit BurnsideLambda(BurnsidePtr ring) : ring_(std::move(ring)) {}
  static std::shared_ptr<const BurnsideLambda> create(BurnsidePtr ring) {
    return std::make_shared<const BurnsideLambda>(std::move(ring));
  }

  const BurnsidePtr& burnside() const { return ring_; }
  Element zero() const { return ring_->zero(); }
  Element one() const { return ring_->one(); }
  Element from_int(const Int& n) const { return ring_->from_int(n); }
  std::vector<std::pair<Generator, Int>> decompose(const Element& x) const;
  std::vector<Element> zeta(const Generator& i, int n) const { return ring_->zeta_basis(i, n); }
  std::string render(const Element& x) const { return x.to_string(); }

private:
  BurnsidePtr ring_;
};

using IntSeries = TruncatedSeries<IntegerRing>;
using BurnsideSeries = TruncatedSeries<BurnsideLambda>;

/// (1 + a_1 t + ...)^m by the multinomial closed formula.
IntSeries integer_power_oracle(const IntSeries& a, const Int& m);

/// (1 + sum [A_i] t^i)^[M] by enumerating configurations (K subset M, psi: K -> union A_i)
/// of total weight k as a G-set. All sets need a trivial O-side and the same G_B.
BurnsideSeries geometric_power_oracle(const std::shared_ptr<const BurnsideLambda>& ring,
                                      const std::vector<BiSet>& a, const BiSet& m, int n,
                                      const Budget& budget = default_budget());

/// prod over r_1..r_k >= 1 with r_1...r_k <= N of (1 - t^{r_1...r_k})^{r_2 r_3^2 ... r_k^{k-1}};
/// for k = 0 the single factor (1 - t).
std::vector<Int> theorem1_base(int k, int n);

/// theorem1_base raised to -m.
template <class R>
TruncatedSeries<R> rhs_theorem1(const std::shared_ptr<const R>& ring, const typename R::Element& m, int k, int n) {
  require(k >= 0, "rhs_theorem1 requires k >= 0");
  return power(embed(ring, theorem1_base(k, n)), -m);
}

/// Enumerates tuples r_1..r_k of positive integers with product <= n.
template <class F>
void for_each_bounded_tuple(int k, int n, F&& f) {
  std::vector<int> r;
  auto rec = [&](auto&& self, long prod) -> void {
    if (static_cast<int>(r.size()) == k) {
      f(static_cast<const std::vector<int>&>(r));
      return;
    }
    for (int v = 1; prod * v <= n; ++v) {
      r.push_back(v);
      self(self, prod * v);
      r.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace equichar
