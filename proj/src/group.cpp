#include "equichar/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace equichar {

namespace {

constexpr Index kNone = ~Index{0};
constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 26;
constexpr std::uint64_t kMaxPermGroupOrder = 1000000;

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t checked_order_product(std::uint64_t a, std::uint64_t b, const char* what) {
  if (b != 0 && a > kMaxGroupOrder / b) throw ResourceError(what, a * b, kMaxGroupOrder);
  if (a * b > kMaxGroupOrder) throw ResourceError(what, a * b, kMaxGroupOrder);
  return a * b;
}

// Lexicographic rank of a permutation of {0..n-1}.
Index perm_rank(const int* p, int n) {
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return static_cast<Index>(rank);
}

std::string cycle_notation(const std::vector<std::uint16_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace

std::size_t FiniteGroup::PermHash::operator()(const std::vector<std::uint16_t>& p) const noexcept {
  std::uint64_t h = kFnvOffset;
  for (auto v : p) fnv_mix(h, v);
  return static_cast<std::size_t>(h);
}

Index FiniteGroup::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  return structural_mul(a, b);
}

Index FiniteGroup::structural_mul(Index a, Index b) const {
  switch (rep_) {
    case Rep::table:
      return table_[static_cast<std::size_t>(a) * order_ + b];
    case Rep::perm: {
      const auto& pa = perms_[a];
      const auto& pb = perms_[b];
      std::vector<std::uint16_t> c(pa.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = pa[pb[i]];
      return perm_index_.at(c);
    }
    case Rep::product: {
      std::uint64_t out = 0;
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        const auto ord = factors_[f]->order();
        const auto ai = static_cast<Index>((a / strides_[f]) % ord);
        const auto bi = static_cast<Index>((b / strides_[f]) % ord);
        out += factors_[f]->mul(ai, bi) * strides_[f];
      }
      return static_cast<Index>(out);
    }
    case Rep::wreath: {
      const auto& inner = *wreath_->inner;
      const int n = wreath_->n;
      const std::uint64_t q = inner.order();
      const Index ra = static_cast<Index>(a / base_order_);
      const Index rb = static_cast<Index>(b / base_order_);
      std::uint64_t ba = a % base_order_;
      std::uint64_t bb = b % base_order_;
      Index av[32];
      Index bv[32];
      for (int i = 0; i < n; ++i) {
        av[i] = static_cast<Index>(ba % q);
        ba /= q;
        bv[i] = static_cast<Index>(bb % q);
        bb /= q;
      }
      const auto& sigma_inv = sn_inverse_[ra];
      std::uint64_t base = 0;
      std::uint64_t place = 1;
      for (int i = 0; i < n; ++i) {
        base += inner.mul(av[i], bv[sigma_inv[i]]) * place;
        place *= q;
      }
      Index rc;
      if (!sn_mul_.empty()) {
        rc = sn_mul_[static_cast<std::size_t>(ra) * sn_perms_.size() + rb];
      } else {
        int comp[32];
        const auto& s = sn_perms_[ra];
        const auto& t = sn_perms_[rb];
        for (int i = 0; i < n; ++i) comp[i] = s[t[i]];
        rc = perm_rank(comp, n);
      }
      return static_cast<Index>(rc * base_order_ + base);
    }
    case Rep::sub:
      return sub_index_[parent_->mul(sub_elements_[a], sub_elements_[b])];
  }
  return kNone;
}

void FiniteGroup::build_words() {
  word_parent_.assign(order_, kNone);
  word_letter_.assign(order_, 0);
  word_parent_[0] = 0;
  std::deque<Index> queue{0};
  std::uint64_t reached = 1;
  while (!queue.empty()) {
    const Index g = queue.front();
    queue.pop_front();
    for (std::uint32_t s = 0; s < generators_.size(); ++s) {
      const Index h = mul(g, generators_[s]);
      if (word_parent_[h] == kNone) {
        word_parent_[h] = g;
        word_letter_[h] = s;
        ++reached;
        queue.push_back(h);
      }
    }
  }
  ensure(reached == order_, "generators of " + label_ + " do not generate the group");
}

void FiniteGroup::materialize_table() {
  if (order_ > kMaxCayleyTableOrder || !table_.empty()) return;
  std::vector<Index> t(order_ * order_);
  for (Index a = 0; a < order_; ++a)
    for (Index b = 0; b < order_; ++b) t[static_cast<std::size_t>(a) * order_ + b] = structural_mul(a, b);
  table_ = std::move(t);
}

void FiniteGroup::finish(std::string label) {
  label_ = std::move(label);
  materialize_table();
  if (inverse_.empty()) {
    inverse_.assign(order_, kNone);
    for (Index a = 0; a < order_; ++a) {
      if (inverse_[a] != kNone) continue;
      // Walk powers of a until returning to the identity.
      Index p = a;
      Index prev = 0;
      while (p != 0) {
        prev = p;
        p = mul(p, a);
      }
      inverse_[a] = prev == 0 ? 0 : prev;
      if (a == 0) inverse_[a] = 0;
    }
  }
  build_words();
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, order_);
  fnv_mix(h, generators_.size());
  for (Index g = 0; g < order_; ++g)
    for (auto s : generators_) fnv_mix(h, mul(g, s));
  fingerprint_ = h;
}

std::uint64_t FiniteGroup::cayley_digest() const {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, order_);
  for (Index a = 0; a < order_; ++a)
    for (Index b = 0; b < order_; ++b) fnv_mix(h, mul(a, b));
  return h;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  if (this == &other) return true;
  return order_ == other.order_ && generators_.size() == other.generators_.size() &&
         fingerprint_ == other.fingerprint_;
}

void FiniteGroup::validate(std::uint64_t samples, std::uint64_t seed) const {
  for (Index a = 0; a < order_; ++a) {
    ensure(mul(0, a) == a && mul(a, 0) == a, label_ + ": identity is not two-sided");
    ensure(mul(inverse_[a], a) == 0 && mul(a, inverse_[a]) == 0, label_ + ": bad inverse");
  }
  auto check = [&](Index a, Index b, Index c) {
    ensure(mul(mul(a, b), c) == mul(a, mul(b, c)), label_ + ": multiplication is not associative");
  };
  if (order_ <= 256) {
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        for (Index c = 0; c < order_; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, order_ - 1);
    for (std::uint64_t i = 0; i < samples; ++i)
      check(static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng)));
  }
  std::uint64_t reached = 0;
  for (Index g = 0; g < order_; ++g)
    if (g == 0 || word_parent_[g] != kNone) ++reached;
  ensure(reached == order_, label_ + ": generators do not generate");
}

std::string FiniteGroup::element_name(Index g) const {
  switch (rep_) {
    case Rep::perm:
      return cycle_notation(perms_[g]);
    case Rep::product: {
      std::string s = "(";
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (f) s += ",";
        s += factors_[f]->element_name(static_cast<Index>((g / strides_[f]) % factors_[f]->order()));
      }
      return s + ")";
    }
    case Rep::wreath: {
      std::vector<Index> base;
      std::vector<int> perm;
      wreath_decode(g, base, perm);
      std::string s = "[";
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (i) s += ",";
        s += wreath_->inner->element_name(base[i]);
      }
      s += "|";
      for (std::size_t i = 0; i < perm.size(); ++i) s += std::to_string(perm[i]);
      return s + "]";
    }
    case Rep::sub:
      return parent_->element_name(sub_elements_[g]);
    case Rep::table:
      break;
  }
  if (table_label_kind_ == "dihedral") {
    const int r = static_cast<int>(g % static_cast<Index>(table_n_));
    const int s = static_cast<int>(g / static_cast<Index>(table_n_));
    if (r == 0 && s == 0) return "e";
    std::string out;
    if (r) out += "r^" + std::to_string(r);
    if (s) out += "s";
    return out;
  }
  return g == 0 ? "e" : std::to_string(g);
}

void FiniteGroup::wreath_decode(Index g, std::vector<Index>& base, std::vector<int>& perm) const {
  require(wreath_.has_value(), "wreath_decode on a non-wreath group");
  const std::uint64_t q = wreath_->inner->order();
  std::uint64_t b = g % base_order_;
  base.resize(static_cast<std::size_t>(wreath_->n));
  for (auto& v : base) {
    v = static_cast<Index>(b % q);
    b /= q;
  }
  perm = sn_perms_[g / base_order_];
}

GroupPtr FiniteGroup::trivial() {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = 1;
  g->table_ = {0};
  g->inverse_ = {0};
  g->finish("trivial");
  return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
  require(n > 0, "cyclic(n) requires n > 0");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  const auto un = static_cast<std::uint64_t>(n);
  require(un <= kMaxCayleyTableOrder, "cyclic(n) limited to n <= 4096");
  g->order_ = un;
  g->table_.resize(un * un);
  for (std::uint64_t a = 0; a < un; ++a)
    for (std::uint64_t b = 0; b < un; ++b) g->table_[a * un + b] = static_cast<Index>((a + b) % un);
  if (n > 1) g->generators_ = {1};
  g->table_label_kind_ = "cyclic";
  g->table_n_ = n;
  g->finish("C" + std::to_string(n));
  return g;
}

GroupPtr FiniteGroup::dihedral(int n) {
  require(n > 0, "dihedral(n) requires n > 0");
  const auto un = static_cast<std::uint64_t>(n);
  require(2 * un <= kMaxCayleyTableOrder, "dihedral(n) limited to order <= 4096");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = 2 * un;
  g->table_.resize(g->order_ * g->order_);
  // Element r^a s^b has index a + n*b; r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b+d).
  for (std::uint64_t x = 0; x < g->order_; ++x) {
    for (std::uint64_t y = 0; y < g->order_; ++y) {
      const std::uint64_t a = x % un, b = x / un, c = y % un, d = y / un;
      const std::uint64_t r = b == 0 ? (a + c) % un : (a + un - c) % un;
      g->table_[x * g->order_ + y] = static_cast<Index>(r + un * ((b + d) % 2));
    }
  }
  if (n > 1) g->generators_.push_back(1);
  g->generators_.push_back(static_cast<Index>(un));
  g->table_label_kind_ = "dihedral";
  g->table_n_ = n;
  g->finish("D" + std::to_string(n));
  return g;
}

GroupPtr FiniteGroup::symmetric(int n) {
  require(n > 0, "symmetric(n) requires n > 0");
  std::vector<std::vector<int>> gens;
  if (n >= 2) {
    std::vector<int> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (n >= 3) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.push_back(c);
  }
  auto g = permutations(n, gens);
  std::const_pointer_cast<FiniteGroup>(g)->label_ = "S" + std::to_string(n);
  return g;
}

GroupPtr FiniteGroup::permutations(int degree, const std::vector<std::vector<int>>& generators) {
  require(degree > 0, "permutation group requires degree > 0");
  require(degree <= 65535, "permutation degree too large");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->rep_ = Rep::perm;
  g->degree_ = degree;
  std::vector<std::vector<std::uint16_t>> gens;
  for (const auto& p : generators) {
    require(static_cast<int>(p.size()) == degree,
            "permutation generator of length " + std::to_string(p.size()) +
                " does not match degree " + std::to_string(degree));
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    std::vector<std::uint16_t> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      require(p[i] >= 0 && p[i] < degree && !seen[static_cast<std::size_t>(p[i])],
              "permutation generator is not a bijection of {0..degree-1}");
      seen[static_cast<std::size_t>(p[i])] = true;
      q[i] = static_cast<std::uint16_t>(p[i]);
    }
    gens.push_back(std::move(q));
  }
  std::vector<std::uint16_t> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), std::uint16_t{0});
  g->perms_.push_back(id);
  g->perm_index_.emplace(id, 0);
  // Closure by breadth-first right multiplication.
  for (std::size_t head = 0; head < g->perms_.size(); ++head) {
    for (const auto& s : gens) {
      std::vector<std::uint16_t> c(id.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = g->perms_[head][s[i]];
      if (g->perm_index_.find(c) == g->perm_index_.end()) {
        if (g->perms_.size() >= kMaxPermGroupOrder)
          throw ResourceError("permutation group closure", g->perms_.size() + 1, kMaxPermGroupOrder);
        g->perm_index_.emplace(c, static_cast<Index>(g->perms_.size()));
        g->perms_.push_back(std::move(c));
      }
    }
  }
  g->order_ = g->perms_.size();
  for (const auto& s : gens) {
    const Index idx = g->perm_index_.at(s);
    if (idx != 0 && std::find(g->generators_.begin(), g->generators_.end(), idx) == g->generators_.end())
      g->generators_.push_back(idx);
  }
  g->inverse_.resize(g->order_);
  for (Index a = 0; a < g->order_; ++a) {
    std::vector<std::uint16_t> inv(id.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[g->perms_[a][i]] = static_cast<std::uint16_t>(i);
    g->inverse_[a] = g->perm_index_.at(inv);
  }
  g->finish("Perm" + std::to_string(degree) + "[" + std::to_string(g->order_) + "]");
  return g;
}

GroupPtr FiniteGroup::product(const std::vector<GroupPtr>& factors) {
  require(!factors.empty(), "product of zero groups");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->rep_ = Rep::product;
  g->factors_ = factors;
  std::uint64_t stride = 1;
  std::string label;
  for (const auto& f : factors) {
    g->strides_.push_back(stride);
    stride = checked_order_product(stride, f->order(), "product group order");
    label += (label.empty() ? "" : "x") + f->label();
  }
  g->order_ = stride;
  for (std::size_t f = 0; f < factors.size(); ++f)
    for (auto s : factors[f]->generators())
      g->generators_.push_back(static_cast<Index>(s * g->strides_[f]));
  g->inverse_.resize(g->order_);
  for (Index a = 0; a < g->order_; ++a) {
    std::uint64_t out = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      out += factors[f]->inv(static_cast<Index>((a / g->strides_[f]) % factors[f]->order())) * g->strides_[f];
    g->inverse_[a] = static_cast<Index>(out);
  }
  g->finish(label);
  return g;
}

GroupPtr FiniteGroup::wreath(const GroupPtr& inner, int n) {
  require(n > 0, "wreath(G, n) requires n > 0");
  require(n <= 12, "wreath(G, n) supports n <= 12");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->rep_ = Rep::wreath;
  g->wreath_ = WreathInfo{inner, n};
  std::uint64_t base = 1;
  for (int i = 0; i < n; ++i) base = checked_order_product(base, inner->order(), "wreath product order");
  g->base_order_ = base;
  g->order_ = checked_order_product(base, factorial(n), "wreath product order");

  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    g->sn_perms_.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const auto& s : g->sn_perms_) {
    std::vector<int> inv(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    g->sn_inverse_.push_back(std::move(inv));
  }
  const std::size_t nf = g->sn_perms_.size();
  if (nf <= 720) {
    g->sn_mul_.resize(nf * nf);
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < nf; ++a)
      for (std::size_t b = 0; b < nf; ++b) {
        for (int i = 0; i < n; ++i) comp[static_cast<std::size_t>(i)] = g->sn_perms_[a][static_cast<std::size_t>(g->sn_perms_[b][static_cast<std::size_t>(i)])];
        g->sn_mul_[a * nf + b] = perm_rank(comp.data(), n);
      }
  }

  // Inner generators on coordinate 0, then the transposition (0 1) and the n-cycle.
  for (auto s : inner->generators()) g->generators_.push_back(s);
  if (n >= 2) {
    std::vector<int> t(static_cast<std::size_t>(n));
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    g->generators_.push_back(static_cast<Index>(perm_rank(t.data(), n) * base));
  }
  if (n >= 3) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    g->generators_.push_back(static_cast<Index>(perm_rank(c.data(), n) * base));
  }

  // (a, s)^-1 = (a', s^-1) with a'_j = a_{s(j)}^-1.
  g->inverse_.resize(g->order_);
  const std::uint64_t q = inner->order();
  std::vector<Index> av(static_cast<std::size_t>(n));
  for (std::uint64_t x = 0; x < g->order_; ++x) {
    const std::uint64_t r = x / base;
    std::uint64_t b = x % base;
    for (auto& v : av) {
      v = static_cast<Index>(b % q);
      b /= q;
    }
    const auto& s = g->sn_perms_[r];
    std::uint64_t out = 0, place = 1;
    for (int j = 0; j < n; ++j) {
      out += inner->inv(av[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])]) * place;
      place *= q;
    }
    const auto& sinv = g->sn_inverse_[r];
    g->inverse_[x] = static_cast<Index>(perm_rank(sinv.data(), n) * base + out);
  }
  g->finish(inner->label() + " wr S" + std::to_string(n));
  return g;
}

GroupPtr FiniteGroup::subgroup(const GroupPtr& parent, std::vector<Index> elements,
                               std::vector<Index> parent_generators) {
  require(!elements.empty() && elements.front() == parent->identity(),
          "subgroup elements must be sorted with the identity first");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->rep_ = Rep::sub;
  g->parent_ = parent;
  g->order_ = elements.size();
  g->sub_index_.assign(parent->order(), kNone);
  for (Index i = 0; i < elements.size(); ++i) g->sub_index_[elements[i]] = i;
  g->sub_elements_ = std::move(elements);
  for (auto s : parent_generators) {
    require(g->sub_index_[s] != kNone, "subgroup generator outside the subgroup");
    if (s != parent->identity()) g->generators_.push_back(g->sub_index_[s]);
  }
  g->inverse_.resize(g->order_);
  for (Index a = 0; a < g->order_; ++a) g->inverse_[a] = g->sub_index_[parent->inv(g->sub_elements_[a])];
  g->finish("sub(" + parent->label() + ")[" + std::to_string(g->order_) + "]");
  return g;
}

GroupPtr make_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::trivial:
      return FiniteGroup::trivial();
    case K::cyclic:
      return FiniteGroup::cyclic(spec.n);
    case K::symmetric:
      return FiniteGroup::symmetric(spec.n);
    case K::dihedral:
      return FiniteGroup::dihedral(spec.n);
    case K::perm:
      return FiniteGroup::permutations(spec.degree, spec.generators);
    case K::product: {
      std::vector<GroupPtr> fs;
      for (const auto& f : spec.factors) fs.push_back(make_group(f));
      return FiniteGroup::product(fs);
    }
    case K::wreath:
      require(spec.factors.size() == 1, "wreath descriptor needs exactly one inner group");
      return FiniteGroup::wreath(make_group(spec.factors[0]), spec.n);
  }
  throw UsageError("unknown group kind");
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(Index g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup Subgroup::whole(const GroupPtr& g) {
  Subgroup h;
  h.parent = g;
  h.elements.resize(g->order());
  std::iota(h.elements.begin(), h.elements.end(), Index{0});
  h.generators.assign(g->generators().begin(), g->generators().end());
  return h;
}

namespace {

// Closure of `gens` by breadth-first right multiplication; `mark` must be all zero
// on entry and is left marking the closure.
std::vector<Index> closure(const FiniteGroup& g, std::span<const Index> gens, std::vector<char>& mark) {
  std::vector<Index> out{g.identity()};
  mark[g.identity()] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto s : gens) {
      const Index h = g.mul(out[head], s);
      if (!mark[h]) {
        mark[h] = 1;
        out.push_back(h);
      }
    }
  }
  return out;
}

}  // namespace

Subgroup Subgroup::generated_by(const GroupPtr& g, std::span<const Index> gens) {
  std::vector<char> mark(g->order(), 0);
  auto elems = closure(*g, gens, mark);
  std::sort(elems.begin(), elems.end());
  Subgroup h;
  h.parent = g;
  h.elements = std::move(elems);
  for (auto s : gens)
    if (s != g->identity() && std::find(h.generators.begin(), h.generators.end(), s) == h.generators.end())
      h.generators.push_back(s);
  return h;
}

Subgroup Subgroup::from_elements(const GroupPtr& g, std::vector<Index> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h;
  h.parent = g;
  if (elements.size() <= 1) {
    h.elements = {g->identity()};
    return h;
  }
  // Greedy generating set over a seeded shuffle: random elements generate quickly.
  std::vector<Index> order = elements;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ elements.size());
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> mark(g->order(), 0);
  std::vector<Index> current{g->identity()};
  mark[g->identity()] = 1;
  for (auto x : order) {
    if (current.size() == elements.size()) break;
    if (mark[x]) continue;
    h.generators.push_back(x);
    for (auto y : current) mark[y] = 0;
    current = closure(*g, h.generators, mark);
  }
  ensure(current.size() == elements.size(), "from_elements: element set is not a subgroup");
  for (auto y : current)
    ensure(std::binary_search(elements.begin(), elements.end(), y),
           "from_elements: element set is not closed");
  h.elements = std::move(elements);
  return h;
}

bool is_commuting(const FiniteGroup& g, std::span<const Index> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (!g.commute(entries[i], entries[j])) return false;
  }
  return true;
}

std::vector<std::vector<Index>> conjugacy_classes(const Subgroup& h) {
  const auto& g = *h.parent;
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (auto x : h.elements) {
    if (seen[x]) continue;
    std::vector<Index> cls{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (auto s : h.generators) {
        const Index y = g.conj(s, cls[head]);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::vector<Index>> conjugacy_classes(const GroupPtr& g) {
  return conjugacy_classes(Subgroup::whole(g));
}

Subgroup centralizer(const Subgroup& h, std::span<const Index> tuple) {
  const auto& g = *h.parent;
  std::vector<Index> elems;
  elems.reserve(h.elements.size());
  for (auto x : h.elements) {
    bool ok = true;
    for (auto t : tuple) {
      if (!g.commute(x, t)) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(x);
  }
  if (elems.size() == h.elements.size()) return h;
  return Subgroup::from_elements(h.parent, std::move(elems));
}

Subgroup centralizer(const GroupPtr& g, const CommutingTuple& tuple) {
  for (auto t : tuple.entries) require(t < g->order(), "tuple entry outside the group");
  return centralizer(Subgroup::whole(g), tuple.entries);
}

std::vector<Index> canonical_conjugate(const Subgroup& h) {
  const auto& g = *h.parent;
  std::set<std::vector<Index>> orbit{h.elements};
  std::deque<const std::vector<Index>*> queue{&*orbit.begin()};
  while (!queue.empty()) {
    const auto* cur = queue.front();
    queue.pop_front();
    for (auto s : g.generators()) {
      std::vector<Index> c(cur->size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.conj(s, (*cur)[i]);
      std::sort(c.begin(), c.end());
      auto [it, inserted] = orbit.insert(std::move(c));
      if (inserted) queue.push_back(&*it);
    }
  }
  return *orbit.begin();
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, const Budget& budget) {
  if (g->order() > budget.max_subgroup_lattice_order)
    throw ResourceError("subgroup enumeration of " + g->label(), g->order(), budget.max_subgroup_lattice_order);

  // Distinct cyclic subgroups, one generator each.
  std::vector<Index> cyclic_gens;
  {
    std::set<std::vector<Index>> seen;
    for (Index x = 1; x < g->order(); ++x) {
      const Index gen[] = {x};
      auto c = Subgroup::generated_by(g, gen);
      if (seen.insert(c.elements).second) cyclic_gens.push_back(x);
    }
  }

  // Breadth-first cyclic extension over conjugacy classes. Every subgroup is reached
  // from the trivial one through a chain of single-element extensions, and extending
  // a class representative reaches a representative of every extension class.
  std::set<std::vector<Index>> known;
  std::vector<Subgroup> reps;
  auto add = [&](Subgroup s) {
    auto key = canonical_conjugate(s);
    if (known.insert(key).second) {
      if (known.size() > budget.max_subgroup_count)
        throw ResourceError("subgroup classes of " + g->label(), known.size(), budget.max_subgroup_count);
      reps.push_back(Subgroup::from_elements(g, std::move(key)));
    }
  };
  add(Subgroup::generated_by(g, {}));
  for (std::size_t head = 0; head < reps.size(); ++head) {
    const Subgroup cur = reps[head];
    for (auto c : cyclic_gens) {
      if (cur.contains(c)) continue;
      std::vector<Index> gens = cur.generators;
      gens.push_back(c);
      add(Subgroup::generated_by(g, gens));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return reps;
}

namespace {

void tuple_classes_rec(const Subgroup& h, int k, std::vector<Index>& prefix, std::uint64_t multiplier,
                       std::vector<TupleClass>& out, const Budget& budget) {
  if (k == 0) {
    if (out.size() >= budget.max_tuple_classes)
      throw ResourceError("commuting tuple classes", out.size() + 1, budget.max_tuple_classes);
    out.push_back(TupleClass{CommutingTuple{prefix}, multiplier});
    return;
  }
  for (const auto& cls : conjugacy_classes(h)) {
    const Index g = cls.front();
    const Index single[] = {g};
    const Subgroup c = centralizer(h, single);
    prefix.push_back(g);
    tuple_classes_rec(c, k - 1, prefix, multiplier * cls.size(), out, budget);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TupleClass> commuting_tuple_classes(const Subgroup& h, int k, const Budget& budget) {
  require(k >= 0, "commuting_tuple_classes requires k >= 0");
  std::vector<TupleClass> out;
  std::vector<Index> prefix;
  tuple_classes_rec(h, k, prefix, 1, out, budget);
  return out;
}

std::vector<TupleClass> commuting_tuple_classes(const GroupPtr& g, int k, const Budget& budget) {
  return commuting_tuple_classes(Subgroup::whole(g), k, budget);
}

}  // namespace equichar
