#include "equichar/burnside.hpp"

#include <sstream>

namespace equichar {

BurnsideElement::BurnsideElement(BurnsidePtr ring, std::vector<Int> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  require(ring_ != nullptr, "BurnsideElement without a ring");
  require(coeffs_.size() == ring_->rank(), "Burnside coefficient vector has wrong length");
}

bool BurnsideElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void BurnsideElement::check_same(const BurnsideElement& o) const {
  if (ring_ != o.ring_ && !ring_->group()->same_as(*o.ring_->group()))
    throw UsageError("Burnside ring elements over different groups");
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BurnsideElement operator-(BurnsideElement a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  a.check_same(b);
  const auto& ring = *a.ring_;
  auto ma = ring.marks(a);
  const auto mb = ring.marks(b);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] *= mb[i];
  return ring.from_marks(ma);
}

BurnsideElement operator*(const Int& n, BurnsideElement a) {
  for (auto& c : a.coeffs_) c *= n;
  return a;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  a.check_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::string BurnsideElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "·";
    out << ring_->basis_label(i);
    first = false;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t coset_marks(const FiniteGroup& g, const Subgroup& k, const Subgroup& h) {
  // |(G/K)^H| = #{x in G : x^-1 H x in K} / |K|
  std::vector<char> in_k(g.order(), 0);
  for (auto e : k.elements) in_k[e] = 1;
  std::int64_t count = 0;
  for (Index x = 0; x < g.order(); ++x) {
    const Index xi = g.inv(x);
    bool inside = true;
    for (auto s : h.generators) {
      if (!in_k[g.mul(g.mul(xi, s), x)]) {
        inside = false;
        break;
      }
    }
    if (inside) ++count;
  }
  ensure(count % static_cast<std::int64_t>(k.order()) == 0, "coset mark is not integral");
  return count / static_cast<std::int64_t>(k.order());
}

const GroupPtr& trivial_group() {
  static const GroupPtr g = FiniteGroup::trivial();
  return g;
}

}  // namespace

BurnsidePtr BurnsideRing::create(GroupPtr g, const Budget& budget, const LatticeStore* store) {
  auto ring = std::shared_ptr<BurnsideRing>(new BurnsideRing());
  ring->group_ = g;
  std::optional<LatticeData> cached;
  if (store) cached = store->load(*g);
  if (cached) {
    for (auto& elems : cached->class_elements) ring->classes_.push_back(Subgroup::from_elements(g, elems));
    ring->marks_ = cached->marks;
  } else {
    ring->classes_ = subgroups_up_to_conjugacy(g, budget);
    const std::size_t r = ring->classes_.size();
    ring->marks_.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t h = 0; h <= k; ++h)
        ring->marks_[k][h] = coset_marks(*g, ring->classes_[k], ring->classes_[h]);
    if (store) {
      LatticeData data;
      for (const auto& c : ring->classes_) data.class_elements.push_back(c.elements);
      data.marks = ring->marks_;
      store->store(*g, data);
    }
  }
  const std::size_t r = ring->classes_.size();
  for (std::size_t i = 0; i < r; ++i) {
    ensure(ring->marks_[i][i] > 0, "table of marks has a non-positive diagonal entry");
    ring->canonical_index_.emplace(ring->classes_[i].elements, i);
  }
  ring->zeta_cache_.resize(r);
  return ring;
}

std::string BurnsideRing::basis_label(std::size_t i) const {
  if (i == 0) return "[G/e]";
  if (i + 1 == classes_.size()) return "[G/G]";
  return "[G/H" + std::to_string(i) + "]";
}

BurnsideElement BurnsideRing::zero() const {
  return BurnsideElement(shared_from_this(), std::vector<Int>(rank(), Int(0)));
}

BurnsideElement BurnsideRing::one() const { return basis(rank() - 1); }

BurnsideElement BurnsideRing::basis(std::size_t i) const {
  require(i < rank(), "Burnside basis index out of range");
  std::vector<Int> c(rank(), Int(0));
  c[i] = 1;
  return BurnsideElement(shared_from_this(), std::move(c));
}

BurnsideElement BurnsideRing::from_int(const Int& n) const { return n * one(); }

std::vector<Int> BurnsideRing::marks(const BurnsideElement& x) const {
  const auto& c = x.coeffs();
  std::vector<Int> m(rank(), Int(0));
  for (std::size_t k = 0; k < rank(); ++k) {
    if (c[k] == 0) continue;
    for (std::size_t h = 0; h <= k; ++h)
      if (marks_[k][h] != 0) m[h] += c[k] * marks_[k][h];
  }
  return m;
}

BurnsideElement BurnsideRing::from_marks(const std::vector<Int>& m) const {
  require(m.size() == rank(), "mark vector has wrong length");
  std::vector<Int> c(rank(), Int(0));
  for (std::size_t h = rank(); h-- > 0;) {
    Int residual = m[h];
    for (std::size_t k = h + 1; k < rank(); ++k)
      if (marks_[k][h] != 0 && c[k] != 0) residual -= c[k] * marks_[k][h];
    const Int d = marks_[h][h];
    ensure(residual % d == 0, "mark vector is not the mark vector of a Burnside element");
    c[h] = residual / d;
  }
  return BurnsideElement(shared_from_this(), std::move(c));
}

void BurnsideRing::check_group(const BiSet& x) const {
  require(x.gB()->same_as(*group_), "BiSet B-side group differs from the Burnside ring group");
}

std::vector<Int> BurnsideRing::marks_of(const BiSet& x) const {
  check_group(x);
  std::vector<Int> m(rank(), Int(0));
  for (std::size_t h = 0; h < rank(); ++h) {
    std::uint64_t count = 0;
    for (Index p = 0; p < x.size(); ++p) {
      bool fixed = true;
      for (auto s : classes_[h].generators) {
        if (x.act_b(s, p) != p) {
          fixed = false;
          break;
        }
      }
      if (fixed) ++count;
    }
    m[h] = count;
  }
  return m;
}

BurnsideElement BurnsideRing::class_of(const BiSet& x) const {
  require(x.o_side_trivial(), "class_of requires a trivial O-side action (quotient first)");
  return from_marks(marks_of(x));
}

std::size_t BurnsideRing::class_index(const Subgroup& h) const {
  require(h.parent->same_as(*group_), "class_index: subgroup of a different group");
  const auto it = canonical_index_.find(canonical_conjugate(h));
  ensure(it != canonical_index_.end(), "subgroup class missing from the Burnside basis");
  return it->second;
}

std::vector<BurnsideElement> BurnsideRing::zeta_basis(std::size_t i, int n) const {
  require(i < rank(), "zeta_basis index out of range");
  require(n >= 0, "zeta_basis degree must be non-negative");
  std::vector<std::vector<Int>> coeffs;
  {
    std::lock_guard<std::mutex> lock(zeta_mutex_);
    auto& cache = zeta_cache_[i];
    if (static_cast<int>(cache.size()) <= n) {
      const BiSet orbit = BiSet::coset_space(trivial_group(), classes_[i]);
      for (int k = static_cast<int>(cache.size()); k <= n; ++k)
        cache.push_back(class_of(symmetric_power(orbit, k)).coeffs());
    }
    coeffs.assign(cache.begin(), cache.begin() + n + 1);
  }
  std::vector<BurnsideElement> out;
  out.reserve(coeffs.size());
  for (auto& c : coeffs) out.emplace_back(shared_from_this(), std::move(c));
  return out;
}

std::vector<std::vector<std::int64_t>> table_of_marks(const GroupPtr& g, const Budget& budget) {
  return BurnsideRing::create(g, budget)->table_of_marks();
}

BurnsideElement chi_equivariant(const BurnsideRing& ring, const BiSet& x) {
  return chi_equivariant(ring, CellSpace::from_biset(x));
}

BurnsideElement chi_equivariant(const BurnsideRing& ring, const CellSpace& x) {
  const auto& g = *ring.group();
  std::vector<Int> coeffs(ring.rank(), Int(0));
  std::map<std::vector<Index>, std::size_t> stabilizer_class;
  for (const auto& cell : x.cells()) {
    const BiSet& f = cell.fiber;
    require(f.o_side_trivial(), "chi_equivariant requires a trivial O-side action (quotient first)");
    require(f.gB()->same_as(g), "chi_equivariant: B-side group differs from the ring group");
    std::vector<std::uint64_t> stratum(ring.rank(), 0);
    for (Index p = 0; p < f.size(); ++p) {
      std::vector<Index> stab;
      for (Index b = 0; b < g.order(); ++b)
        if (f.act_b(b, p) == p) stab.push_back(b);
      auto it = stabilizer_class.find(stab);
      if (it == stabilizer_class.end()) {
        const auto idx = ring.class_index(Subgroup::from_elements(ring.group(), stab));
        it = stabilizer_class.emplace(std::move(stab), idx).first;
      }
      ++stratum[it->second];
    }
    for (std::size_t h = 0; h < ring.rank(); ++h) {
      if (stratum[h] == 0) continue;
      // Each orbit in the stratum of [H] has |G/H| points.
      const std::uint64_t orbit_size = g.order() / ring.classes()[h].order();
      ensure(stratum[h] % orbit_size == 0, "isotropy stratum is not a union of orbits");
      const Int orbits = stratum[h] / orbit_size;
      coeffs[h] += (cell.dim % 2 == 0) ? orbits : Int(-orbits);
    }
  }
  return BurnsideElement(ring.shared_from_this(), std::move(coeffs));
}

Int cardinality_hom(const BurnsideElement& x) {
  const auto& ring = x.ring();
  Int total = 0;
  const auto order = ring.group()->order();
  for (std::size_t i = 0; i < ring.rank(); ++i)
    total += x.coeffs()[i] * static_cast<std::uint64_t>(order / ring.classes()[i].order());
  return total;
}

}  // namespace equichar
