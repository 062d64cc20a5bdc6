#include "equichar/euler.hpp"

#include <numeric>
#include <unordered_map>

namespace equichar {

namespace {

std::uint64_t fnv(const std::vector<Index>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

struct VecHash {
  std::size_t operator()(const std::vector<Index>& v) const noexcept { return static_cast<std::size_t>(fnv(v)); }
};

// All cells flattened into one BiSet; sign[p] = (-1)^dim of the cell holding p.
struct Flat {
  BiSet points;
  std::vector<int> sign;
};

Flat flatten(const CellSpace& x) {
  BiSet all = BiSet::empty_set(x.gO(), x.gB());
  std::vector<int> sign;
  for (const auto& c : x.cells()) {
    all = disjoint_union(all, c.fiber);
    sign.insert(sign.end(), c.fiber.size(), c.dim % 2 == 0 ? 1 : -1);
  }
  return Flat{std::move(all), std::move(sign)};
}

// Recursion (7)/(5) over element classes and centralizers inside the root O-side
// group. A node is (remaining order, surviving points, acting subgroup); a leaf
// returns chi or chi^{G_B} of the quotient as a coefficient vector.
class Recursion {
public:
  Recursion(const Flat& flat, const BurnsideRing* ring, const Budget& budget)
      : flat_(flat), ring_(ring), budget_(budget), local_(flat.points.size(), ~Index{0}) {}

  std::vector<Int> run(int k) {
    std::vector<Index> all(flat_.points.size());
    std::iota(all.begin(), all.end(), Index{0});
    return node(k, all, Subgroup::whole(flat_.points.gO()));
  }

private:
  std::vector<Int> node(int k, const std::vector<Index>& pts, const Subgroup& c) {
    const std::size_t width = ring_ ? ring_->rank() : 1;
    if (pts.empty()) return std::vector<Int>(width, Int(0));
    if (k == 0) return leaf(pts, c);

    std::vector<Index> key;
    key.reserve(2 + pts.size() + c.elements.size());
    key.push_back(static_cast<Index>(k));
    key.push_back(static_cast<Index>(pts.size()));
    key.insert(key.end(), pts.begin(), pts.end());
    key.insert(key.end(), c.elements.begin(), c.elements.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    if (++nodes_ > budget_.max_tuple_classes)
      throw ResourceError("Euler recursion branches", nodes_, budget_.max_tuple_classes);

    std::vector<Int> total(width, Int(0));
    const auto& x = flat_.points;
    for (const auto& cls : conjugacy_classes(c)) {
      const Index g = cls.front();
      std::vector<Index> fixed;
      for (auto p : pts)
        if (x.act_o(g, p) == p) fixed.push_back(p);
      if (fixed.empty()) continue;
      const Index tuple[1] = {g};
      const auto sub = node(k - 1, fixed, centralizer(c, tuple));
      for (std::size_t i = 0; i < width; ++i) total[i] += sub[i];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<Int> leaf(const std::vector<Index>& pts, const Subgroup& c) {
    const auto& x = flat_.points;
    // union-find over the local points, joined along the generators of c
    for (Index i = 0; i < pts.size(); ++i) local_[pts[i]] = i;
    std::vector<Index> parent(pts.size());
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (auto s : c.generators)
      for (Index i = 0; i < pts.size(); ++i) {
        const Index j = local_[x.act_o(s, pts[i])];
        ensure(j != ~Index{0}, "fixed point set is not invariant under its centralizer");
        Index a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

    std::vector<Int> out(ring_ ? ring_->rank() : 1, Int(0));
    if (!ring_) {
      for (Index i = 0; i < pts.size(); ++i)
        if (find(i) == i) out[0] += flat_.sign[pts[i]];
    } else {
      const auto& gB = ring_->group();
      // Each G_B-orbit of C-orbits is counted once, at its smallest C-orbit root.
      std::vector<Index> root(pts.size());
      for (Index i = 0; i < pts.size(); ++i) root[i] = find(i);
      std::vector<char> done(pts.size(), 0);
      for (Index i = 0; i < pts.size(); ++i) {
        if (root[i] != i || done[i]) continue;
        std::vector<Index> stab;
        for (Index b = 0; b < gB->order(); ++b) {
          const Index j = local_[x.act_b(b, pts[i])];
          ensure(j != ~Index{0}, "B-side action does not preserve a fixed point set");
          const Index r = root[j];
          if (r == i) stab.push_back(b);
          done[r] = 1;
        }
        auto it = stab_class_.find(stab);
        if (it == stab_class_.end()) {
          const auto idx = ring_->class_index(Subgroup::from_elements(gB, stab));
          it = stab_class_.emplace(std::move(stab), idx).first;
        }
        out[it->second] += flat_.sign[pts[i]];
      }
    }
    for (auto p : pts) local_[p] = ~Index{0};
    return out;
  }

  const Flat& flat_;
  const BurnsideRing* ring_;
  const Budget& budget_;
  std::vector<Index> local_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::vector<Index>, std::vector<Int>, VecHash> memo_;
  std::map<std::vector<Index>, std::size_t> stab_class_;
};

Int chi_fixed(const Flat& flat, std::span<const Index> tuple) {
  Int total = 0;
  const auto& x = flat.points;
  for (Index p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (auto g : tuple)
      if (x.act_o(g, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) total += flat.sign[p];
  }
  return total;
}

}  // namespace

Int chi_quotient(const CellSpace& x) {
  const auto flat = flatten(x);
  Recursion r(flat, nullptr, default_budget());
  return r.run(0)[0];
}

Int chi_k(const CellSpace& x, int k, const EulerOptions& opts) {
  require(k >= 0, "chi_k requires k >= 0");
  const auto flat = flatten(x);
  Recursion r(flat, nullptr, opts.budget);
  const Int value = r.run(k)[0];
  if (opts.cross_check && k >= 1 && x.gO()->order() <= opts.oracle_limit) {
    const Int other = chi_k_averaging(x, k, opts.budget);
    ensure(value == other, "chi_k: class recursion gives " + value.str() + " but the averaging form gives " +
                               other.str());
  }
  return value;
}

Int chi_k(const BiSet& x, int k, const EulerOptions& opts) { return chi_k(CellSpace::from_biset(x), k, opts); }

Int chi_orb(const CellSpace& x, const EulerOptions& opts) { return chi_k(x, 1, opts); }
Int chi_orb(const BiSet& x, const EulerOptions& opts) { return chi_k(x, 1, opts); }

BurnsideElement chi_k_equivariant(const BurnsideRing& ring, const CellSpace& x, int k, const EulerOptions& opts) {
  require(k >= 0, "chi_k_equivariant requires k >= 0");
  require(x.gB()->same_as(*ring.group()), "chi_k_equivariant: B-side group differs from the ring group");
  const auto flat = flatten(x);
  Recursion r(flat, &ring, opts.budget);
  BurnsideElement value(ring.shared_from_this(), r.run(k));
  if (opts.cross_check && x.gO()->order() <= opts.oracle_limit) {
    const auto other = chi_k_equivariant_tuples(ring, x, k, opts.budget);
    ensure(value == other, "chi_k_equivariant: class recursion gives " + value.to_string() +
                               " but the tuple form gives " + other.to_string());
  }
  return value;
}

BurnsideElement chi_k_equivariant(const BurnsideRing& ring, const BiSet& x, int k, const EulerOptions& opts) {
  return chi_k_equivariant(ring, CellSpace::from_biset(x), k, opts);
}

Int chi_k_averaging(const CellSpace& x, int k, const Budget& budget) {
  require(k >= 0, "chi_k_averaging requires k >= 0");
  const auto flat = flatten(x);
  const auto& g = *x.gO();
  // Enumerate commuting (k+1)-tuples g_0..g_k depth first.
  Int total = 0;
  std::uint64_t visited = 0;
  std::vector<Index> tuple;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k + 1) {
      if (++visited > budget.max_configurations)
        throw ResourceError("commuting tuples", visited, budget.max_configurations);
      total += chi_fixed(flat, tuple);
      return;
    }
    for (Index e = 0; e < g.order(); ++e) {
      bool ok = true;
      for (auto t : tuple)
        if (!g.commute(e, t)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      tuple.push_back(e);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  const Int order = g.order();
  ensure(total % order == 0, "averaging form is not integral");
  return total / order;
}

BurnsideElement chi_k_equivariant_tuples(const BurnsideRing& ring, const CellSpace& x, int k, const Budget& budget) {
  require(k >= 0, "chi_k_equivariant_tuples requires k >= 0");
  BurnsideElement total = ring.zero();
  for (const auto& cls : commuting_tuple_classes(x.gO(), k, budget)) {
    const auto fixed = fixed_cells(x, cls.representative);
    const auto quotient = quotient_cells(fixed, Subgroup::whole(fixed.gO()));
    total += chi_equivariant(ring, quotient);
  }
  return total;
}

}  // namespace equichar
