#include "equichar/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equichar {

namespace {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

std::vector<Perm> identity_perms(std::size_t count, std::size_t n) {
  return std::vector<Perm>(count, identity_perm(n));
}

void check_perm(const Perm& p, std::size_t n, const char* side) {
  require(p.size() == n, std::string(side) + " generator permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    require(v < n && !seen[v], std::string(side) + " generator image is not a permutation");
    seen[v] = true;
  }
}

void require_same_groups(const BiSet& x, const BiSet& y) {
  require(x.gO()->same_as(*y.gO()) && x.gB()->same_as(*y.gB()),
          "BiSet operation on sets over different groups");
}

// Union-find with path halving.
struct Dsu {
  std::vector<Index> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Index{0}); }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
};

}  // namespace

BiSet::BiSet(GroupPtr gO, GroupPtr gB, std::size_t size, std::vector<Perm> actO, std::vector<Perm> actB)
    : gO_(std::move(gO)), gB_(std::move(gB)), size_(size), actO_(std::move(actO)), actB_(std::move(actB)) {
  require(gO_ && gB_, "BiSet requires both groups");
  require(actO_.size() == gO_->generators().size(),
          "actO needs one permutation per gO generator (" + std::to_string(gO_->generators().size()) + ")");
  require(actB_.size() == gB_->generators().size(),
          "actB needs one permutation per gB generator (" + std::to_string(gB_->generators().size()) + ")");
  for (const auto& p : actO_) check_perm(p, size_, "actO");
  for (const auto& p : actB_) check_perm(p, size_, "actB");
}

Perm BiSet::perm_o(Index g) const {
  Perm p(size_);
  for (Index x = 0; x < size_; ++x) p[x] = act_o(g, x);
  return p;
}

bool BiSet::o_side_trivial() const {
  for (const auto& p : actO_)
    for (Index x = 0; x < size_; ++x)
      if (p[x] != x) return false;
  return true;
}

bool BiSet::b_side_trivial() const {
  for (const auto& p : actB_)
    for (Index x = 0; x < size_; ++x)
      if (p[x] != x) return false;
  return true;
}

void BiSet::validate(std::uint64_t work_limit) const {
  auto check_hom = [&](const FiniteGroup& g, auto&& act, const std::vector<Perm>& gens, const char* side) {
    const std::uint64_t work = g.order() * std::max<std::uint64_t>(1, gens.size()) * std::max<std::size_t>(1, size_);
    if (work > work_limit) return;
    for (Index e = 0; e < g.order(); ++e) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Index es = g.mul(e, g.generators()[s]);
        for (Index x = 0; x < size_; ++x)
          ensure(act(es, x) == act(e, gens[s][x]),
                 std::string(side) + " generator images do not define a group action");
      }
    }
  };
  check_hom(*gO_, [this](Index g, Index x) { return act_o(g, x); }, actO_, "actO");
  check_hom(*gB_, [this](Index g, Index x) { return act_b(g, x); }, actB_, "actB");
  for (const auto& po : actO_)
    for (const auto& pb : actB_)
      for (Index x = 0; x < size_; ++x)
        ensure(po[pb[x]] == pb[po[x]], "the O-side and B-side actions do not commute");
}

BiSet BiSet::empty_set(GroupPtr gO, GroupPtr gB) { return trivial_set(std::move(gO), std::move(gB), 0); }

BiSet BiSet::trivial_set(GroupPtr gO, GroupPtr gB, std::size_t size) {
  auto ao = identity_perms(gO->generators().size(), size);
  auto ab = identity_perms(gB->generators().size(), size);
  return BiSet(std::move(gO), std::move(gB), size, std::move(ao), std::move(ab));
}

BiSet BiSet::regular(GroupPtr gO, GroupPtr gB) {
  const std::size_t n = gO->order();
  std::vector<Perm> ao;
  for (auto s : gO->generators()) {
    Perm p(n);
    for (Index x = 0; x < n; ++x) p[x] = gO->mul(s, x);
    ao.push_back(std::move(p));
  }
  auto ab = identity_perms(gB->generators().size(), n);
  return BiSet(std::move(gO), std::move(gB), n, std::move(ao), std::move(ab));
}

BiSet BiSet::biregular(GroupPtr gO, GroupPtr gB) {
  const std::size_t no = gO->order(), nb = gB->order();
  const std::size_t n = no * nb;
  std::vector<Perm> ao, ab;
  for (auto s : gO->generators()) {
    Perm p(n);
    for (Index o = 0; o < no; ++o)
      for (Index b = 0; b < nb; ++b) p[o * nb + b] = static_cast<Index>(gO->mul(s, o) * nb + b);
    ao.push_back(std::move(p));
  }
  for (auto s : gB->generators()) {
    Perm p(n);
    for (Index o = 0; o < no; ++o)
      for (Index b = 0; b < nb; ++b) p[o * nb + b] = static_cast<Index>(o * nb + gB->mul(s, b));
    ab.push_back(std::move(p));
  }
  return BiSet(std::move(gO), std::move(gB), n, std::move(ao), std::move(ab));
}

BiSet BiSet::coset_space(GroupPtr gO, const Subgroup& h) {
  const auto& g = h.parent;
  // Left cosets xH, labelled by their smallest element.
  std::vector<Index> coset_of(g->order(), ~Index{0});
  std::vector<Index> leaders;
  for (Index x = 0; x < g->order(); ++x) {
    if (coset_of[x] != ~Index{0}) continue;
    const auto id = static_cast<Index>(leaders.size());
    leaders.push_back(x);
    for (auto y : h.elements) coset_of[g->mul(x, y)] = id;
  }
  std::vector<Perm> ab;
  for (auto s : g->generators()) {
    Perm p(leaders.size());
    for (Index c = 0; c < leaders.size(); ++c) p[c] = coset_of[g->mul(s, leaders[c])];
    ab.push_back(std::move(p));
  }
  auto ao = identity_perms(gO->generators().size(), leaders.size());
  return BiSet(std::move(gO), g, leaders.size(), std::move(ao), std::move(ab));
}

std::vector<Index> orbit_labels(const BiSet& x, std::span<const Index> o_elements, std::size_t* count) {
  Dsu dsu(x.size());
  for (auto g : o_elements)
    for (Index p = 0; p < x.size(); ++p) dsu.unite(p, x.act_o(g, p));
  std::vector<Index> label(x.size());
  std::vector<Index> root_label(x.size(), ~Index{0});
  Index next = 0;
  for (Index p = 0; p < x.size(); ++p) {
    const Index r = dsu.find(p);
    if (root_label[r] == ~Index{0}) root_label[r] = next++;
    label[p] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

BiSet fixed_set(const BiSet& x, const CommutingTuple& phi) {
  const auto& g = x.gO();
  require(is_commuting(*g, phi.entries), "fixed_set: tuple entries must be commuting elements of gO");
  std::vector<Index> points;
  std::vector<Index> local(x.size(), ~Index{0});
  for (Index p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (auto e : phi.entries) {
      if (x.act_o(e, p) != p) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      local[p] = static_cast<Index>(points.size());
      points.push_back(p);
    }
  }
  const Subgroup c = centralizer(g, phi);
  auto cg = FiniteGroup::subgroup(g, c.elements, c.generators);
  std::vector<Perm> ao;
  for (auto s : c.generators) {
    Perm p(points.size());
    for (Index i = 0; i < points.size(); ++i) p[i] = local[x.act_o(s, points[i])];
    ao.push_back(std::move(p));
  }
  std::vector<Perm> ab;
  for (const auto& pb : x.actB()) {
    Perm p(points.size());
    for (Index i = 0; i < points.size(); ++i) p[i] = local[pb[points[i]]];
    ab.push_back(std::move(p));
  }
  return BiSet(std::move(cg), x.gB(), points.size(), std::move(ao), std::move(ab));
}

BiSet quotient_by(const BiSet& x, const Subgroup& k) {
  require(k.parent->same_as(*x.gO()), "quotient_by: subgroup of a different group");
  std::size_t count = 0;
  const auto label = orbit_labels(x, k.generators, &count);
  std::vector<Index> rep(count, ~Index{0});
  for (Index p = 0; p < x.size(); ++p)
    if (rep[label[p]] == ~Index{0}) rep[label[p]] = p;
  std::vector<Perm> ab;
  for (const auto& pb : x.actB()) {
    Perm p(count);
    for (Index o = 0; o < count; ++o) p[o] = label[pb[rep[o]]];
    ab.push_back(std::move(p));
  }
  auto ao = identity_perms(x.gO()->generators().size(), count);
  return BiSet(x.gO(), x.gB(), count, std::move(ao), std::move(ab));
}

BiSet symmetric_power(const BiSet& x, int k, const Budget& budget) {
  require(k >= 0, "symmetric_power requires k >= 0");
  // Size C(m + k - 1, k), checked before enumerating.
  const std::size_t m = x.size();
  std::uint64_t count = 1;
  if (k > 0) {
    if (m == 0) {
      count = 0;
    } else {
      for (int i = 1; i <= k; ++i) {
        count = count * (m + static_cast<std::uint64_t>(i) - 1) / static_cast<std::uint64_t>(i);
        if (count > budget.max_points) throw ResourceError("symmetric power size", count, budget.max_points);
      }
    }
  }
  std::vector<std::vector<Index>> multisets;
  std::map<std::vector<Index>, Index> index;
  if (count > 0) {
    std::vector<Index> cur(static_cast<std::size_t>(k), 0);
    while (true) {
      index.emplace(cur, static_cast<Index>(multisets.size()));
      multisets.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] + 1 == m) --i;
      if (i < 0) break;
      const Index v = cur[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < k; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
  }
  auto induced = [&](const Perm& p) {
    Perm out(multisets.size());
    std::vector<Index> img(static_cast<std::size_t>(k));
    for (Index i = 0; i < multisets.size(); ++i) {
      for (std::size_t j = 0; j < img.size(); ++j) img[j] = p[multisets[i][j]];
      std::sort(img.begin(), img.end());
      out[i] = index.at(img);
    }
    return out;
  };
  std::vector<Perm> ao, ab;
  for (const auto& p : x.actO()) ao.push_back(induced(p));
  for (const auto& p : x.actB()) ab.push_back(induced(p));
  return BiSet(x.gO(), x.gB(), multisets.size(), std::move(ao), std::move(ab));
}

std::uint64_t tuple_index(std::span<const Index> coords, std::size_t base) {
  std::uint64_t idx = 0;
  for (std::size_t i = coords.size(); i-- > 0;) idx = idx * base + coords[i];
  return idx;
}

BiSet wreath_power(const BiSet& x, int n, const Budget& budget) {
  require(n > 0, "wreath_power requires n > 0");
  return wreath_power(x, FiniteGroup::wreath(x.gO(), n), budget);
}

BiSet wreath_power(const BiSet& x, const GroupPtr& wg, const Budget& budget) {
  const auto* info = wg->wreath();
  require(info && info->inner->same_as(*x.gO()), "wreath_power: group is not a wreath product of gO");
  const int n = info->n;
  const std::uint64_t m = x.size();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > budget.max_points) throw ResourceError("wreath power point count", total, budget.max_points);
  }
  std::vector<Index> coords(static_cast<std::size_t>(n));
  auto decode = [&](std::uint64_t p) {
    for (auto& c : coords) {
      c = static_cast<Index>(p % m);
      p /= m;
    }
  };
  // (a, s) . (x_0..x_{n-1}) = (a_i . x_{s^-1(i)})_i
  std::vector<Perm> ao;
  std::vector<Index> base;
  std::vector<int> sigma;
  std::vector<Index> img(static_cast<std::size_t>(n));
  for (auto gen : wg->generators()) {
    wg->wreath_decode(gen, base, sigma);
    std::vector<int> sigma_inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma_inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
    Perm p(total);
    for (std::uint64_t pt = 0; pt < total; ++pt) {
      decode(pt);
      for (int i = 0; i < n; ++i)
        img[static_cast<std::size_t>(i)] = x.act_o(base[static_cast<std::size_t>(i)], coords[static_cast<std::size_t>(sigma_inv[static_cast<std::size_t>(i)])]);
      p[pt] = static_cast<Index>(tuple_index(img, m));
    }
    ao.push_back(std::move(p));
  }
  std::vector<Perm> ab;
  for (const auto& pb : x.actB()) {
    Perm p(total);
    for (std::uint64_t pt = 0; pt < total; ++pt) {
      decode(pt);
      for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = pb[coords[static_cast<std::size_t>(i)]];
      p[pt] = static_cast<Index>(tuple_index(img, m));
    }
    ab.push_back(std::move(p));
  }
  return BiSet(wg, x.gB(), total, std::move(ao), std::move(ab));
}

BiSet product(const BiSet& x, const BiSet& y) {
  require_same_groups(x, y);
  const std::size_t ny = y.size();
  const std::size_t n = x.size() * ny;
  auto combine = [&](std::span<const Perm> px, std::span<const Perm> py) {
    std::vector<Perm> out;
    for (std::size_t s = 0; s < px.size(); ++s) {
      Perm p(n);
      for (Index a = 0; a < x.size(); ++a)
        for (Index b = 0; b < ny; ++b) p[a * ny + b] = static_cast<Index>(px[s][a] * ny + py[s][b]);
      out.push_back(std::move(p));
    }
    return out;
  };
  return BiSet(x.gO(), x.gB(), n, combine(x.actO(), y.actO()), combine(x.actB(), y.actB()));
}

BiSet disjoint_union(const BiSet& x, const BiSet& y) {
  require_same_groups(x, y);
  const auto nx = static_cast<Index>(x.size());
  auto combine = [&](std::span<const Perm> px, std::span<const Perm> py) {
    std::vector<Perm> out;
    for (std::size_t s = 0; s < px.size(); ++s) {
      Perm p(px[s]);
      for (auto v : py[s]) p.push_back(v + nx);
      out.push_back(std::move(p));
    }
    return out;
  };
  return BiSet(x.gO(), x.gB(), x.size() + y.size(), combine(x.actO(), y.actO()), combine(x.actB(), y.actB()));
}

}  // namespace equichar
