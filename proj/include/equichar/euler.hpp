#pragma once

#include "equichar/burnside.hpp"
#include "equichar/cellspace.hpp"

namespace equichar {

struct EulerOptions {
  /// Recompute through the tuple/averaging form and compare (groups up to oracle_limit).
  bool cross_check = true;
  std::uint64_t oracle_limit = 400;
  Budget budget = default_budget();
};

/// chi(X/G_O), the order-0 characteristic. The B-side action is ignored.
Int chi_quotient(const CellSpace& x);

/// Orbifold Euler characteristic: sum over [g] of chi(X^<g> / C(g)).
Int chi_orb(const CellSpace& x, const EulerOptions& opts = {});
Int chi_orb(const BiSet& x, const EulerOptions& opts = {});

/// Order-k characteristic by the recursion over element classes and centralizers.
Int chi_k(const CellSpace& x, int k, const EulerOptions& opts = {});
Int chi_k(const BiSet& x, int k, const EulerOptions& opts = {});

/// Order-k equivariant characteristic in A(G_B); k = 0 gives chi^{G_B}(X/G_O).
BurnsideElement chi_k_equivariant(const BurnsideRing& ring, const CellSpace& x, int k,
                                  const EulerOptions& opts = {});
BurnsideElement chi_k_equivariant(const BurnsideRing& ring, const BiSet& x, int k,
                                  const EulerOptions& opts = {});

/// Second paths, used for cross-checking.
/// (1/|G|) sum over commuting (k+1)-tuples g of chi(X^<g>).
Int chi_k_averaging(const CellSpace& x, int k, const Budget& budget = default_budget());
/// Sum over classes [phi] of commuting k-tuples of chi^{G_B}(X^<phi> / C(phi)).
BurnsideElement chi_k_equivariant_tuples(const BurnsideRing& ring, const CellSpace& x, int k,
                                         const Budget& budget = default_budget());

}  // namespace equichar
