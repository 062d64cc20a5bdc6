#pragma once

#include <vector>

#include "equichar/gset.hpp"

namespace equichar {

/// Open cell sigma^dim x fiber, the groups acting trivially on the cell factor.
struct Cell {
  int dim = 0;
  BiSet fiber;
};

/// Formal disjoint union of cells; the fibers share one pair of groups.
class CellSpace {
public:
  CellSpace(GroupPtr gO, GroupPtr gB, std::vector<Cell> cells);
  static CellSpace from_biset(BiSet x);

  const GroupPtr& gO() const { return gO_; }
  const GroupPtr& gB() const { return gB_; }
  const std::vector<Cell>& cells() const { return cells_; }

private:
  GroupPtr gO_;
  GroupPtr gB_;
  std::vector<Cell> cells_;
};

/// Compactly supported Euler characteristic: sum of (-1)^dim |fiber|.
Int chi(const CellSpace& x);

CellSpace fixed_cells(const CellSpace& x, const CommutingTuple& phi);
CellSpace quotient_cells(const CellSpace& x, const Subgroup& k);

CellSpace cell_union(const CellSpace& x, const CellSpace& y);
/// (d1, F1) x (d2, F2) = (d1 + d2, F1 x F2) with diagonal actions.
CellSpace cell_product(const CellSpace& x, const CellSpace& y);

}  // namespace equichar
