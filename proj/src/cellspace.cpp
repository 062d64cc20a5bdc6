#include "equichar/cellspace.hpp"

namespace equichar {

CellSpace::CellSpace(GroupPtr gO, GroupPtr gB, std::vector<Cell> cells)
    : gO_(std::move(gO)), gB_(std::move(gB)), cells_(std::move(cells)) {
  require(gO_ && gB_, "CellSpace requires both groups");
  for (const auto& c : cells_) {
    require(c.dim >= 0, "cell dimension must be non-negative");
    require(c.fiber.gO()->same_as(*gO_) && c.fiber.gB()->same_as(*gB_),
            "all cells of a CellSpace must share the same groups");
  }
}

CellSpace CellSpace::from_biset(BiSet x) {
  auto gO = x.gO();
  auto gB = x.gB();
  std::vector<Cell> cells;
  cells.push_back(Cell{0, std::move(x)});
  return CellSpace(std::move(gO), std::move(gB), std::move(cells));
}

Int chi(const CellSpace& x) {
  Int total = 0;
  for (const auto& c : x.cells()) {
    const Int n = static_cast<std::uint64_t>(c.fiber.size());
    total += (c.dim % 2 == 0) ? n : Int(-n);
  }
  return total;
}

CellSpace fixed_cells(const CellSpace& x, const CommutingTuple& phi) {
  const Subgroup c = centralizer(x.gO(), phi);
  auto cg = FiniteGroup::subgroup(x.gO(), c.elements, c.generators);
  std::vector<Cell> cells;
  for (const auto& cell : x.cells()) {
    auto f = fixed_set(cell.fiber, phi);
    if (f.empty()) continue;
    cells.push_back(Cell{cell.dim, std::move(f)});
  }
  return CellSpace(std::move(cg), x.gB(), std::move(cells));
}

CellSpace quotient_cells(const CellSpace& x, const Subgroup& k) {
  std::vector<Cell> cells;
  for (const auto& cell : x.cells()) cells.push_back(Cell{cell.dim, quotient_by(cell.fiber, k)});
  return CellSpace(x.gO(), x.gB(), std::move(cells));
}

CellSpace cell_union(const CellSpace& x, const CellSpace& y) {
  require(x.gO()->same_as(*y.gO()) && x.gB()->same_as(*y.gB()), "cell_union over different groups");
  auto cells = x.cells();
  for (const auto& c : y.cells()) cells.push_back(c);
  return CellSpace(x.gO(), x.gB(), std::move(cells));
}

CellSpace cell_product(const CellSpace& x, const CellSpace& y) {
  require(x.gO()->same_as(*y.gO()) && x.gB()->same_as(*y.gB()), "cell_product over different groups");
  std::vector<Cell> cells;
  for (const auto& a : x.cells())
    for (const auto& b : y.cells()) cells.push_back(Cell{a.dim + b.dim, product(a.fiber, b.fiber)});
  return CellSpace(x.gO(), x.gB(), std::move(cells));
}

}  // namespace equichar
