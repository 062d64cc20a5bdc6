#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "equichar/cellspace.hpp"
#include "equichar/gset.hpp"

namespace equichar {

class BurnsideRing;
using BurnsidePtr = std::shared_ptr<const BurnsideRing>;

/// Element of A(G) in the [G/H] basis (canonical subgroup-class order).
class BurnsideElement {
public:
  BurnsideElement(BurnsidePtr ring, std::vector<Int> coeffs);

  const BurnsideRing& ring() const { return *ring_; }
  const BurnsidePtr& ring_ptr() const { return ring_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator-(BurnsideElement a);
  friend BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b);
  friend BurnsideElement operator*(const Int& n, BurnsideElement a);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b);

  /// "2·[G/e] + [G/G]" in canonical basis order; "0" for zero.
  std::string to_string() const;

private:
  void check_same(const BurnsideElement& o) const;

  BurnsidePtr ring_;
  std::vector<Int> coeffs_;
};

/// Subgroup classes and table of marks, as persisted by a lattice cache.
struct LatticeData {
  std::vector<std::vector<Index>> class_elements;
  std::vector<std::vector<std::int64_t>> marks;
};

class LatticeStore {
public:
  virtual ~LatticeStore() = default;
  virtual std::optional<LatticeData> load(const FiniteGroup& g) const = 0;
  virtual void store(const FiniteGroup& g, const LatticeData& data) const = 0;
};

/// The Burnside ring A(G): canonical basis of subgroup classes, the table of
/// marks and exact arithmetic through the injective mark homomorphism.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
public:
  static BurnsidePtr create(GroupPtr g, const Budget& budget = default_budget(),
                            const LatticeStore* store = nullptr);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return classes_.size(); }
  const std::vector<Subgroup>& classes() const { return classes_; }
  /// marks()[k][h] = |(G/K)^H|, rows and columns in basis order.
  const std::vector<std::vector<std::int64_t>>& table_of_marks() const { return marks_; }
  std::string basis_label(std::size_t i) const;

  BurnsideElement zero() const;
  BurnsideElement one() const;
  BurnsideElement basis(std::size_t i) const;
  BurnsideElement from_int(const Int& n) const;

  std::vector<Int> marks(const BurnsideElement& x) const;
  /// Exact back-substitution against the triangular table; a non-integral
  /// solution is an InvariantViolation.
  BurnsideElement from_marks(const std::vector<Int>& marks) const;

  /// Fixed-point counts |X^H| of the B-side action, one per basis class.
  std::vector<Int> marks_of(const BiSet& x) const;
  /// Class of X as a gB-set; requires a trivial O-side action.
  BurnsideElement class_of(const BiSet& x) const;

  /// Basis index of the conjugacy class of an arbitrary subgroup of G.
  std::size_t class_index(const Subgroup& h) const;

  /// Coefficients of the Kapranov zeta series of [G/H_i]: class_of(S^k(G/H_i)), k = 0..n.
  std::vector<BurnsideElement> zeta_basis(std::size_t i, int n) const;

private:
  BurnsideRing() = default;
  void check_group(const BiSet& x) const;

  GroupPtr group_;
  std::vector<Subgroup> classes_;
  std::vector<std::vector<std::int64_t>> marks_;
  std::map<std::vector<Index>, std::size_t> canonical_index_;

  mutable std::mutex zeta_mutex_;
  mutable std::vector<std::vector<std::vector<Int>>> zeta_cache_;
};

/// Table of marks of G, rows [G/K], columns [H], canonical order.
std::vector<std::vector<std::int64_t>> table_of_marks(const GroupPtr& g, const Budget& budget = default_budget());

/// Equivariant Euler characteristic of the gB action, built from isotropy strata:
/// sum over classes h of chi(X^(h) / G) [G/H]. Requires a trivial O-side.
BurnsideElement chi_equivariant(const BurnsideRing& ring, const BiSet& x);
BurnsideElement chi_equivariant(const BurnsideRing& ring, const CellSpace& x);

/// Ring map A(G) -> Z, [G/H] -> |G/H|.
Int cardinality_hom(const BurnsideElement& x);

}  // namespace equichar
