#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <span>
#include <string>
#include <vector>

#include "equichar/core.hpp"

namespace equichar {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Recursive description of a group, mirroring the JSON group descriptor.
struct GroupSpec {
  enum class Kind { trivial, cyclic, symmetric, dihedral, product, perm, wreath };

  Kind kind = Kind::trivial;
  int n = 0;                                   // cyclic/symmetric/dihedral/wreath
  int degree = 0;                              // perm
  std::vector<std::vector<int>> generators;    // perm
  std::vector<GroupSpec> factors;              // product factors; wreath inner is factors[0]
};

/// Groups larger than this keep multiplication structural instead of a flat table.
inline constexpr std::uint64_t kMaxCayleyTableOrder = 4096;

/// A finite group on dense element indices 0..order-1, identity at index 0.
///
/// Multiplication comes from a flat Cayley table when the order is small and
/// from the underlying construction (permutations, product coordinates,
/// wreath coordinates, parent group) otherwise. Every element carries a
/// shortest-word back-pointer `g = word_parent(g) * generators()[word_letter(g)]`
/// used to evaluate actions given on generators only.
class FiniteGroup {
public:
  struct WreathInfo {
    GroupPtr inner;
    int n = 0;
  };

  std::uint64_t order() const { return order_; }
  Index identity() const { return 0; }
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index s, Index g) const { return mul(mul(s, g), inverse_[s]); }
  bool commute(Index a, Index b) const { return mul(a, b) == mul(b, a); }

  std::span<const Index> generators() const { return generators_; }
  const std::string& label() const { return label_; }

  Index word_parent(Index g) const { return word_parent_[g]; }
  std::uint32_t word_letter(Index g) const { return word_letter_[g]; }

  /// Cheap structural fingerprint used for "same group" checks.
  std::uint64_t fingerprint() const { return fingerprint_; }
  /// FNV-1a digest of the full multiplication table, in index order.
  std::uint64_t cayley_digest() const;
  bool same_as(const FiniteGroup& other) const;

  bool has_table() const { return !table_.empty(); }
  const WreathInfo* wreath() const { return wreath_ ? &*wreath_ : nullptr; }

  std::string element_name(Index g) const;

  /// Wreath coordinates: base entries a_0..a_{n-1} and the permutation of {0..n-1}.
  void wreath_decode(Index g, std::vector<Index>& base, std::vector<int>& perm) const;

  /// Checks associativity, identity and inverse laws and generation; exhaustive up to
  /// order 256, `samples` random triples above. Throws InvariantViolation.
  void validate(std::uint64_t samples = 100000, std::uint64_t seed = 1) const;

  static GroupPtr trivial();
  static GroupPtr cyclic(int n);
  static GroupPtr symmetric(int n);
  static GroupPtr dihedral(int n);
  static GroupPtr product(const std::vector<GroupPtr>& factors);
  static GroupPtr permutations(int degree, const std::vector<std::vector<int>>& generators);
  static GroupPtr wreath(const GroupPtr& inner, int n);
  /// Re-indexes a subgroup (given as sorted parent indices with identity first) as a group.
  static GroupPtr subgroup(const GroupPtr& parent, std::vector<Index> elements,
                           std::vector<Index> parent_generators);

private:
  enum class Rep { table, perm, product, wreath, sub };

  FiniteGroup() = default;
  Index structural_mul(Index a, Index b) const;
  void finish(std::string label);
  void build_words();
  void materialize_table();

  std::uint64_t order_ = 1;
  std::string label_;
  Rep rep_ = Rep::table;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<Index> word_parent_;
  std::vector<std::uint32_t> word_letter_;
  std::uint64_t fingerprint_ = 0;

  // perm representation
  int degree_ = 0;
  std::vector<std::vector<std::uint16_t>> perms_;
  struct PermHash {
    std::size_t operator()(const std::vector<std::uint16_t>& p) const noexcept;
  };
  std::unordered_map<std::vector<std::uint16_t>, Index, PermHash> perm_index_;

  // product representation
  std::vector<GroupPtr> factors_;
  std::vector<std::uint64_t> strides_;

  // wreath representation
  std::optional<WreathInfo> wreath_;
  std::vector<std::vector<int>> sn_perms_;   // all of S_n, lexicographic order
  std::vector<std::vector<int>> sn_inverse_;
  std::vector<Index> sn_mul_;                // rank table, only when n! <= 720
  std::uint64_t base_order_ = 1;             // |inner|^n

  // sub representation
  GroupPtr parent_;
  std::vector<Index> sub_elements_;
  std::vector<Index> sub_index_;             // parent index -> local index (or npos)

  std::string table_label_kind_;             // "cyclic" or "dihedral" naming for tables
  int table_n_ = 0;

  friend GroupPtr make_group(const GroupSpec& spec);
};

GroupPtr make_group(const GroupSpec& spec);

/// Subgroup of a parent group: sorted element indices plus a small generating set.
struct Subgroup {
  GroupPtr parent;
  std::vector<Index> elements;
  std::vector<Index> generators;

  std::uint64_t order() const { return elements.size(); }
  bool contains(Index g) const;

  static Subgroup whole(const GroupPtr& g);
  static Subgroup generated_by(const GroupPtr& g, std::span<const Index> gens);
  /// Elements must already be closed; a small generating set is chosen deterministically.
  static Subgroup from_elements(const GroupPtr& g, std::vector<Index> elements);
};

/// A k-tuple of pairwise commuting elements; the parent group is passed alongside.
struct CommutingTuple {
  std::vector<Index> entries;
  bool operator==(const CommutingTuple&) const = default;
};

struct TupleClass {
  CommutingTuple representative;
  std::uint64_t size = 0;
};

bool is_commuting(const FiniteGroup& g, std::span<const Index> entries);

/// Conjugacy classes of `h` under conjugation by `h` itself; identity class first,
/// classes ordered by their minimal element, elements sorted.
std::vector<std::vector<Index>> conjugacy_classes(const Subgroup& h);
std::vector<std::vector<Index>> conjugacy_classes(const GroupPtr& g);

/// Elements of `h` commuting with every entry of `tuple`.
Subgroup centralizer(const Subgroup& h, std::span<const Index> tuple);
Subgroup centralizer(const GroupPtr& g, const CommutingTuple& tuple);

/// One canonical representative per conjugacy class of subgroups, ordered by
/// (order, lexicographically minimal conjugate). First is trivial, last is the group.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g,
                                                const Budget& budget = default_budget());

/// Canonical representative (lexicographically minimal element list) of the
/// conjugacy class of `h` in its parent.
std::vector<Index> canonical_conjugate(const Subgroup& h);

/// Orbit representatives of the conjugation action on commuting k-tuples of `h`,
/// with orbit sizes. Built recursively: class representative, then its centralizer.
std::vector<TupleClass> commuting_tuple_classes(const Subgroup& h, int k,
                                                const Budget& budget = default_budget());
std::vector<TupleClass> commuting_tuple_classes(const GroupPtr& g, int k,
                                                const Budget& budget = default_budget());

}  // namespace equichar
