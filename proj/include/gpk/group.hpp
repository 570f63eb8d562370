#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gpk {

// A group element. For finite table groups this is an index in [0, order)
// with 0 the identity; for the infinite cyclic group it is the integer itself.
using Elem = std::int64_t;

/// A vertex group: either a finite group given by its multiplication table,
/// or the infinite cyclic group Z with exact (overflow-checked) arithmetic.
///
/// Groups are immutable and cheap to copy; table storage is shared.
class Group {
 public:
  enum class Kind { finite_table, infinite_cyclic };

  /// Cyclic group of order n, element k standing for the k-th power of a generator.
  static Group cyclic(std::size_t n);
  static Group infinite_cyclic();
  /// Validates closure, identity at index 0, inverses and associativity
  /// (exhaustively). Throws Error(validation) naming the first violation.
  static Group from_table(const std::vector<std::vector<std::size_t>>& table);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite_table; }
  /// Order of a finite group; throws for Z.
  std::size_t order() const;

  Elem identity() const noexcept { return 0; }
  bool is_identity(Elem a) const noexcept { return a == 0; }
  bool contains(Elem a) const noexcept;

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;

  /// Fixed total order on elements: finite by index; integers by absolute
  /// value, negative first on ties.
  bool precedes(Elem a, Elem b) const noexcept;

  /// Non-identity elements of a finite group, in index order.
  std::vector<Elem> nontrivial_elements() const;

  /// "C4", "Z" or "T6" (generic table of order 6).
  std::string describe() const;

  friend bool operator==(const Group& a, const Group& b) noexcept;

 private:
  struct Table {
    std::size_t order = 0;
    std::vector<std::uint32_t> product;  // row-major order x order
    std::vector<std::uint32_t> inverse;
    bool cyclic = false;
  };

  Group(Kind kind, std::shared_ptr<const Table> table) : kind_(kind), table_(std::move(table)) {}
  void check(Elem a) const;

  Kind kind_;
  std::shared_ptr<const Table> table_;
};

/// An arbitrary function between the underlying sets of two groups. No
/// homomorphism property is assumed, and the identity need not be preserved.
class SetMap {
 public:
  /// Explicit images for every element of a finite domain.
  static SetMap table(Group domain, Group codomain, std::vector<Elem> images);
  /// Z -> C_n, z -> z mod n (non-negative residue).
  static SetMap mod_reduction(std::size_t n);
  static SetMap identity(Group g);
  /// second o first. The codomain of `first` must equal the domain of `second`.
  static SetMap compose(const SetMap& first, const SetMap& second);

  const Group& domain() const noexcept;
  const Group& codomain() const noexcept;

  Elem apply(Elem a) const;

  /// Table scan over a finite domain. Identity maps are injective on any
  /// domain; any other map with domain Z throws Error(invalid_argument).
  bool is_injective() const;
  bool is_bijective() const;
  bool preserves_identity() const { return codomain().is_identity(apply(domain().identity())); }

  /// Images of 0..n-1 for a finite domain.
  std::vector<Elem> tabulate() const;

  std::string describe() const;

 private:
  struct Impl;
  explicit SetMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// All functions from a finite `domain` to a finite `codomain`, as table maps,
/// in lexicographic order of their image tables.
std::vector<SetMap> all_set_maps(const Group& domain, const Group& codomain);

}  // namespace gpk
