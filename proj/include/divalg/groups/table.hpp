#pragma once

// Finite groups given by an explicit multiplication table.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divalg/json_util.hpp"

namespace divalg::groups {

using Elem = std::uint32_t;
/// Sorted list of element indices.
using Subgroup = std::vector<Elem>;

class FiniteGroupTable {
 public:
  /// Validates the Latin property, identity and associativity (exhaustive up to
  /// order 256, 10^4 seeded random triples above).  Throws InvalidArgument.
  FiniteGroupTable(std::size_t order, std::vector<Elem> table, std::uint64_t seed = 0x5EED);
  static FiniteGroupTable from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem identity() const { return identity_; }
  Elem inverse(Elem a) const { return inverse_[a]; }
  Elem power(Elem a, long long e) const;
  int element_order(Elem a) const { return orders_[a]; }
  const std::vector<Elem>& data() const { return table_; }
  bool is_abelian() const;

  Subgroup generated(const std::vector<Elem>& gens) const;

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<int> orders_;
};

Subgroup center(const FiniteGroupTable& g);
bool is_subgroup(const FiniteGroupTable& g, const Subgroup& h);
bool is_normal(const FiniteGroupTable& g, const Subgroup& h);

struct Quotient {
  FiniteGroupTable table;
  std::vector<Elem> coset_of;  // element -> coset index
};
/// Cosets are numbered by their smallest element.  Throws NotNormal.
Quotient quotient_by(const FiniteGroupTable& g, const Subgroup& n);

/// element order -> count
std::map<int, int> order_histogram(const FiniteGroupTable& g);

struct StructureTag {
  enum class Kind { Cyclic, Dihedral, GeneralizedQuaternion, ElementaryAbelian, Other };
  Kind kind = Kind::Other;
  int order = 0;
  int prime = 0;  // elementary abelian only
  int rank = 0;   // elementary abelian only
  std::string to_string() const;
  friend bool operator==(const StructureTag& a, const StructureTag& b) {
    return a.kind == b.kind && a.order == b.order && a.prime == b.prime && a.rank == b.rank;
  }
};

/// Presentation matching in the order cyclic, dihedral (by order, 4 = Klein),
/// generalized quaternion (2-power order >= 8), elementary abelian.
StructureTag recognize(const FiniteGroupTable& g);

std::optional<Subgroup> has_normal_cyclic(const FiniteGroupTable& g);
/// No normal subgroups besides 1 and G (normal closure of every element is G).
bool is_simple(const FiniteGroupTable& g);

/// Restriction of the table to a subgroup, relabelled by position in h.
FiniteGroupTable subgroup_table(const FiniteGroupTable& g, const Subgroup& h);

FiniteGroupTable cyclic_group(std::size_t n);
FiniteGroupTable dihedral_group(std::size_t order);
FiniteGroupTable generalized_quaternion_group(std::size_t order);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

Json group_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_from_json(const Json& doc);

}  // namespace divalg::groups
