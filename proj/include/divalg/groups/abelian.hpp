#pragma once

// Finite abelian groups Z/d_1 x ... x Z/d_r (d_1 | d_2 | ...) with
// alternating pairings valued in Q/Z, and the isotropic subgroup extraction.

#include <cstdint>
#include <map>
#include <vector>

#include "divalg/groups/table.hpp"
#include "divalg/rational.hpp"

namespace divalg::groups {

using Coords = std::vector<std::int64_t>;

struct AbelianPairedGroup {
  std::vector<std::int64_t> invariant_factors;
  std::vector<std::vector<Rational>> pairing;  // values of the basis pairs, in [0, 1)

  /// Divisibility chain, values in [0, 1), alternating and torsion-compatible.
  /// Throws InvalidArgument.
  void validate() const;
  std::int64_t order() const;
  Coords reduce(Coords v) const;
  /// Z-bilinear extension, reduced into [0, 1).
  Rational pair(const Coords& v, const Coords& w) const;
  std::int64_t element_order(const Coords& v) const;
  std::int64_t exponent() const;
  std::vector<Coords> elements() const;
};

/// Independent generators h_i with orders factors[i] (divisibility chain, no 1s).
struct DirectDecomposition {
  std::vector<std::int64_t> factors;
  std::vector<Coords> basis;
};

/// Smith-form basis of the subgroup of Z/d_1 x ... x Z/d_r generated by gens.
DirectDecomposition subgroup_decomposition(const std::vector<std::int64_t>& factors,
                                           const std::vector<Coords>& gens);

/// Complement of <x> for x of maximal order.  Throws NotMaximalOrder.
DirectDecomposition complement_of_cyclic(const std::vector<std::int64_t>& factors, const Coords& x);

/// Generators of an isotropic subgroup Gamma with |A| dividing |Gamma|^2.
std::vector<Coords> gamma_subgroup(const AbelianPairedGroup& a);

/// Invariant-factor form of an abelian table group.
struct TableDecomposition {
  std::vector<std::int64_t> factors;
  std::vector<Elem> basis;           // basis[i] has order factors[i]
  std::vector<Coords> coords;        // element -> coordinates
  std::map<Coords, Elem> element_of;
};

/// Throws InvalidArgument when g is not abelian.
TableDecomposition abelian_decomposition(const FiniteGroupTable& g);

/// Elements of the subgroup generated by gens, sorted.
std::vector<Coords> span(const std::vector<std::int64_t>& factors, const std::vector<Coords>& gens);

}  // namespace divalg::groups
