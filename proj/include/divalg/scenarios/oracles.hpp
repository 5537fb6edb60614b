#pragma once

// Brute-force routines used as independent oracles for catalog expectations
// and the verification suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "divalg/csa/cyclic_algebra.hpp"
#include "divalg/groups/abelian.hpp"
#include "divalg/projective/group.hpp"

namespace divalg::scenarios {

/// Names accepted in "[DERIVED: name]" provenance tags.
const std::vector<std::string>& oracle_names();

/// Order of the group generated by gens, modulo k* when `projective`.
/// Multiplies all known pairs until nothing new appears; classes are compared
/// by k-linear dependence instead of normalization.
std::size_t brute_force_closure(const std::vector<csa::AlgebraElement>& gens, bool projective, std::size_t bound);

/// Number of elements passing the reduced-norm criterion alone.
std::size_t norm_route_membership(const projective::ProjectiveGroup& g);

/// Largest subgroup of an abelian projective group (order <= 64) whose lifts commute.
std::size_t max_isotropic_scan(const projective::ProjectiveGroup& g);

/// k-dimension of the algebra spanned by products of the given commuting elements.
int span_rank(const std::vector<csa::AlgebraElement>& elems, const csa::AlgebraPtr& algebra);

/// Subgroups of Z/d_1 x ... x Z/d_r (order <= 64) as bitmasks over elements().
struct SubgroupLattice {
  std::vector<groups::Coords> elems;
  std::vector<std::uint64_t> subgroups;
};
SubgroupLattice all_subgroups(const std::vector<std::int64_t>& factors);

/// Order of the largest isotropic subgroup, pairing evaluated from scratch.
std::size_t max_isotropic_order(const groups::AbelianPairedGroup& a, const SubgroupLattice& lattice);

/// Every multiplier r (gcd(r, n) = 1, r^p = 1 mod n) whose product Z/n x|_r Z/p
/// has trivial center, found by scanning commutation with both generators.
std::vector<std::uint64_t> multiplier_scan(std::uint64_t n, std::uint64_t p);
/// Orbits of the given multipliers under r -> r^j, j = 1..p-1.  Replacing the
/// generator of Z/p by its j-th power turns the product for r into the one for
/// r^j, so this counts realizations up to that relabelling.
std::size_t multiplier_orbit_count(const std::vector<std::uint64_t>& multipliers, std::uint64_t n, std::uint64_t p);

/// Alternating pairings on the factors: all of them when there are at most
/// `cap`, otherwise `cap` seeded samples.
std::vector<groups::AbelianPairedGroup> enumerate_pairings(const std::vector<std::int64_t>& factors, std::size_t cap,
                                                           std::uint64_t seed);

/// Invariant-factor chains (entries >= 2) with product <= limit.
std::vector<std::vector<std::int64_t>> invariant_factor_chains(std::int64_t limit);

}  // namespace divalg::scenarios
