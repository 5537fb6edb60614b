#pragma once

// N_G (elements with a finite-order lift), its lift to A*, the commutator
// pairing on abelian groups and the subfields built from lifts.

#include <map>
#include <optional>
#include <string>

#include "divalg/csa/subfield.hpp"
#include "divalg/groups/abelian.hpp"
#include "divalg/projective/group.hpp"

namespace divalg::projective {

struct NGResult {
  Subgroup members;                   // indices into the group, sorted
  std::map<Elem, FiniteLift> lifts;   // chosen finite-order lift per member
  bool is_subgroup = false;
  bool is_normal = false;
  std::optional<groups::Quotient> quotient;  // present when normal
  bool quotient_abelian = false;
};

/// Decides membership for every element (both criteria, cross-checked).
/// Throws HeuristicInconclusive rather than guessing.
NGResult compute_NG(const ProjectiveGroup& g, std::size_t bound = kDefaultClosureBound);

struct LiftedGroup {
  std::vector<AlgebraElement> elements;  // elements[0] = 1
  FiniteGroupTable table;
  std::vector<long> orders;              // verified by exponentiation
  bool projects_onto = false;            // image is exactly N_G
};

/// Closure in A* of the chosen lifts.  Throws BoundExceeded.
LiftedGroup lift_NG(const ProjectiveGroup& g, const NGResult& ng, std::size_t bound = kDefaultClosureBound);

/// x~ y~ x~^-1 y~^-1 as an element of k.  Throws NotCentral.
FieldElement beta(const ProjectiveUnit& x, const ProjectiveUnit& y);

struct PairedGroup {
  groups::AbelianPairedGroup paired;
  groups::TableDecomposition decomposition;
};

/// Invariant factors of an abelian projective group with the pairing written
/// as exponents of the fixed primitive root of unity of k.
/// Throws NonTorsionPairingValue, InvalidArgument (non-abelian).
PairedGroup paired_group_of(const ProjectiveGroup& g);

struct GammaResult {
  PairedGroup paired;
  Subgroup gamma;       // indices into the group
  csa::Subfield field;  // generated by lifts of gamma
};
GammaResult gamma_of(const ProjectiveGroup& g);

struct InvariantSubfield {
  csa::Subfield field;
  Subgroup generators_from;  // N_G or the chosen index-two cyclic subgroup
  std::string branch;        // "trivial", "cyclic", "odd", "dihedral", "klein"
  std::vector<Elem> acting_trivially;
};

/// Conjugation-stable subfield built from lifts of N_G for a p-group G.
/// Throws StabilityCheckFailed, InvalidArgument (not a p-group).
InvariantSubfield invariant_subfield(const ProjectiveGroup& g, const NGResult& ng);

}  // namespace divalg::projective
