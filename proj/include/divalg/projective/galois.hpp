#pragma once

// Finite subgroups of L*/k* for a catalog extension L/k: the finite-lift
// subgroup B, the subfield it generates and the degree divisibility.

#include <vector>

#include "divalg/exact/number_field.hpp"

namespace divalg::projective {

struct GaloisReport {
  std::vector<exact::FieldElement> elements;  // normalized representatives of A
  std::vector<std::size_t> b_members;         // indices of B
  int degree_L_over_k = 1;
  int degree_K_over_k = 1;
  bool b_is_subgroup = false;
  bool divides = false;          // |A/B| divides [L:K]
  bool traces_checked = false;   // B trivial
  bool traces_vanish = true;     // tr_{L/k} = 0 off the identity
};

/// Throws HeuristicInconclusive, BoundExceeded.
GaloisReport verify_galois(const std::vector<exact::FieldElement>& gens, const exact::FieldPtr& k,
                           std::size_t bound = 10000);

}  // namespace divalg::projective
