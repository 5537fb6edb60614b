#pragma once

#include <vector>

#include "divalg/csa/cyclic_algebra.hpp"

namespace divalg::csa {

/// A commutative subalgebra given by a basis over the base field k.
struct Subfield {
  std::vector<AlgebraElement> basis;
  int degree = 0;
};

/// The k-algebra generated by gens.  Throws NonCommutative or DegreeOverflow.
Subfield generated_subfield(const std::vector<AlgebraElement>& gens, const AlgebraPtr& algebra);

/// Whether x lies in the k-span of the subfield basis.
bool contains(const Subfield& field, const AlgebraElement& x);

}  // namespace divalg::csa
