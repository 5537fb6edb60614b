#pragma once

#include <vector>

#include "divalg/csa/cyclic_algebra.hpp"
#include "divalg/groups/table.hpp"

namespace divalg::groups {

struct BinaryIcosahedral {
  std::vector<csa::AlgebraElement> elements;  // elements[0] = 1
  FiniteGroupTable table;
};

/// The 120 unit quaternions of the binary icosahedral group inside the
/// quaternion algebra (-1,-1) over Q(sqrt5), given as the cyclic algebra
/// (Q(sqrt5,i)/Q(sqrt5), conjugation, -1).  Closure is checked while the
/// table is built.
BinaryIcosahedral binary_icosahedral(const csa::AlgebraPtr& quaternions);

/// Element order histogram of A5.
std::map<int, int> a5_histogram();

}  // namespace divalg::groups
