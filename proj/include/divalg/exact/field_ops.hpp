#pragma once

// Traces, norms, minimal polynomials, roots of unity and power tests.

#include <optional>
#include <vector>

#include "divalg/exact/number_field.hpp"

namespace divalg::exact {

/// Monic minimal polynomial of x over an ancestor field, constant term first.
std::vector<FieldElement> minimal_polynomial(const FieldElement& x, const FieldPtr& over);

/// Trace of multiplication by x, as an over-linear map.
FieldElement trace(const FieldElement& x, const FieldPtr& over);

/// Absolute norm N_{F/Q}(x).
Rational absolute_norm(const FieldElement& x);

/// Exact multiplicative order when x is a root of unity.  Throws ZeroInput on 0.
std::optional<int> is_root_of_unity(const FieldElement& x);

/// True where power_test decides absence exactly (Q, Q(i), Q(w)).
bool power_test_is_exact(const NumberField& field);

struct PowerRoot {
  FieldElement c;
  FieldElement unit;  // a / c^alpha
  int unit_order = 1;
};

/// Finds c with a = c^alpha * (root of unity).  Absence is definite over the
/// exact fields and whenever a norm or modular obstruction applies; otherwise a
/// failed bounded search throws HeuristicInconclusive.
std::optional<PowerRoot> power_test(const FieldElement& a, int alpha);

}  // namespace divalg::exact
