#pragma once

#include <map>
#include <string>
#include <vector>

#include "divalg/csa/cyclic_algebra.hpp"
#include "divalg/exact/catalog.hpp"

namespace divalg::csa {

/// Checks Nrd(x) != 0 on `samples` random nonzero elements.
bool nrd_sanity_check(const AlgebraPtr& algebra, int samples, std::uint64_t seed);

/// "certified_external" or "unverified".
std::string division_status(const CyclicAlgebra& algebra);

class AlgebraCatalog {
 public:
  /// Certified entries must pass a 10^3-sample reduced-norm sanity check.
  static AlgebraCatalog from_json(const Json& doc, const exact::FieldCatalog& fields);
  static AlgebraCatalog load(const std::string& path, const exact::FieldCatalog& fields);

  const AlgebraPtr& get(const std::string& label) const;
  std::vector<std::string> labels() const { return order_; }

 private:
  std::map<std::string, AlgebraPtr> algebras_;
  std::vector<std::string> order_;
};

}  // namespace divalg::csa
