#pragma once

#include <string>

#include "divalg/csa/catalog.hpp"
#include "divalg/exact/catalog.hpp"
#include "divalg/scenarios/catalog.hpp"

namespace testing {

inline const divalg::exact::FieldCatalog& fields() {
  static const auto cat = divalg::exact::FieldCatalog::load(std::string(DIVALG_DATA_DIR) + "/fields.json");
  return cat;
}

inline const divalg::csa::AlgebraCatalog& algebras() {
  static const auto cat = divalg::csa::AlgebraCatalog::load(std::string(DIVALG_DATA_DIR) + "/algebras.json", fields());
  return cat;
}

inline const divalg::scenarios::GroupCatalog& groups() {
  static const auto cat = divalg::scenarios::GroupCatalog::load(std::string(DIVALG_DATA_DIR) + "/catalog.json", algebras());
  return cat;
}

inline divalg::projective::ProjectiveGroup catalog_group(const std::string& id) {
  return divalg::scenarios::build_group(groups().get(id).spec, algebras(), std::nullopt);
}

}  // namespace testing
