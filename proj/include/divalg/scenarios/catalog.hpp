#pragma once

// Catalog of projective groups: generator sets in named algebras with
// expected structure annotations, each tagged with its provenance.

#include <optional>
#include <string>
#include <vector>

#include "divalg/csa/catalog.hpp"
#include "divalg/json_util.hpp"
#include "divalg/projective/group.hpp"

namespace divalg::scenarios {

struct GroupSpec {
  std::string algebra;
  // One entry per generator: for each power of z, flat rational K-coordinates.
  std::vector<std::vector<std::vector<Rational>>> generators;
  std::size_t closure_bound = projective::kDefaultClosureBound;
};

struct CatalogEntry {
  std::string id;
  GroupSpec spec;
  Json expected = Json::object();    // key -> integer
  Json provenance = Json::object();  // key -> "[TRIVIAL]" | "[DERIVED: oracle]"

  std::optional<long> expect(const std::string& key) const;
};

/// Parses {algebra_label | algebra, generators, closure_bound?}.  Throws ParseError.
GroupSpec group_spec_from_json(const Json& doc);
GroupSpec load_group_spec(const std::string& path);

/// Elements of the algebra for each generator; throws CatalogError on shape errors.
std::vector<csa::AlgebraElement> generator_elements(const GroupSpec& spec, const csa::AlgebraPtr& algebra);

projective::ProjectiveGroup build_group(const GroupSpec& spec, const csa::AlgebraCatalog& algebras,
                                        std::optional<std::size_t> bound = std::nullopt);

class GroupCatalog {
 public:
  /// Every expectation needs a provenance tag; [DERIVED] tags name an oracle.
  static GroupCatalog from_json(const Json& doc, const csa::AlgebraCatalog& algebras);
  static GroupCatalog load(const std::string& path, const csa::AlgebraCatalog& algebras);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& get(const std::string& id) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace divalg::scenarios
