#include "divalg/scenarios/catalog.hpp"

#include <algorithm>
#include <set>

#include "divalg/error.hpp"
#include "divalg/scenarios/oracles.hpp"

namespace divalg::scenarios {

std::optional<long> CatalogEntry::expect(const std::string& key) const {
  if (!expected.contains(key)) return std::nullopt;
  return expected.at(key).get<long>();
}

GroupSpec group_spec_from_json(const Json& doc) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, "group spec must be an object");
  GroupSpec spec;
  if (doc.contains("algebra_label")) {
    spec.algebra = doc.at("algebra_label").get<std::string>();
  } else if (doc.contains("algebra")) {
    spec.algebra = doc.at("algebra").get<std::string>();
  } else {
    fail(ErrorCode::ParseError, "group spec needs algebra_label");
  }
  if (!doc.contains("generators") || !doc.at("generators").is_array()) fail(ErrorCode::ParseError, "group spec needs a generators array");
  for (const auto& g : doc.at("generators")) {
    if (!g.is_array()) fail(ErrorCode::ParseError, "generator must be an array of K-coordinate arrays");
    std::vector<std::vector<Rational>> blocks;
    for (const auto& b : g) blocks.push_back(rationals_from_json(b));
    spec.generators.push_back(std::move(blocks));
  }
  if (doc.contains("closure_bound")) {
    const long b = doc.at("closure_bound").get<long>();
    if (b < 1) fail(ErrorCode::ParseError, "closure_bound must be positive");
    spec.closure_bound = static_cast<std::size_t>(b);
  }
  return spec;
}

GroupSpec load_group_spec(const std::string& path) { return group_spec_from_json(read_json_file(path)); }

std::vector<csa::AlgebraElement> generator_elements(const GroupSpec& spec, const csa::AlgebraPtr& algebra) {
  std::vector<csa::AlgebraElement> out;
  const auto& big = algebra->splitting();
  for (const auto& g : spec.generators) {
    if (static_cast<int>(g.size()) != algebra->degree()) {
      fail(ErrorCode::CatalogError, "generator needs " + std::to_string(algebra->degree()) + " K-coordinate blocks");
    }
    std::vector<exact::FieldElement> coords;
    for (const auto& b : g) {
      if (static_cast<int>(b.size()) != big->absolute_degree()) {
        fail(ErrorCode::CatalogError, "K-coordinates need " + std::to_string(big->absolute_degree()) + " entries");
      }
      coords.push_back(big->from_coords(b));
    }
    out.push_back(algebra->from_coords(std::move(coords)));
  }
  return out;
}

projective::ProjectiveGroup build_group(const GroupSpec& spec, const csa::AlgebraCatalog& algebras,
                                        std::optional<std::size_t> bound) {
  const auto& alg = algebras.get(spec.algebra);
  std::vector<projective::ProjectiveUnit> gens;
  for (const auto& x : generator_elements(spec, alg)) gens.push_back(projective::project(x));
  return projective::closure(gens, alg, bound.value_or(spec.closure_bound));
}

GroupCatalog GroupCatalog::from_json(const Json& doc, const csa::AlgebraCatalog& algebras) {
  const Json& list = doc.is_object() && doc.contains("groups") ? doc.at("groups") : doc;
  if (!list.is_array()) fail(ErrorCode::CatalogError, "group catalog must be an array or {\"groups\": [...]}");
  GroupCatalog cat;
  std::set<std::string> ids;
  for (const auto& e : list) {
    CatalogEntry entry;
    try {
      entry.id = e.at("id").get<std::string>();
      entry.spec = group_spec_from_json(e);
      if (e.contains("expected")) entry.expected = e.at("expected");
      if (e.contains("provenance")) entry.provenance = e.at("provenance");
    } catch (const Json::exception& ex) {
      fail(ErrorCode::CatalogError, std::string("malformed group entry: ") + ex.what());
    } catch (const Error& ex) {
      fail(ErrorCode::CatalogError, ex.what());
    }
    if (!ids.insert(entry.id).second) fail(ErrorCode::CatalogError, "duplicate group id " + entry.id);
    generator_elements(entry.spec, algebras.get(entry.spec.algebra));
    for (const auto& [key, value] : entry.expected.items()) {
      if (!value.is_number_integer()) fail(ErrorCode::CatalogError, entry.id + ": expectation " + key + " must be an integer");
      if (!entry.provenance.contains(key)) fail(ErrorCode::CatalogError, entry.id + ": expectation " + key + " has no provenance tag");
      const auto tag = entry.provenance.at(key).get<std::string>();
      const bool trivial = tag == "[TRIVIAL]";
      const bool derived = tag.rfind("[DERIVED: ", 0) == 0 && tag.size() > 11 && tag.back() == ']';
      if (!trivial && !derived) fail(ErrorCode::CatalogError, entry.id + ": bad provenance tag '" + tag + "'");
      if (derived) {
        const auto name = tag.substr(10, tag.size() - 11);
        const auto& known = oracle_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          fail(ErrorCode::CatalogError, entry.id + ": unknown oracle '" + name + "'");
        }
      }
    }
    cat.entries_.push_back(std::move(entry));
  }
  return cat;
}

GroupCatalog GroupCatalog::load(const std::string& path, const csa::AlgebraCatalog& algebras) {
  return from_json(read_json_file(path), algebras);
}

const CatalogEntry& GroupCatalog::get(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return e;
  }
  fail(ErrorCode::CatalogError, "unknown group " + id);
}

}  // namespace divalg::scenarios
