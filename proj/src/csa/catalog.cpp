#include "divalg/csa/catalog.hpp"

#include "divalg/error.hpp"

namespace divalg::csa {

bool nrd_sanity_check(const AlgebraPtr& algebra, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    if (reduced_norm(algebra->random_element(rng)).is_zero()) return false;
  }
  return true;
}

std::string division_status(const CyclicAlgebra& algebra) {
  return algebra.division().certified ? "certified_external" : "unverified";
}

AlgebraCatalog AlgebraCatalog::from_json(const Json& doc, const exact::FieldCatalog& fields) {
  const Json& entries = doc.is_object() && doc.contains("algebras") ? doc.at("algebras") : doc;
  if (!entries.is_array()) fail(ErrorCode::CatalogError, "algebra catalog must be an array of entries");
  AlgebraCatalog cat;
  for (const auto& entry : entries) {
    AlgebraSpec spec;
    try {
      spec.label = entry.at("label").get<std::string>();
      spec.base = fields.get(entry.at("base_field").get<std::string>());
      spec.splitting = fields.get(entry.at("splitting_field").get<std::string>());
      spec.sigma_index = entry.at("sigma_index").get<std::size_t>();
      spec.a = spec.base->from_coords(rationals_from_json(entry.at("a")));
      spec.degree = entry.at("degree").get<int>();
      const Json& div = entry.value("division", Json::object());
      spec.division.certified = div.value("certified", false);
      spec.division.citation = div.value("citation", std::string());
    } catch (const Json::exception& e) {
      fail(ErrorCode::CatalogError, std::string("malformed algebra entry: ") + e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CatalogError) throw;
      fail(ErrorCode::CatalogError, spec.label + ": " + e.what());
    }
    if (cat.algebras_.count(spec.label)) fail(ErrorCode::CatalogError, "duplicate algebra label " + spec.label);
    if (spec.division.certified && spec.division.citation.empty()) {
      fail(ErrorCode::CatalogError, spec.label + ": certified division algebra without a citation");
    }
    auto alg = CyclicAlgebra::create(spec);
    if (spec.division.certified && !nrd_sanity_check(alg, 1000, 0x5EED)) {
      fail(ErrorCode::CatalogError, spec.label + ": certified algebra has a nonzero element of reduced norm 0");
    }
    cat.algebras_[spec.label] = alg;
    cat.order_.push_back(spec.label);
  }
  return cat;
}

AlgebraCatalog AlgebraCatalog::load(const std::string& path, const exact::FieldCatalog& fields) {
  return from_json(read_json_file(path), fields);
}

const AlgebraPtr& AlgebraCatalog::get(const std::string& label) const {
  auto it = algebras_.find(label);
  if (it == algebras_.end()) fail(ErrorCode::CatalogError, "unknown algebra " + label);
  return it->second;
}

}  // namespace divalg::csa
