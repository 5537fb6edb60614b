#include "divalg/exact/catalog.hpp"

#include "divalg/error.hpp"

namespace divalg::exact {

FieldCatalog::FieldCatalog() {
  fields_["Q"] = NumberField::rationals();
  order_.push_back("Q");
}

FieldCatalog FieldCatalog::from_json(const Json& doc) {
  const Json& entries = doc.is_object() && doc.contains("fields") ? doc.at("fields") : doc;
  if (!entries.is_array()) fail(ErrorCode::CatalogError, "field catalog must be an array of entries");
  FieldCatalog cat;
  for (const auto& entry : entries) cat.add(entry);
  return cat;
}

FieldCatalog FieldCatalog::load(const std::string& path) { return from_json(read_json_file(path)); }

void FieldCatalog::add(const Json& entry) {
  try {
    FieldSpec spec;
    spec.label = entry.at("label").get<std::string>();
    if (fields_.count(spec.label)) fail(ErrorCode::CatalogError, "duplicate field label " + spec.label);
    const Json& base = entry.value("base_label", Json());
    if (!base.is_null()) spec.base = get(base.get<std::string>());
    for (const auto& c : entry.at("defining_polynomial")) {
      if (!c.is_number_integer()) fail(ErrorCode::CatalogError, spec.label + ": polynomial coefficients must be integers");
      spec.defining_polynomial.emplace_back(c.dump(), 10);
    }
    for (const auto& image : entry.value("automorphisms", Json::array())) {
      spec.automorphisms.push_back(rationals_from_json(image));
    }
    spec.torsion_order = entry.at("torsion_order").get<int>();
    if (entry.contains("torsion_generator")) spec.torsion_generator = rationals_from_json(entry.at("torsion_generator"));
    fields_[spec.label] = NumberField::create(spec);
    order_.push_back(spec.label);
  } catch (const Json::exception& e) {
    fail(ErrorCode::CatalogError, std::string("malformed field entry: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CatalogError) throw;
    fail(ErrorCode::CatalogError, e.what());
  }
}

const FieldPtr& FieldCatalog::get(const std::string& label) const {
  auto it = fields_.find(label);
  if (it == fields_.end()) fail(ErrorCode::CatalogError, "unknown field " + label);
  return it->second;
}

std::vector<std::string> FieldCatalog::labels() const { return order_; }

}  // namespace divalg::exact
