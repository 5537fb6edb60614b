#pragma once

#include <map>
#include <string>
#include <vector>

#include "divalg/exact/number_field.hpp"
#include "divalg/json_util.hpp"

namespace divalg::exact {

/// Named catalog fields.  "Q" is always present.
class FieldCatalog {
 public:
  FieldCatalog();

  static FieldCatalog from_json(const Json& doc);
  static FieldCatalog load(const std::string& path);

  const FieldPtr& get(const std::string& label) const;
  bool contains(const std::string& label) const { return fields_.count(label) != 0; }
  std::vector<std::string> labels() const;

 private:
  void add(const Json& entry);
  std::map<std::string, FieldPtr> fields_;
  std::vector<std::string> order_;
};

}  // namespace divalg::exact
