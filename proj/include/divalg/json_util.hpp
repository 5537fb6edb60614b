#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "divalg/rational.hpp"

namespace divalg {

using Json = nlohmann::ordered_json;

/// Accepts integers and strings such as "-3/4".
Rational rational_from_json(const Json& value);
std::vector<Rational> rationals_from_json(const Json& value);
Json rationals_to_json(const std::vector<Rational>& values);

Json read_json_file(const std::string& path);

}  // namespace divalg
