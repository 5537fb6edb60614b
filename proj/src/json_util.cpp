#include "divalg/json_util.hpp"

#include <fstream>
#include <sstream>

#include "divalg/error.hpp"

namespace divalg {

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(Integer(value.dump(), 10));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  fail(ErrorCode::ParseError, "expected an integer or rational string, got " + value.dump());
}

std::vector<Rational> rationals_from_json(const Json& value) {
  if (!value.is_array()) fail(ErrorCode::ParseError, "expected an array of rationals, got " + value.dump());
  std::vector<Rational> out;
  for (const auto& v : value) out.push_back(rational_from_json(v));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& q : values) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
      out.push_back(q.get_num().get_si());
    } else {
      out.push_back(q.get_str());
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace divalg
