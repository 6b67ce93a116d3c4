#ifndef CHAINISOM_SERIALIZE_HPP
#define CHAINISOM_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "chainisom/partial_injection.hpp"

namespace chainisom {

  // {"n": 3, "map": [[1,2],[2,3]]}
  nlohmann::json   to_json(PartialInjection const& a);
  PartialInjection from_json(nlohmann::json const& j);

  // One compact JSON object, no trailing newline.
  std::string to_json_line(PartialInjection const& a);

  // Matrix notation "(1 2 / 2 3)"; the empty map is "( / )".
  std::string to_matrix(PartialInjection const& a);

  // Parses matrix notation for a map on X_n. Throws Error(parse_error) on
  // malformed input and the make() errors on invalid maps.
  PartialInjection from_matrix(int n, std::string_view text);

}  // namespace chainisom

#endif
