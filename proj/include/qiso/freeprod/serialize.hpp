#pragma once

#include <json.hpp>

#include "qiso/freeprod/group_algebra.hpp"

namespace qiso::freeprod {

/// `[{"word": "r0^1*y", "re": 0.5, "im": 0.0}, ...]` in word order.
nlohmann::json to_json(const GroupAlgebraElement& a);
/// Throws ParseError on malformed entries.
GroupAlgebraElement element_from_json(const nlohmann::json& j);

}  // namespace qiso::freeprod
