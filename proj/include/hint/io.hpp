#pragma once

// JSON descriptions of spaces, sets, functions and deficiency scenarios,
// plus JSON renderings of certificates and law reports. Every rational is a
// string "p/q" (plain integers are also accepted); structural errors throw
// ParseError naming the JSON path, syntax errors carry the byte offset.

#include <string>
#include <string_view>

#include "json.hpp"

#include "hint/deficiency.hpp"
#include "hint/function.hpp"
#include "hint/integral.hpp"
#include "hint/oracle.hpp"
#include "hint/space.hpp"

namespace hint {

using Json = nlohmann::ordered_json;

Json parse_json_text(std::string_view text);
Json load_json_file(const std::string& path);

MeasureSpace parse_space(const Json& j);
MeasurableSet parse_set(const Json& j, const std::string& path = "set");
Expr parse_expr(const Json& j, const std::string& path = "expr");
HFunction parse_function(const Json& j);

ClusterScenario parse_continuity(const Json& j);
LinenessScenario parse_lineness(const Json& j);
ConvexityScenario parse_convexity(const Json& j);

Json to_json(const MeasurableSet& s);
Json to_json(const T4Certificate& c);
Json to_json(const LawReport& r);
Json to_json(const Line2& l);

}  // namespace hint
