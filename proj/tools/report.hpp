#pragma once

#include <string>

#include <json.hpp>

#include "skewext/corollaries.hpp"

namespace skewext::cli {

using nlohmann::json;

std::string dims_text(const BigradedAlgebra& E);
std::string products_text(const BigradedAlgebra& E);
json dims_json(const BigradedAlgebra& E);
json products_json(const BigradedAlgebra& E);

json map_json(const BigradedMap& m);
std::string map_text(const BigradedMap& m, const std::string& name);
json twist_json(const SmashTwist& T);
std::string twist_text(const SmashTwist& T);

json checks_json(const std::vector<CheckResult>& checks);
std::string checks_text(const std::vector<CheckResult>& checks);

}  // namespace skewext::cli
