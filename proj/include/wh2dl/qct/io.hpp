#pragma once

#include <string>

#include "json.hpp"
#include "wh2dl/qct/qct.hpp"

namespace wh2dl::qct {

nlohmann::json to_json(const QCT& q);
std::string render_json(const QCT& q, int indent = -1);

// Every field present in `gold` must be present and equal in `actual`;
// arrays must match element-wise and in length.
bool matches_gold(const nlohmann::json& actual, const nlohmann::json& gold);

}  // namespace wh2dl::qct
