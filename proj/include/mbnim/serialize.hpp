#pragma once

#include <string>

#include <json.hpp>

#include "mbnim/game_oracle.hpp"
#include "mbnim/minimal_audit.hpp"

namespace mbnim {

/// "x0,x1,..." -> Position (empty string -> length-0 position).
Position parse_position(const std::string& text);

/// "b0,b1,..." -> Box of exclusive bounds.
Box parse_box(const std::string& text);

/// "ord|nmin|max|wt1|explicit@FILE" with optional "+{(..),(..)}" and
/// "-{(..)}" adjustments. Explicit files are JSON arrays of coordinate arrays.
MoveSystem parse_system(const std::string& text);

nlohmann::json sg_table_to_json(const MixedBase& base, const SGTable& table);

/// TSV matrix, rows indexed by coordinate 0; m = 2 only.
std::string sg_table_to_tsv(const SGTable& table);

nlohmann::json verify_report_to_json(const VerifyReport& report);
nlohmann::json audit_report_to_json(const AuditReport& report);
nlohmann::json nj_info_to_json(const NjInfo& info);

}  // namespace mbnim
