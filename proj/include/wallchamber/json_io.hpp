#pragma once

#include "wallchamber/chambers.hpp"
#include "wallchamber/stability.hpp"

#include "json.hpp"

namespace wallchamber {

using Json = nlohmann::ordered_json;

/// Integer entries are emitted as JSON numbers; anything outside int64
/// throws InternalError rather than losing digits.
Json to_json(std::span<const Integer> v);
Json to_json(const std::vector<IntVec>& rows);
Json to_json(const Cone& c);
Json to_json(const SegmentHit& hit);
Json to_json(const SchurReport& report);
Json to_json(const TfVerdict& verdict);

/// {"chambers": [...], "summary": {...}}.
Json chamber_report_json(const std::vector<Chamber>& chambers);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

} // namespace wallchamber
