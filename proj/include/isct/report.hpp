#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "isct/invariants.hpp"
#include "isct/zigzag.hpp"

namespace isct {

// ordered_json keeps insertion order, so serialization is byte-stable
// across runs; all rationals are emitted as "p/q" strings.
using Json = nlohmann::ordered_json;

Json family_json(const HypersurfaceFamily& family);
Json monodromy_json(const MonodromyData& md);
Json zigzag_json(const ZigZag& z);
Json report_json(const InvariantReport& report);

// Report plus a "zigzags" section holding the named objects.
Json report_with_zigzags_json(const HypersurfaceFamily& family,
                              const MonodromyData& md,
                              const std::map<std::string, ZigZag>& zigzags);

std::string render_report_text(const InvariantReport& report);
std::string render_zigzag_text(const std::string& name, const ZigZag& z);

}  // namespace isct
