#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "toroidal/towers.hpp"

namespace toroidal {

/// Version of the tower file and report layouts below.
inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/**
 * Tower files (JSON):
 *
 *     {
 *       "name": "knotted_dyadic_solenoid",
 *       "initial": "torus(2,3)",          knot expression
 *       "initial_genus": 1,               optional
 *       "prefix": [ stage, ... ],         optional, default []
 *       "cycle":  [ stage, ... ]          nonempty
 *     }
 *
 * Stage objects:
 *
 *     "kind":           "core_parallel" | "swallow" | "wind" | "generic"
 *     "w":              winding number (default 1 for core_parallel/swallow)
 *     "knot":           knot expression (swallow only)
 *     "pattern_genus":  integer or null (unknown)
 *     "pattern_delta":  polynomial string or null (unknown)
 *     "declared_genus": integer, optional
 *     "concentric":     boolean
 *
 * Omitted fields take the kind's defaults: core_parallel is w=1, trivial
 * pattern, concentric; swallow takes genus and polynomial from its knot;
 * wind has a trivial pattern; generic leaves the pattern unknown. Unknown
 * keys are rejected. Throws ValidationError (or ParseError for embedded
 * expressions) on malformed input.
 */
Tower tower_from_json(const nlohmann::json& j);
Tower parse_tower_json(std::string_view text);
Tower load_tower_file(const std::filesystem::path& path);

/// Canonical JSON for a tower; tower_from_json(tower_to_json(t)) == t.
nlohmann::json tower_to_json(const Tower& t);

/**
 * Classifier report for a validated tower:
 *
 *     schema_version, tool_version, name, initial,
 *     h1          "trivial" | "Z" | "not_finitely_generated"
 *     steinitz    e.g. "2^inf", "1"; null when h1 is trivial
 *     genus       "3" | "infinite" | ">=2"
 *     genus_reason
 *     unknotted   boolean
 *     alexander   polynomial string, or null with alexander_unavailable
 *     homeo_verdict, flow_verdict, r
 *     rules       { <field>: { "rule": ..., "paper_ref": ... } }
 *     notes       [ ... ]
 *
 * Keys are emitted sorted, so identical towers give identical bytes.
 * Throws TowerValidationError for invalid towers.
 */
nlohmann::json tower_report(const Tower& t);

/// Human-readable rendering of tower_report().
std::string render_report_text(const nlohmann::json& report);

}  // namespace toroidal
