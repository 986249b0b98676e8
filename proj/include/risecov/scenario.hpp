// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "risecov/engine.hpp"
#include "risecov/scene.hpp"

namespace risecov {

/// File-level mirror of DeeConfig; angles in degrees, as in the file.
/// effective_gain_m2 defaults to DeeConfig::default_effective_gain of the
/// given efficiency when omitted.
struct DeeSpec {
    std::optional<double> effective_gain_m2;
    double boresight_azimuth_deg = 0.0;
    double pattern_p = 2.0;
    double pattern_q = 3.0;
    double radiation_efficiency = 0.62;
    bool operator==(const DeeSpec&) const = default;
};

struct StructureSpec {
    std::string name;
    StructureKind kind = StructureKind::SurfaceReflective;
    Point2 position;
    double normal_azimuth_deg = 0.0;
    std::optional<PanelConfig> panel;  // surface_reflective / edge_transmissive
    std::optional<DeeSpec> dee;        // edge_dee
    bool operator==(const StructureSpec&) const = default;
};

struct RegionSpec {
    Point2 min;
    Point2 max;
    double resolution_m = 1.0;
    bool operator==(const RegionSpec&) const = default;
};

struct ScenarioOptions {
    BeamModeKind mode = BeamModeKind::Dynamic;
    FixedBeamStrategy beam_strategy = FixedBeamStrategy::Centroid;
    bool shadow_only = false;
    bool operator==(const ScenarioOptions&) const = default;
};

/// Parsed scenario file. Angles are kept in degrees so that
/// parse -> serialize round-trips bit-exactly; build_scene converts.
struct ScenarioFile {
    int schema_version = 1;
    std::string description;
    double carrier_frequency_hz = 5.5e9;
    Point2 bs_position;
    double bs_gain_dbi = 0.0;
    double ue_gain_dbi = 0.0;
    std::vector<std::vector<Point2>> buildings;
    std::vector<StructureSpec> structures;
    RegionSpec region;
    ScenarioOptions options;
    bool operator==(const ScenarioFile&) const = default;
};

/// Parse and validate the JSON shape of a scenario. Errors carry the
/// offending field path.
ScenarioFile parse_scenario(const nlohmann::json& j);

/// Load a scenario file from disk. Errors carry the file name.
ScenarioFile load_scenario_file(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ScenarioFile& file);

void save_scenario(const ScenarioFile& file, const std::filesystem::path& path);

/// Build and fully validate the Scene; domain-invariant violations throw
/// with field-path diagnostics.
Scene build_scene(const ScenarioFile& file);

/// Convenience: load + build.
struct LoadedScenario {
    ScenarioFile file;
    Scene scene;
};
LoadedScenario load_scenario(const std::filesystem::path& path);

/// Bundled blockage layouts: a region behind a building corner with the
/// surface panel on a facing wall 30 m or 50 m away, and a region obscured
/// directly behind a wall.
enum class CanonicalSceneId { ACorner30m, ACorner50m, BWall };

std::optional<CanonicalSceneId> canonical_scene_from_name(const std::string& name);
std::string canonical_scene_name(CanonicalSceneId id);

ScenarioFile generate_canonical(CanonicalSceneId id);

}  // namespace risecov
