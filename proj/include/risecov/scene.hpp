// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "risecov/dee.hpp"
#include "risecov/geometry.hpp"
#include "risecov/panel.hpp"

namespace risecov {

/// A deployed EM-manipulation structure: pose plus its model parameters.
/// PanelConfig goes with SurfaceReflective/EdgeTransmissive poses, DeeConfig
/// with EdgeDee.
struct Structure {
    StructurePose pose;
    std::variant<PanelConfig, DeeConfig> config;
    bool operator==(const Structure&) const = default;
};

/// Full 2D world model: obstacles, BS, deployed structures, link budget
/// inputs, and the UE sampling region.
struct Scene {
    std::vector<Building> buildings;
    Point2 bs_position;
    Carrier carrier;
    AntennaGains gains;
    std::map<std::string, Structure> structures;
    GridRegion region;
    bool operator==(const Scene&) const = default;
};

/// Scene-wide occlusion test over all buildings.
bool los_blocked(const Scene& scene, Point2 a, Point2 b);

/// Indices of the buildings whose boundary carries this position (the
/// structure's mounting hosts). A host does not occlude its own structure.
std::vector<std::size_t> host_buildings(const Scene& scene, Point2 position);

/// Propagation geometry of the BS -> structure -> user link: distances,
/// local angles against the pose normal, and per-sub-link visibility.
/// Buildings hosting the structure are excluded from its visibility tests.
/// Throws std::invalid_argument on coincident points.
LinkGeometry link_geometry(const Scene& scene, const StructurePose& pose, Point2 user);

/// Checks scene invariants; throws std::invalid_argument on violation.
void validate_scene(const Scene& scene);

}  // namespace risecov
