// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/scene.hpp"

#include <stdexcept>

namespace risecov {

bool los_blocked(const Scene& scene, Point2 a, Point2 b) {
    return los_blocked(a, b, scene.buildings);
}

std::vector<std::size_t> host_buildings(const Scene& scene, Point2 position) {
    std::vector<std::size_t> hosts;
    for (std::size_t i = 0; i < scene.buildings.size(); ++i) {
        if (scene.buildings[i].on_boundary(position)) hosts.push_back(i);
    }
    return hosts;
}

LinkGeometry link_geometry(const Scene& scene, const StructurePose& pose, Point2 user) {
    const double d1 = distance(scene.bs_position, pose.position);
    const double d2 = distance(pose.position, user);
    if (d1 == 0.0 || d2 == 0.0 || scene.bs_position == user)
        throw std::invalid_argument("link_geometry: BS, structure and user must be distinct");

    const std::vector<std::size_t> hosts = host_buildings(scene, pose.position);
    LinkGeometry link;
    link.d1 = d1;
    link.d2 = d2;
    link.incident = local_angles(pose, scene.bs_position);
    link.scattered = local_angles(pose, user);
    link.bs_visible = !los_blocked(scene.bs_position, pose.position, scene.buildings, hosts);
    link.user_visible = !los_blocked(pose.position, user, scene.buildings, hosts);
    return link;
}

void validate_scene(const Scene& scene) {
    if (!(scene.carrier.frequency_hz > 0.0) || !(scene.carrier.wavelength_m > 0.0))
        throw std::invalid_argument("scene carrier is not initialized");
    if (!(scene.gains.g_t >= 0.0) || !(scene.gains.g_r >= 0.0))
        throw std::invalid_argument("antenna gains must be nonnegative");
    grid_size(scene.region);  // throws on a bad region
    for (const auto& [name, st] : scene.structures) {
        const std::string path = "structures[" + name + "]";
        if (!std::isfinite(st.pose.position.x) || !std::isfinite(st.pose.position.y))
            throw std::invalid_argument(path + ".position: must be finite");
        for (const Building& b : scene.buildings) {
            if (b.contains_strictly(st.pose.position))
                throw std::invalid_argument(path +
                                            ".position: lies strictly inside a building");
        }
        const bool is_dee = std::holds_alternative<DeeConfig>(st.config);
        if (is_dee != (st.pose.kind == StructureKind::EdgeDee))
            throw std::invalid_argument(path + ": structure kind does not match its config");
        if (const auto* panel = std::get_if<PanelConfig>(&st.config)) {
            panel->validate(path + ".panel");
        } else {
            std::get<DeeConfig>(st.config).validate(path + ".dee");
        }
    }
}

}  // namespace risecov
