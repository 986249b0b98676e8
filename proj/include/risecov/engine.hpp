// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "risecov/scene.hpp"

namespace risecov {

enum class BeamModeKind { Dynamic, Fixed };

/// Beam operation: Dynamic re-aims the panel at every user; Fixed keeps one
/// stored beam. DEE structures have no phase control and ignore the mode.
struct BeamMode {
    BeamModeKind kind = BeamModeKind::Dynamic;
    BeamSpec beam;

    static BeamMode dynamic() { return {}; }
    static BeamMode fixed(BeamSpec b) { return {BeamModeKind::Fixed, b}; }
};

enum class FixedBeamStrategy { Centroid, GridSearchMedian };

struct EvalOptions {
    bool shadow_only = false;  ///< mark cells with an unblocked direct path Unreachable
    unsigned threads = 1;      ///< worker threads; results are identical for any count
};

/// Attenuation map over the scene region. A disengaged cell is Unreachable.
/// Cells are row-major in grid_points order.
struct PathlossMap {
    GridRegion region;
    std::size_t nx = 0;
    std::size_t ny = 0;
    std::vector<std::optional<double>> cells;

    Point2 cell_center(std::size_t index) const {
        return {region.min.x + (static_cast<double>(index % nx) + 0.5) * region.resolution,
                region.min.y + (static_cast<double>(index / nx) + 0.5) * region.resolution};
    }
};

/// Per-structure aggregate over one region evaluation.
struct StructureReport {
    std::string name;
    double median_db = 0.0;
    double p5_db = 0.0;
    double p95_db = 0.0;
    double reachable_fraction = 0.0;
};

/// True iff the direct BS -> user path is obstructed (the user sits in a
/// shadow region).
bool direct_path_blocked(const Scene& scene, Point2 user);

/// Attenuation in dB of the structure-assisted link at one user position,
/// or nullopt when the link is unreachable (blocked sub-link or geometry
/// behind the aperture). Throws on an unknown structure name.
std::optional<double> evaluate_point(const Scene& scene, const std::string& structure,
                                     Point2 user, const BeamMode& mode);

/// evaluate_point over every region grid cell. Deterministic: bit-identical
/// across runs and thread counts.
PathlossMap evaluate_region(const Scene& scene, const std::string& structure,
                            const BeamMode& mode, const EvalOptions& options = {});

/// Pick a fixed beam for a structure. Centroid aims at the centroid of the
/// reachable cells; GridSearchMedian sweeps the desired direction over a
/// 1-degree grid in the front half-space and keeps the direction with the
/// lowest median attenuation (ties toward the smaller angle). Throws when
/// no cell is reachable.
BeamSpec select_fixed_beam(const Scene& scene, const std::string& structure,
                           FixedBeamStrategy strategy);

/// Evaluate several structures over the same grid and aggregate. Fixed mode
/// selects each structure's beam with the given strategy.
std::vector<StructureReport> compare_structures(const Scene& scene,
                                                std::span<const std::string> structures,
                                                BeamModeKind mode,
                                                FixedBeamStrategy strategy =
                                                    FixedBeamStrategy::Centroid,
                                                const EvalOptions& options = {});

}  // namespace risecov
