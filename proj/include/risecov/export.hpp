// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "risecov/engine.hpp"
#include "risecov/stats.hpp"

namespace risecov {

/// CSV with header "x,y,attenuation_db", one row per grid cell in map
/// order; Unreachable cells carry the sentinel "inf".
void write_map_csv(const PathlossMap& map, const std::filesystem::path& path);

/// CSV with header "attenuation_db,cdf".
void write_cdf_csv(const CdfCurve& curve, const std::filesystem::path& path);

/// Plain (P2) grayscale heatmap. Gray levels map attenuation linearly over
/// [min, max] of the finite cells: 255 = lowest attenuation, 1 = highest,
/// 0 = Unreachable. Image rows run top-down, so the top row is the
/// region's max-y row.
void write_heatmap_pgm(const PathlossMap& map, const std::filesystem::path& path);

/// Fixed-width summary table of per-structure statistics.
std::string format_report_table(std::span<const StructureReport> reports,
                                const std::string& mode_label);

}  // namespace risecov
