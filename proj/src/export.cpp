// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace risecov {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    return out;
}

void check(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw std::runtime_error("failed writing output file: " + path.string());
}

}  // namespace

void write_map_csv(const PathlossMap& map, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "x,y,attenuation_db\n";
    char line[128];
    for (std::size_t i = 0; i < map.cells.size(); ++i) {
        const Point2 p = map.cell_center(i);
        if (map.cells[i] && std::isfinite(*map.cells[i])) {
            std::snprintf(line, sizeof line, "%.10g,%.10g,%.6f\n", p.x, p.y, *map.cells[i]);
        } else {
            std::snprintf(line, sizeof line, "%.10g,%.10g,inf\n", p.x, p.y);
        }
        out << line;
    }
    check(out, path);
}

void write_cdf_csv(const CdfCurve& curve, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "attenuation_db,cdf\n";
    char line[80];
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        std::snprintf(line, sizeof line, "%.6f,%.8f\n", curve.values[i],
                      curve.probabilities[i]);
        out << line;
    }
    check(out, path);
}

void write_heatmap_pgm(const PathlossMap& map, const std::filesystem::path& path) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& c : map.cells) {
        if (c && std::isfinite(*c)) {
            lo = std::min(lo, *c);
            hi = std::max(hi, *c);
        }
    }
    std::ofstream out = open_out(path);
    out << "P2\n" << map.nx << ' ' << map.ny << "\n255\n";
    for (std::size_t row = map.ny; row-- > 0;) {
        for (std::size_t ix = 0; ix < map.nx; ++ix) {
            const auto& c = map.cells[row * map.nx + ix];
            int gray = 0;
            if (c && std::isfinite(*c)) {
                gray = (hi > lo)
                           ? 1 + static_cast<int>(std::lround(254.0 * (hi - *c) / (hi - lo)))
                           : 255;
            }
            out << gray << (ix + 1 == map.nx ? '\n' : ' ');
        }
    }
    check(out, path);
}

std::string format_report_table(std::span<const StructureReport> reports,
                                const std::string& mode_label) {
    std::string table = "structure        mode      median_db     p5_db      p95_db   reachable\n";
    char line[160];
    for (const StructureReport& r : reports) {
        std::snprintf(line, sizeof line, "%-16s %-8s %10.3f %10.3f %11.3f %9.4f\n",
                      r.name.c_str(), mode_label.c_str(), r.median_db, r.p5_db, r.p95_db,
                      r.reachable_fraction);
        table += line;
    }
    return table;
}

}  // namespace risecov
