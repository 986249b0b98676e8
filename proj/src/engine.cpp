// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

#include "risecov/stats.hpp"

namespace risecov {

namespace {

const Structure& find_structure(const Scene& scene, const std::string& name) {
    const auto it = scene.structures.find(name);
    if (it == scene.structures.end())
        throw std::invalid_argument("unknown structure: " + name);
    return it->second;
}

// Link geometry with the structure-kind frame conventions applied: a
// transmissive panel takes its incident angles against the back normal.
LinkGeometry structure_link(const Scene& scene, const Structure& st, Point2 user) {
    LinkGeometry link = link_geometry(scene, st.pose, user);
    if (st.pose.kind == StructureKind::EdgeTransmissive) {
        StructurePose back = st.pose;
        back.normal_azimuth = mod_two_pi(st.pose.normal_azimuth + kPi);
        link.incident = local_angles(back, scene.bs_position);
    }
    return link;
}

std::optional<double> eval_cell(const Scene& scene, const Structure& st, Point2 user,
                                const BeamMode& mode) {
    const LinkGeometry link = structure_link(scene, st, user);
    std::optional<double> pl;
    if (const auto* panel = std::get_if<PanelConfig>(&st.config)) {
        const BeamSpec beam =
            mode.kind == BeamModeKind::Dynamic ? BeamSpec{link.scattered} : mode.beam;
        pl = path_gain(*panel, scene.gains, scene.carrier, link, beam);
    } else {
        const auto& dee = std::get<DeeConfig>(st.config);
        const double off =
            std::abs(wrap_pi(azimuth(user - st.pose.position) - dee.boresight_azimuth));
        pl = dee_path_gain(dee, scene.gains, scene.carrier, link, off);
    }
    if (!pl) return std::nullopt;
    return to_attenuation_db(*pl);
}

}  // namespace

bool direct_path_blocked(const Scene& scene, Point2 user) {
    if (user == scene.bs_position) return false;
    return los_blocked(scene, scene.bs_position, user);
}

std::optional<double> evaluate_point(const Scene& scene, const std::string& structure,
                                     Point2 user, const BeamMode& mode) {
    return eval_cell(scene, find_structure(scene, structure), user, mode);
}

PathlossMap evaluate_region(const Scene& scene, const std::string& structure,
                            const BeamMode& mode, const EvalOptions& options) {
    const Structure& st = find_structure(scene, structure);
    const auto [nx, ny] = grid_size(scene.region);
    PathlossMap map{scene.region, nx, ny, std::vector<std::optional<double>>(nx * ny)};
    const std::vector<Point2> pts = grid_points(scene.region);

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (options.shadow_only && !direct_path_blocked(scene, pts[i])) continue;
            map.cells[i] = eval_cell(scene, st, pts[i], mode);
        }
    };

    const std::size_t n = pts.size();
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || n < 2) {
        worker(0, n);
        return map;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    worker(n * t / threads, n * (t + 1) / threads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return map;
}

BeamSpec select_fixed_beam(const Scene& scene, const std::string& structure,
                           FixedBeamStrategy strategy) {
    const Structure& st = find_structure(scene, structure);
    const std::vector<Point2> pts = grid_points(scene.region);

    // reachability is mode-independent
    std::vector<Point2> reachable;
    std::vector<LinkGeometry> links;
    for (const Point2& p : pts) {
        if (p == st.pose.position) continue;
        if (eval_cell(scene, st, p, BeamMode::dynamic())) {
            reachable.push_back(p);
            links.push_back(structure_link(scene, st, p));
        }
    }
    if (reachable.empty())
        throw std::runtime_error("select_fixed_beam: no reachable cells in the region");

    if (strategy == FixedBeamStrategy::Centroid) {
        Point2 centroid{0.0, 0.0};
        for (const Point2& p : reachable) centroid = centroid + p;
        centroid = centroid * (1.0 / static_cast<double>(reachable.size()));
        if (centroid == st.pose.position) return BeamSpec{};
        return BeamSpec{local_angles(st.pose, centroid)};
    }

    // GridSearchMedian over the front half-space, 1-degree steps on both
    // in-plane sides; first strictly better candidate wins, so ties resolve
    // toward the smaller angle (and the phi = 0 side).
    const auto* panel = std::get_if<PanelConfig>(&st.config);
    BeamSpec best;
    double best_median = std::numeric_limits<double>::infinity();
    std::vector<double> values;
    values.reserve(reachable.size());
    for (int deg = 0; deg < 90; ++deg) {
        for (const double phi : {0.0, kPi}) {
            if (deg == 0 && phi == kPi) continue;  // same direction as (0, 0)
            const BeamSpec cand{{deg * kPi / 180.0, phi}};
            values.clear();
            for (std::size_t i = 0; i < reachable.size(); ++i) {
                std::optional<double> pl;
                if (panel) {
                    pl = path_gain(*panel, scene.gains, scene.carrier, links[i], cand);
                } else {
                    const auto& dee = std::get<DeeConfig>(st.config);
                    const double off = std::abs(wrap_pi(
                        azimuth(reachable[i] - st.pose.position) - dee.boresight_azimuth));
                    pl = dee_path_gain(dee, scene.gains, scene.carrier, links[i], off);
                }
                if (pl) values.push_back(to_attenuation_db(*pl));
            }
            if (values.empty()) continue;
            const double med = percentile(cdf(values), 0.5);
            if (med < best_median) {
                best_median = med;
                best = cand;
            }
        }
    }
    return best;
}

std::vector<StructureReport> compare_structures(const Scene& scene,
                                                std::span<const std::string> structures,
                                                BeamModeKind mode, FixedBeamStrategy strategy,
                                                const EvalOptions& options) {
    if (structures.empty())
        throw std::invalid_argument("compare_structures: need at least one structure");
    std::vector<StructureReport> reports;
    reports.reserve(structures.size());
    for (const std::string& name : structures) {
        BeamMode beam_mode = BeamMode::dynamic();
        if (mode == BeamModeKind::Fixed)
            beam_mode = BeamMode::fixed(select_fixed_beam(scene, name, strategy));
        const PathlossMap map = evaluate_region(scene, name, beam_mode, options);
        const std::size_t reachable =
            static_cast<std::size_t>(std::count_if(map.cells.begin(), map.cells.end(),
                                                   [](const auto& c) { return c.has_value(); }));
        const CdfCurve curve = cdf(map);
        reports.push_back({name, percentile(curve, 0.5), percentile(curve, 0.05),
                           percentile(curve, 0.95),
                           static_cast<double>(reachable) / static_cast<double>(map.cells.size())});
    }
    return reports;
}

}  // namespace risecov
