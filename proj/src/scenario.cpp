// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include "risecov/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace risecov {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw std::invalid_argument(path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(join(path, key), "missing field");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

double number_field(const json& j, const char* key, const std::string& path) {
    return as_number(require(j, key, path), join(path, key));
}

double number_field_or(const json& j, const char* key, const std::string& path, double fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return as_number(j.at(key), join(path, key));
}

Point2 as_point(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

StructureKind parse_kind(const std::string& s, const std::string& path) {
    if (s == "surface_reflective") return StructureKind::SurfaceReflective;
    if (s == "edge_transmissive") return StructureKind::EdgeTransmissive;
    if (s == "edge_dee") return StructureKind::EdgeDee;
    fail(path, "unknown structure kind '" + s +
                   "' (expected surface_reflective, edge_transmissive or edge_dee)");
}

const char* kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::SurfaceReflective: return "surface_reflective";
        case StructureKind::EdgeTransmissive: return "edge_transmissive";
        case StructureKind::EdgeDee: return "edge_dee";
    }
    return "?";
}

PanelConfig parse_panel(const json& j, const std::string& path) {
    PanelConfig c;
    const double rows = number_field(j, "rows", path);
    const double cols = number_field(j, "cols", path);
    if (rows < 1 || rows != std::floor(rows)) fail(join(path, "rows"), "expected a count >= 1");
    if (cols < 1 || cols != std::floor(cols)) fail(join(path, "cols"), "expected a count >= 1");
    c.rows = static_cast<unsigned>(rows);
    c.cols = static_cast<unsigned>(cols);
    c.dx_m = number_field(j, "dx_m", path);
    c.dy_m = number_field(j, "dy_m", path);
    c.gamma = number_field(j, "gamma", path);
    c.amplitude = number_field_or(j, "amplitude", path, 1.0);
    c.panel_gain = number_field_or(j, "panel_gain", path, 1.0);
    c.alpha = number_field(j, "alpha", path);
    const json& q = require(j, "quantization_levels", path);
    const std::string qpath = join(path, "quantization_levels");
    if (q.is_string()) {
        if (q.get<std::string>() != "continuous")
            fail(qpath, "expected a count >= 1 or \"continuous\"");
        c.quantization_levels = std::nullopt;
    } else {
        const double lv = as_number(q, qpath);
        if (lv < 1 || lv != std::floor(lv)) fail(qpath, "expected a count >= 1 or \"continuous\"");
        c.quantization_levels = static_cast<unsigned>(lv);
    }
    return c;
}

DeeSpec parse_dee(const json& j, const std::string& path) {
    DeeSpec d;
    if (j.contains("effective_gain_m2"))
        d.effective_gain_m2 = as_number(j.at("effective_gain_m2"), join(path, "effective_gain_m2"));
    d.boresight_azimuth_deg = number_field(j, "boresight_azimuth_deg", path);
    d.pattern_p = number_field_or(j, "pattern_p", path, 2.0);
    d.pattern_q = number_field_or(j, "pattern_q", path, 3.0);
    d.radiation_efficiency = number_field_or(j, "radiation_efficiency", path, 0.62);
    return d;
}

double deg_to_rad(double deg) { return deg * kPi / 180.0; }
double rad_to_deg_norm(double rad) { return mod_two_pi(rad) * 180.0 / kPi; }

}  // namespace

ScenarioFile parse_scenario(const json& j) {
    ScenarioFile f;
    if (!j.is_object()) fail("scenario", "expected a JSON object");
    const json& ver = require(j, "schema_version", "");
    if (!ver.is_number_integer()) fail("schema_version", "expected an integer");
    f.schema_version = ver.get<int>();
    if (f.schema_version != 1) fail("schema_version", "unsupported version");
    if (j.contains("description")) f.description = as_string(j.at("description"), "description");

    f.carrier_frequency_hz = number_field(j, "carrier_frequency_hz", "");

    const json& bs = require(j, "bs", "");
    f.bs_position = as_point(require(bs, "position", "bs"), "bs.position");
    f.bs_gain_dbi = number_field_or(bs, "gain_dbi", "bs", 0.0);
    f.ue_gain_dbi = number_field_or(j, "ue_gain_dbi", "", 0.0);

    const json& buildings = require(j, "buildings", "");
    if (!buildings.is_array()) fail("buildings", "expected an array");
    for (std::size_t i = 0; i < buildings.size(); ++i) {
        const std::string bpath = "buildings[" + std::to_string(i) + "]";
        const json& verts = require(buildings[i], "vertices", bpath);
        if (!verts.is_array()) fail(join(bpath, "vertices"), "expected an array of [x, y]");
        std::vector<Point2> poly;
        for (std::size_t k = 0; k < verts.size(); ++k)
            poly.push_back(
                as_point(verts[k], join(bpath, "vertices[" + std::to_string(k) + "]")));
        f.buildings.push_back(std::move(poly));
    }

    const json& structures = require(j, "structures", "");
    if (!structures.is_array()) fail("structures", "expected an array");
    for (std::size_t i = 0; i < structures.size(); ++i) {
        const std::string spath = "structures[" + std::to_string(i) + "]";
        const json& sj = structures[i];
        StructureSpec s;
        s.name = as_string(require(sj, "name", spath), join(spath, "name"));
        s.kind = parse_kind(as_string(require(sj, "kind", spath), join(spath, "kind")),
                            join(spath, "kind"));
        s.position = as_point(require(sj, "position", spath), join(spath, "position"));
        s.normal_azimuth_deg = number_field(sj, "normal_azimuth_deg", spath);
        if (s.kind == StructureKind::EdgeDee) {
            s.dee = parse_dee(require(sj, "dee", spath), join(spath, "dee"));
        } else {
            s.panel = parse_panel(require(sj, "panel", spath), join(spath, "panel"));
        }
        f.structures.push_back(std::move(s));
    }

    const json& region = require(j, "region", "");
    f.region.min = as_point(require(region, "min", "region"), "region.min");
    f.region.max = as_point(require(region, "max", "region"), "region.max");
    f.region.resolution_m = number_field(region, "resolution_m", "region");

    if (j.contains("options")) {
        const json& opt = j.at("options");
        if (opt.contains("mode")) {
            const std::string m = as_string(opt.at("mode"), "options.mode");
            if (m == "dynamic") {
                f.options.mode = BeamModeKind::Dynamic;
            } else if (m == "fixed") {
                f.options.mode = BeamModeKind::Fixed;
            } else {
                fail("options.mode", "expected \"dynamic\" or \"fixed\"");
            }
        }
        if (opt.contains("beam_strategy")) {
            const std::string s = as_string(opt.at("beam_strategy"), "options.beam_strategy");
            if (s == "centroid") {
                f.options.beam_strategy = FixedBeamStrategy::Centroid;
            } else if (s == "search") {
                f.options.beam_strategy = FixedBeamStrategy::GridSearchMedian;
            } else {
                fail("options.beam_strategy", "expected \"centroid\" or \"search\"");
            }
        }
        if (opt.contains("shadow_only")) {
            if (!opt.at("shadow_only").is_boolean()) fail("options.shadow_only", "expected a bool");
            f.options.shadow_only = opt.at("shadow_only").get<bool>();
        }
    }
    return f;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path.string() + ": " + e.what());
    }
    try {
        return parse_scenario(j);
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

ordered_json to_json(const ScenarioFile& f) {
    ordered_json j;
    j["schema_version"] = f.schema_version;
    if (!f.description.empty()) j["description"] = f.description;
    j["carrier_frequency_hz"] = f.carrier_frequency_hz;
    j["bs"] = {{"position", {f.bs_position.x, f.bs_position.y}}, {"gain_dbi", f.bs_gain_dbi}};
    j["ue_gain_dbi"] = f.ue_gain_dbi;
    j["buildings"] = ordered_json::array();
    for (const auto& poly : f.buildings) {
        ordered_json verts = ordered_json::array();
        for (const Point2& v : poly) verts.push_back({v.x, v.y});
        j["buildings"].push_back({{"vertices", std::move(verts)}});
    }
    j["structures"] = ordered_json::array();
    for (const StructureSpec& s : f.structures) {
        ordered_json sj;
        sj["name"] = s.name;
        sj["kind"] = kind_name(s.kind);
        sj["position"] = {s.position.x, s.position.y};
        sj["normal_azimuth_deg"] = s.normal_azimuth_deg;
        if (s.panel) {
            ordered_json pj;
            pj["rows"] = s.panel->rows;
            pj["cols"] = s.panel->cols;
            pj["dx_m"] = s.panel->dx_m;
            pj["dy_m"] = s.panel->dy_m;
            pj["gamma"] = s.panel->gamma;
            pj["amplitude"] = s.panel->amplitude;
            pj["panel_gain"] = s.panel->panel_gain;
            pj["alpha"] = s.panel->alpha;
            if (s.panel->quantization_levels) {
                pj["quantization_levels"] = *s.panel->quantization_levels;
            } else {
                pj["quantization_levels"] = "continuous";
            }
            sj["panel"] = std::move(pj);
        }
        if (s.dee) {
            ordered_json dj;
            if (s.dee->effective_gain_m2) dj["effective_gain_m2"] = *s.dee->effective_gain_m2;
            dj["boresight_azimuth_deg"] = s.dee->boresight_azimuth_deg;
            dj["pattern_p"] = s.dee->pattern_p;
            dj["pattern_q"] = s.dee->pattern_q;
            dj["radiation_efficiency"] = s.dee->radiation_efficiency;
            sj["dee"] = std::move(dj);
        }
        j["structures"].push_back(std::move(sj));
    }
    j["region"] = {{"min", {f.region.min.x, f.region.min.y}},
                   {"max", {f.region.max.x, f.region.max.y}},
                   {"resolution_m", f.region.resolution_m}};
    j["options"] = {
        {"mode", f.options.mode == BeamModeKind::Dynamic ? "dynamic" : "fixed"},
        {"beam_strategy",
         f.options.beam_strategy == FixedBeamStrategy::Centroid ? "centroid" : "search"},
        {"shadow_only", f.options.shadow_only}};
    return j;
}

void save_scenario(const ScenarioFile& file, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path.string());
    out << to_json(file).dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing scenario file: " + path.string());
}

Scene build_scene(const ScenarioFile& f) {
    Scene scene;
    try {
        scene.carrier = Carrier::from_frequency(f.carrier_frequency_hz);
    } catch (const std::exception& e) {
        fail("carrier_frequency_hz", e.what());
    }
    scene.bs_position = f.bs_position;
    scene.gains = {std::pow(10.0, f.bs_gain_dbi / 10.0), std::pow(10.0, f.ue_gain_dbi / 10.0)};

    for (std::size_t i = 0; i < f.buildings.size(); ++i) {
        try {
            scene.buildings.emplace_back(f.buildings[i]);
        } catch (const std::exception& e) {
            fail("buildings[" + std::to_string(i) + "]", e.what());
        }
    }

    for (std::size_t i = 0; i < f.structures.size(); ++i) {
        const StructureSpec& s = f.structures[i];
        const std::string spath = "structures[" + std::to_string(i) + "]";
        if (s.name.empty()) fail(join(spath, "name"), "must not be empty");
        Structure st;
        st.pose.position = s.position;
        st.pose.normal_azimuth = mod_two_pi(deg_to_rad(s.normal_azimuth_deg));
        st.pose.kind = s.kind;
        if (s.kind == StructureKind::EdgeDee) {
            if (!s.dee) fail(spath, "kind edge_dee requires a dee config");
            if (s.panel) fail(spath, "kind edge_dee does not take a panel config");
            DeeConfig d;
            d.radiation_efficiency = s.dee->radiation_efficiency;
            d.effective_gain_m2 = s.dee->effective_gain_m2.value_or(
                DeeConfig::default_effective_gain(s.dee->radiation_efficiency));
            d.boresight_azimuth = mod_two_pi(deg_to_rad(s.dee->boresight_azimuth_deg));
            d.pattern_p = s.dee->pattern_p;
            d.pattern_q = s.dee->pattern_q;
            st.config = d;
        } else {
            if (!s.panel)
                fail(spath, std::string("kind ") + kind_name(s.kind) + " requires a panel config");
            if (s.dee) fail(spath, "panel kinds do not take a dee config");
            st.config = *s.panel;
        }
        if (!scene.structures.emplace(s.name, std::move(st)).second)
            fail(join(spath, "name"), "duplicate structure name '" + s.name + "'");
    }

    scene.region = {f.region.min, f.region.max, f.region.resolution_m};
    try {
        grid_size(scene.region);
    } catch (const std::exception& e) {
        fail("region", e.what());
    }
    validate_scene(scene);
    return scene;
}

LoadedScenario load_scenario(const std::filesystem::path& path) {
    ScenarioFile f = load_scenario_file(path);
    try {
        Scene scene = build_scene(f);
        return {std::move(f), std::move(scene)};
    } catch (const std::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

namespace {

PanelConfig table_panel(unsigned size, double gamma) {
    PanelConfig c;
    c.rows = size;
    c.cols = size;
    c.dx_m = 0.01;
    c.dy_m = 0.01;
    c.gamma = gamma;
    c.amplitude = 1.0;
    c.panel_gain = 1.0;
    c.alpha = 3.0;
    c.quantization_levels = 4;
    return c;
}

double bisector(double a, double b) { return a + 0.5 * wrap_pi(b - a); }

// Circular midpoint of the angular extent of the region's cell centers as
// seen from pos.
double extent_bisector_deg(Point2 pos, const RegionSpec& region) {
    const GridRegion r{region.min, region.max, region.resolution_m};
    const std::vector<Point2> pts = grid_points(r);
    const double ref = azimuth(pts.front() - pos);
    double lo = 0.0;
    double hi = 0.0;
    for (const Point2& p : pts) {
        const double off = wrap_pi(azimuth(p - pos) - ref);
        lo = std::min(lo, off);
        hi = std::max(hi, off);
    }
    return rad_to_deg_norm(ref + 0.5 * (lo + hi));
}

DeeSpec edge_dee_spec(Point2 edge, const RegionSpec& region) {
    DeeSpec d;
    d.radiation_efficiency = 0.62;
    d.effective_gain_m2 = DeeConfig::default_effective_gain(d.radiation_efficiency);
    d.boresight_azimuth_deg = extent_bisector_deg(edge, region);
    d.pattern_p = 2.0;
    d.pattern_q = 3.0;
    return d;
}

}  // namespace

std::optional<CanonicalSceneId> canonical_scene_from_name(const std::string& name) {
    if (name == "a_corner_30m") return CanonicalSceneId::ACorner30m;
    if (name == "a_corner_50m") return CanonicalSceneId::ACorner50m;
    if (name == "b_wall") return CanonicalSceneId::BWall;
    return std::nullopt;
}

std::string canonical_scene_name(CanonicalSceneId id) {
    switch (id) {
        case CanonicalSceneId::ACorner30m: return "a_corner_30m";
        case CanonicalSceneId::ACorner50m: return "a_corner_50m";
        case CanonicalSceneId::BWall: return "b_wall";
    }
    return "?";
}

ScenarioFile generate_canonical(CanonicalSceneId id) {
    ScenarioFile f;
    f.carrier_frequency_hz = 5.5e9;
    f.bs_position = {0.0, 0.0};
    f.bs_gain_dbi = 0.0;
    f.ue_gain_dbi = 0.0;
    f.options = {BeamModeKind::Dynamic, FixedBeamStrategy::Centroid, true};

    if (id == CanonicalSceneId::BWall) {
        f.description =
            "Wall blockage: coverage region directly behind a wall slab; surface panel on an "
            "adjacent facing wall, edge structures on the wall's far top edge.";
        f.buildings = {
            {{20.0, -25.0}, {21.0, -25.0}, {21.0, 25.0}, {20.0, 25.0}},  // wall slab
            {{24.0, 36.0}, {46.0, 36.0}, {46.0, 44.0}, {24.0, 44.0}},    // SS host
        };
        f.region = {{22.0, -22.0}, {34.0, 22.0}, 1.0};
        const Point2 edge{21.0, 25.0};
        const Point2 centroid{0.5 * (f.region.min.x + f.region.max.x),
                              0.5 * (f.region.min.y + f.region.max.y)};

        StructureSpec ss1{"ss1", StructureKind::SurfaceReflective, {28.0, 36.0}, 270.0,
                          table_panel(16, 1.0), std::nullopt};
        StructureSpec es{"es", StructureKind::EdgeTransmissive, edge,
                         rad_to_deg_norm(bisector(azimuth(edge - f.bs_position),
                                                  azimuth(centroid - edge))),
                         table_panel(16, 0.5), std::nullopt};
        StructureSpec dee{"dee", StructureKind::EdgeDee, edge,
                          rad_to_deg_norm(azimuth(f.bs_position - edge)), std::nullopt,
                          edge_dee_spec(edge, f.region)};
        f.structures = {std::move(ss1), std::move(es), std::move(dee)};
        return f;
    }

    const double offset = (id == CanonicalSceneId::ACorner50m) ? 50.0 : 30.0;
    f.description = "Corner blockage: coverage region behind a building corner; surface panel "
                    "on a facing wall " +
                    std::to_string(static_cast<int>(offset)) +
                    " m below the shadow edge, edge structures on the corner.";
    f.buildings = {
        {{30.0, 0.0}, {50.0, 0.0}, {50.0, 30.0}, {30.0, 30.0}},  // obstacle
        {{45.0, -offset - 2.0}, {75.0, -offset - 2.0}, {75.0, -offset}, {45.0, -offset}},
    };
    f.region = {{50.0, 0.0}, {80.0, 30.0}, 1.0};
    const Point2 corner{50.0, 0.0};
    const Point2 centroid{0.5 * (f.region.min.x + f.region.max.x),
                          0.5 * (f.region.min.y + f.region.max.y)};

    StructureSpec ss1{"ss1", StructureKind::SurfaceReflective, {60.0, -offset}, 90.0,
                      table_panel(16, 1.0), std::nullopt};
    StructureSpec es{"es", StructureKind::EdgeTransmissive, corner,
                     rad_to_deg_norm(bisector(azimuth(corner - f.bs_position),
                                              azimuth(centroid - corner))),
                     table_panel(16, 0.5), std::nullopt};
    StructureSpec dee{"dee", StructureKind::EdgeDee, corner,
                      rad_to_deg_norm(azimuth(f.bs_position - corner)), std::nullopt,
                      edge_dee_spec(corner, f.region)};
    f.structures = {std::move(ss1), std::move(es), std::move(dee)};
    return f;
}

}  // namespace risecov
