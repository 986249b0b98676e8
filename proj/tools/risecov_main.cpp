// SPDX-License-Identifier: Apache-2.0
//
// risecov - 2D coverage simulator for metasurface-assisted wireless links

#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "risecov/engine.hpp"
#include "risecov/export.hpp"
#include "risecov/scenario.hpp"
#include "risecov/stats.hpp"

namespace {

using namespace risecov;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct CommonArgs {
    std::string scenario_path;
    std::string mode;
    std::string strategy;
    bool shadow_only = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scenario", args.scenario_path, "Scenario file (JSON)")->required();
    cmd->add_option("--mode", args.mode, "Beam mode: dynamic|fixed (default from the file)")
        ->check(CLI::IsMember({"dynamic", "fixed"}));
    cmd->add_option("--beam-strategy", args.strategy,
                    "Fixed-beam selection: centroid|search (default from the file)")
        ->check(CLI::IsMember({"centroid", "search"}));
    cmd->add_flag("--shadow-only", args.shadow_only,
                  "Restrict the map to cells whose direct BS path is blocked");
    cmd->add_option("--threads", args.threads, "Worker threads (0 = auto)");
}

struct ResolvedRun {
    BeamModeKind mode;
    FixedBeamStrategy strategy;
    EvalOptions options;
    std::string mode_label;
};

ResolvedRun resolve(const CLI::App* cmd, const CommonArgs& args, const ScenarioOptions& file_opts) {
    ResolvedRun r;
    r.mode = file_opts.mode;
    if (!args.mode.empty()) r.mode = args.mode == "fixed" ? BeamModeKind::Fixed
                                                          : BeamModeKind::Dynamic;
    r.strategy = file_opts.beam_strategy;
    if (!args.strategy.empty())
        r.strategy = args.strategy == "search" ? FixedBeamStrategy::GridSearchMedian
                                               : FixedBeamStrategy::Centroid;
    r.options.shadow_only = cmd->count("--shadow-only") > 0 ? args.shadow_only
                                                            : file_opts.shadow_only;
    r.options.threads = args.threads != 0 ? args.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
    r.mode_label = r.mode == BeamModeKind::Fixed ? "fixed" : "dynamic";
    return r;
}

std::vector<std::string> all_structure_names(const Scene& scene) {
    std::vector<std::string> names;
    for (const auto& [name, st] : scene.structures) names.push_back(name);
    return names;
}

int cmd_generate(const std::string& scene_name, const std::string& out_path) {
    const auto id = canonical_scene_from_name(scene_name);
    if (!id) {
        std::cerr << "error: unknown scene '" << scene_name
                  << "' (expected a_corner_30m, a_corner_50m or b_wall)\n";
        return 1;
    }
    save_scenario(generate_canonical(*id), out_path);
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_run(const CLI::App* cmd, const CommonArgs& args, const std::string& structure,
            const std::string& compare_list, const std::string& map_path,
            const std::string& cdf_path, const std::string& heatmap_path) {
    const LoadedScenario loaded = load_scenario(args.scenario_path);
    const ResolvedRun run = resolve(cmd, args, loaded.file.options);

    const bool wants_outputs = !map_path.empty() || !cdf_path.empty() || !heatmap_path.empty();
    if (wants_outputs && structure.empty()) {
        std::cerr << "error: --map/--cdf/--heatmap need --structure\n";
        return 1;
    }

    if (!structure.empty()) {
        BeamMode mode = BeamMode::dynamic();
        if (run.mode == BeamModeKind::Fixed)
            mode = BeamMode::fixed(select_fixed_beam(loaded.scene, structure, run.strategy));
        const PathlossMap map = evaluate_region(loaded.scene, structure, mode, run.options);
        if (!map_path.empty()) {
            write_map_csv(map, map_path);
            std::cout << "map: " << map_path << "\n";
        }
        if (!cdf_path.empty()) {
            write_cdf_csv(cdf(map), cdf_path);
            std::cout << "cdf: " << cdf_path << "\n";
        }
        if (!heatmap_path.empty()) {
            write_heatmap_pgm(map, heatmap_path);
            std::cout << "heatmap: " << heatmap_path << "\n";
        }
    }

    std::vector<std::string> names;
    if (!compare_list.empty()) {
        names = split_csv(compare_list);
    } else if (!structure.empty()) {
        names = {structure};
    } else {
        names = all_structure_names(loaded.scene);
    }
    const auto reports =
        compare_structures(loaded.scene, names, run.mode, run.strategy, run.options);
    std::cout << format_report_table(reports, run.mode_label);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D coverage simulator for metasurface-assisted wireless links"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "Write a bundled scenario file");
    std::string scene_name;
    std::string out_path;
    gen->add_option("--scene", scene_name, "a_corner_30m|a_corner_50m|b_wall")->required();
    gen->add_option("--out", out_path, "Output path")->required();

    auto* run = app.add_subcommand("run", "Evaluate a scenario and export results");
    CommonArgs run_args;
    add_common(run, run_args);
    std::string structure;
    std::string compare_list;
    std::string map_path;
    std::string cdf_path;
    std::string heatmap_path;
    run->add_option("--structure", structure, "Structure to map");
    run->add_option("--compare", compare_list, "Comma-separated structures to summarize");
    run->add_option("--map", map_path, "Write the attenuation map CSV here");
    run->add_option("--cdf", cdf_path, "Write the CDF CSV here");
    run->add_option("--heatmap", heatmap_path, "Write a PGM heatmap here");

    auto* cmp = app.add_subcommand("compare", "Summarize several structures on one grid");
    CommonArgs cmp_args;
    add_common(cmp, cmp_args);
    std::string cmp_list;
    cmp->add_option("--compare", cmp_list, "Comma-separated structures (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(scene_name, out_path);
        if (run->parsed())
            return cmd_run(run, run_args, structure, compare_list, map_path, cdf_path,
                           heatmap_path);
        return cmd_run(cmp, cmp_args, "", cmp_list, "", "", "");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
