// Benchmark CLI: build preprocessed roadmap caches, run single labeled
// updates, and reproduce the seeded trial protocol with CSV output.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgg/bench.hpp"
#include "rgg/cache.hpp"
#include "rgg/drm.hpp"
#include "rgg/oracle.hpp"
#include "rgg/rgg_update.hpp"

namespace {

using namespace rgg;

RggParams rgg_params_from(const SceneParams& p) {
    RggParams out;
    out.delta = p.delta;
    out.slack = p.slack;
    out.robot_spheres = {p.sphere_samples, p.robot_spheres, p.push_steps, p.mc_points, p.seed};
    out.obstacle_spheres = {std::max(p.sphere_samples, p.obstacle_spheres), p.obstacle_spheres,
                            p.push_steps, p.mc_points, p.seed};
    return out;
}

Preprocessed build_all(const SceneDoc& scene, int target_edges) {
    SceneParams params = scene.params;
    Roadmap roadmap = build_prm(scene.robot, scene.workspace, params.n_nodes, params.k_neighbors,
                                params.seed, params.eps);

    if (target_edges > 0) {
        // The edge yield of k-nearest construction is roughly linear in the
        // node count, so rescale and rebuild until we land within 10%.
        int n = params.n_nodes;
        for (int iter = 0; iter < 10; ++iter) {
            const auto count = static_cast<double>(roadmap.edges.size());
            if (count >= 0.9 * target_edges && count <= 1.1 * target_edges) break;
            n = std::max(2, static_cast<int>(std::lround(n * target_edges / count)));
            roadmap = build_prm(scene.robot, scene.workspace, n, params.k_neighbors, params.seed,
                                params.eps);
        }
    }

    std::cerr << "roadmap: " << roadmap.nodes.size() << " nodes, " << roadmap.edges.size()
              << " edges\n";

    Preprocessed p{scene, std::move(roadmap), {}, {}};
    p.rgg = rgg_preprocess(p.roadmap, p.scene.robot, p.scene.obstacles, rgg_params_from(params));
    p.drm = drm_preprocess(p.roadmap, p.scene.robot, p.scene.workspace, params.grid_resolution);
    return p;
}

Preprocessed load_or_die(const std::string& cache_path) {
    if (!std::filesystem::exists(cache_path)) {
        std::cerr << "cache file not found: " << cache_path
                  << "\nrun `rgg build --scene <scene.json> --out " << cache_path
                  << "` first\n";
        std::exit(2);
    }
    return load_cache(cache_path);
}

// A pose argument is either 4 comma-separated values (quaternion w,x,y,z) or
// 3 (intrinsic Z-Y-X Euler angles, radians). Orientation only; the obstacle
// keeps its scene translation.
Mat3 parse_orientation(const std::string& arg) {
    std::vector<double> vals;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.size() == 4) return Mat3::from_quat(vals[0], vals[1], vals[2], vals[3]);
    if (vals.size() == 3)
        return Mat3::rot_z(vals[0]) * Mat3::rot_y(vals[1]) * Mat3::rot_x(vals[2]);
    throw CLI::ValidationError("--pose needs 4 (quaternion) or 3 (euler) values");
}

int cmd_update(const std::string& cache_path, const std::vector<std::string>& pose_args) {
    const Preprocessed p = load_or_die(cache_path);

    std::vector<Pose> poses;
    poses.reserve(p.scene.obstacles.size());
    for (size_t i = 0; i < p.scene.obstacles.size(); ++i) {
        Pose pose = p.scene.obstacles[i].pose;
        if (i < pose_args.size()) pose.rotation = parse_orientation(pose_args[i]);
        poses.push_back(pose);
    }

    const RggUpdateResult rgg_res = rgg_update(p.rgg, poses, 1);
    const LabelMap drm_labels = drm_update(p.drm, p.scene.obstacles, poses, 1);

    // Deterministic CSV on stdout; timings go to stderr so repeated runs with
    // the same pose produce identical output.
    std::cout << "component,kind,rgg_label,drm_label,witness\n";
    for (size_t flat = 0; flat < p.roadmap.component_count(); ++flat) {
        const ComponentId id = p.roadmap.component(flat);
        std::cout << flat << ',' << (id.kind == ComponentKind::Node ? "node" : "edge") << ','
                  << label_name(rgg_res.labels.labels[flat]) << ','
                  << label_name(drm_labels.labels[flat]) << ',';
        if (rgg_res.witnesses[flat]) {
            const RedWitness& w = *rgg_res.witnesses[flat];
            std::cout << "obstacle" << w.obstacle << ":sphere" << w.obstacle_sphere << ":body"
                      << w.spline.body << ":spline" << w.spline.sphere;
        }
        std::cout << '\n';
    }
    std::fprintf(stderr, "red_phase_ms=%.3f green_phase_ms=%.3f\n", rgg_res.red_phase_ms,
                 rgg_res.green_phase_ms);
    return 0;
}

int cmd_bench(const std::string& cache_path, int trials, uint64_t seed,
              const std::string& out_path) {
    const Preprocessed p = load_or_die(cache_path);
    const std::vector<TrialStats> stats = run_trials(p, trials, seed);
    write_trials_csv(stats, std::filesystem::path(out_path));
    print_summary(summarize(stats), std::cout);
    return 0;
}

int cmd_validate(const std::string& cache_path, int trials, uint64_t seed) {
    const Preprocessed p = load_or_die(cache_path);
    const std::vector<TrialStats> stats = run_trials(p, trials, seed);
    int64_t mislabels = 0;
    for (const TrialStats& s : stats) mislabels += s.rgg_mislabel_total() + s.drm_mislabel_total();
    std::cout << "trials: " << stats.size() << ", mislabels: " << mislabels << '\n';
    return mislabels == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"red-green-gray dynamic roadmap benchmark"};
    app.require_subcommand(1);

    std::string scene_path, cache_path, out_path;
    std::vector<std::string> pose_args;
    int trials = 100;
    int target_edges = 0;
    uint64_t seed = 0;
    bool seed_set = false;

    CLI::App* build = app.add_subcommand("build", "construct roadmap and indexes from a scene");
    build->add_option("--scene", scene_path, "scene JSON file")->required();
    build->add_option("--out", cache_path, "output cache file")->required();
    build->add_option("--edges", target_edges, "target edge count (rebuilds to within 10%)");
    build->add_option("--seed", seed, "override the scene seed")->each([&](const std::string&) {
        seed_set = true;
    });

    CLI::App* update = app.add_subcommand("update", "single labeled update, CSV to stdout");
    update->add_option("--cache", cache_path, "cache file from `build`")->required();
    update->add_option("--pose", pose_args,
                       "obstacle orientation: quaternion w,x,y,z or euler z,y,x (repeatable, "
                       "one per obstacle)");

    CLI::App* bench = app.add_subcommand("bench", "seeded trial protocol with CSV output");
    bench->add_option("--cache", cache_path, "cache file from `build`")->required();
    bench->add_option("--trials", trials, "number of trials");
    bench->add_option("--seed", seed, "trial seed")->required();
    bench->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* validate = app.add_subcommand("validate", "exit nonzero on any mislabel");
    validate->add_option("--cache", cache_path, "cache file from `build`")->required();
    validate->add_option("--trials", trials, "number of trials");
    validate->add_option("--seed", seed, "trial seed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            SceneDoc scene = load_scene(scene_path);
            if (seed_set) scene.params.seed = seed;
            const Preprocessed p = build_all(scene, target_edges);
            save_cache(p, cache_path);
            std::cout << "cache written to " << cache_path << '\n';
            return 0;
        }
        if (update->parsed()) return cmd_update(cache_path, pose_args);
        if (bench->parsed()) return cmd_bench(cache_path, trials, seed, out_path);
        if (validate->parsed()) return cmd_validate(cache_path, trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
