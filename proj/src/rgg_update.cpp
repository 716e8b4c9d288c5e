#include "rgg/rgg_update.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "rgg/parallel.hpp"
#include "rgg/rng.hpp"

namespace rgg {

RggIndex rgg_preprocess(const Roadmap& roadmap, const RobotModel& robot,
                        std::span<const Obstacle> obstacles, const RggParams& params) {
    RggIndex index;
    index.slack = params.slack;
    index.body_count = static_cast<int>(robot.body_count());
    index.spheres_per_body = params.robot_spheres.k_spheres;

    // One sphere set per robot body, reused by every component.
    std::vector<std::vector<Sphere>> body_spheres(robot.body_count());
    for (size_t b = 0; b < robot.body_count(); ++b) {
        SphereGenParams p = params.robot_spheres;
        p.seed = mix_seed(p.seed, b);
        body_spheres[b] = generate_spheres(robot.body_mesh(b), p);
    }

    const size_t n_comp = roadmap.component_count();
    index.components.resize(n_comp);

    parallel_for(n_comp, [&](size_t flat) {
        const auto cfgs = component_cfgs(roadmap, roadmap.component(flat));
        ComponentApprox& approx = index.components[flat];
        approx.outer = build_component_outer(robot, cfgs, params.delta);
        approx.inner =
            build_component_inner(robot, cfgs, body_spheres, static_cast<int>(flat));
    });

    for (const Obstacle& o : obstacles) {
        SphereGenParams p = params.obstacle_spheres;
        p.seed = mix_seed(p.seed, 0xb57ac1e + index.obstacles.size());
        index.obstacles.push_back(build_obstacle_approx(o.mesh, o.pose, p));
    }
    rgg_rebuild_index(index);
    return index;
}

void rgg_rebuild_index(RggIndex& index) {
    const size_t n_comp = index.components.size();

    index.splines.clear();
    index.spline_points_flat.clear();
    index.spline_begin.assign(1, 0);
    index.spline_limit.clear();
    index.outer_obbs.clear();

    std::vector<std::pair<int64_t, AABB>> outer_items;
    std::vector<std::pair<int64_t, AABB>> inner_items;
    for (size_t flat = 0; flat < n_comp; ++flat) {
        const ComponentApprox& approx = index.components[flat];
        for (size_t b = 0; b < approx.outer.size(); ++b) {
            outer_items.emplace_back(static_cast<int64_t>(flat * index.body_count + b),
                                     approx.outer[b].enclosing_aabb());
            index.outer_obbs.push_back(approx.outer[b]);
        }
        for (const Spline& spline : approx.inner) {
            // Inflating the key box by radius + slack keeps the broad phase
            // conservative for the tube-contact test.
            const double pad = std::max(0.0, spline.radius + index.slack);
            inner_items.emplace_back(static_cast<int64_t>(index.splines.size()),
                                     aabb_of(spline.points).inflated(pad));
            index.spline_points_flat.insert(index.spline_points_flat.end(),
                                            spline.points.begin(), spline.points.end());
            index.spline_begin.push_back(static_cast<int32_t>(index.spline_points_flat.size()));
            index.spline_limit.push_back(spline.radius + index.slack);
            index.splines.push_back(spline);
        }
    }
    index.outer_tree = AabbTree::build(std::move(outer_items));
    index.inner_tree = AabbTree::build(std::move(inner_items));
}

namespace {

struct RedCandidate {
    int32_t spline;
    int16_t obstacle;
    int16_t sphere;
};

struct OuterCandidate {
    int32_t body;
    int32_t obstacle;
};

// Counting-sort (comp, payload) pairs into component-major slices; insertion
// order is preserved within a component, so candidate scans see the same
// order as the fused single-thread path.
template <typename T>
void bucket_by_component(const std::vector<std::pair<int32_t, T>>& pairs, size_t n_comp,
                         std::vector<int32_t>& offsets, std::vector<T>& sorted,
                         std::vector<int32_t>& cursor) {
    offsets.assign(n_comp + 1, 0);
    for (const auto& [comp, payload] : pairs) ++offsets[comp + 1];
    for (size_t i = 1; i <= n_comp; ++i) offsets[i] += offsets[i - 1];
    sorted.resize(pairs.size());
    cursor.assign(offsets.begin(), offsets.end() - 1);
    for (const auto& [comp, payload] : pairs) sorted[cursor[comp]++] = payload;
}

// Buffers reused across updates; kept per thread so concurrent updates on
// different threads stay independent.
struct UpdateScratch {
    std::vector<AABB> obstacle_aabbs;
    std::vector<std::vector<Sphere>> obstacle_spheres;
    std::vector<std::pair<int32_t, int64_t>> sphere_hits;
    std::vector<int64_t> box_hits;
    std::vector<std::pair<int32_t, RedCandidate>> red_pairs;
    std::vector<int32_t> red_offsets;
    std::vector<RedCandidate> red_cands;
    std::vector<std::pair<int32_t, OuterCandidate>> outer_pairs;
    std::vector<int32_t> outer_offsets;
    std::vector<OuterCandidate> outer_cands;
    std::vector<int32_t> cursor;
};

struct RedTest {
    const RggIndex& index;
    const std::vector<std::vector<Sphere>>& obstacle_spheres;

    // Tube contact against the packed polyline; same predicate as
    // sphere_intersects_polyline(sphere, points, radius + slack).
    bool contact(const RedCandidate& cand) const {
        const Sphere& sphere = obstacle_spheres[cand.obstacle][cand.sphere];
        const double limit = sphere.radius + index.spline_limit[cand.spline];
        if (limit < 0.0) return false;
        const double limit2 = limit * limit;
        const Vec3* pts = index.spline_points_flat.data() + index.spline_begin[cand.spline];
        const int32_t npts =
            index.spline_begin[cand.spline + 1] - index.spline_begin[cand.spline];
        double best2 = norm2(sphere.center - pts[0]);
        for (int32_t i = 0; i + 1 < npts && best2 > limit2; ++i) {
            const Vec3 ab = pts[i + 1] - pts[i];
            const double len2 = norm2(ab);
            double t = len2 > 0.0 ? dot(sphere.center - pts[i], ab) / len2 : 0.0;
            t = std::clamp(t, 0.0, 1.0);
            best2 = std::min(best2, norm2(sphere.center - (pts[i] + ab * t)));
        }
        return best2 <= limit2;
    }

    RedWitness witness(const RedCandidate& cand) const {
        const Spline& spline = index.splines[cand.spline];
        const Sphere& sphere = obstacle_spheres[cand.obstacle][cand.sphere];
        double d = norm(sphere.center - spline.points[0]);
        for (size_t i = 0; i + 1 < spline.points.size(); ++i)
            d = std::min(d, dist_point_segment(sphere.center,
                                               {spline.points[i], spline.points[i + 1]}));
        return RedWitness{cand.obstacle, cand.sphere, spline.source, d};
    }
};

}  // namespace

RggUpdateResult rgg_update(const RggIndex& index, std::span<const Pose> obstacle_poses,
                           uint64_t epoch) {
    if (obstacle_poses.size() != index.obstacles.size())
        throw std::invalid_argument("pose count does not match obstacle count");

    using clock = std::chrono::steady_clock;
    const size_t n_comp = index.components.size();
    const size_t splines_per_comp =
        static_cast<size_t>(index.body_count) * index.spheres_per_body;
    const bool serial = worker_count() <= 1;

    RggUpdateResult result;
    result.labels.epoch = epoch;
    result.labels.labels.assign(n_comp, Label::Green);
    result.witnesses.assign(n_comp, std::nullopt);
    if (n_comp == 0) return result;

    thread_local UpdateScratch scratch;
    std::vector<Label>& labels = result.labels.labels;

    // Obstacles at their trial poses.
    std::vector<AABB>& obstacle_aabbs = scratch.obstacle_aabbs;
    std::vector<std::vector<Sphere>>& obstacle_spheres = scratch.obstacle_spheres;
    obstacle_aabbs.clear();
    obstacle_spheres.resize(index.obstacles.size());
    for (size_t o = 0; o < index.obstacles.size(); ++o) {
        const ObstacleApprox& approx = index.obstacles[o];
        AABB box = AABB::empty();
        for (const Vec3& v : approx.mesh->vertices) box.expand(obstacle_poses[o].apply(v));
        obstacle_aabbs.push_back(box);
        obstacle_spheres[o].resize(approx.local_spheres.size());
        for (size_t s = 0; s < approx.local_spheres.size(); ++s)
            obstacle_spheres[o][s] = {obstacle_poses[o].apply(approx.local_spheres[s].center),
                                      approx.local_spheres[s].radius};
    }

    const RedTest red_test{index, obstacle_spheres};

    // Red phase: sphere-spline candidates from the inner tree, confirmed by
    // the tube-contact test. Candidates arrive in (obstacle, traversal)
    // order; the first contact per component becomes its witness.
    const auto red_start = clock::now();
    if (serial) {
        std::vector<std::pair<int32_t, int64_t>>& hits = scratch.sphere_hits;
        for (size_t o = 0; o < obstacle_spheres.size(); ++o) {
            hits.clear();
            index.inner_tree.query_into(obstacle_spheres[o], hits);
            for (const auto& [s, spline_id] : hits) {
                const size_t comp = static_cast<size_t>(spline_id) / splines_per_comp;
                if (labels[comp] == Label::Red) continue;
                const RedCandidate cand{static_cast<int32_t>(spline_id),
                                        static_cast<int16_t>(o), static_cast<int16_t>(s)};
                if (red_test.contact(cand)) {
                    labels[comp] = Label::Red;
                    result.witnesses[comp] = red_test.witness(cand);
                }
            }
        }
    } else {
        std::vector<std::pair<int32_t, RedCandidate>>& red_pairs = scratch.red_pairs;
        red_pairs.clear();
        std::vector<std::pair<int32_t, int64_t>>& hits = scratch.sphere_hits;
        for (size_t o = 0; o < obstacle_spheres.size(); ++o) {
            hits.clear();
            index.inner_tree.query_into(obstacle_spheres[o], hits);
            for (const auto& [s, spline_id] : hits)
                red_pairs.emplace_back(static_cast<int32_t>(spline_id / splines_per_comp),
                                       RedCandidate{static_cast<int32_t>(spline_id),
                                                    static_cast<int16_t>(o),
                                                    static_cast<int16_t>(s)});
        }
        bucket_by_component(red_pairs, n_comp, scratch.red_offsets, scratch.red_cands,
                            scratch.cursor);
        parallel_for(n_comp, [&](size_t comp) {
            for (int32_t c = scratch.red_offsets[comp]; c < scratch.red_offsets[comp + 1]; ++c) {
                const RedCandidate& cand = scratch.red_cands[c];
                if (red_test.contact(cand)) {
                    labels[comp] = Label::Red;
                    result.witnesses[comp] = red_test.witness(cand);
                    break;
                }
            }
        });
    }
    const auto red_end = clock::now();

    // Green phase: components whose body OBBs all miss every obstacle AABB
    // stay green; any hit without a red certificate is gray.
    if (serial) {
        std::vector<int64_t>& hits = scratch.box_hits;
        for (size_t o = 0; o < obstacle_aabbs.size(); ++o) {
            hits.clear();
            index.outer_tree.query_into(obstacle_aabbs[o], hits);
            for (int64_t item : hits) {
                const size_t comp = static_cast<size_t>(item) / index.body_count;
                if (labels[comp] != Label::Green) continue;
                if (obb_intersects_aabb(index.outer_obbs[item], obstacle_aabbs[o]))
                    labels[comp] = Label::Gray;
            }
        }
    } else {
        std::vector<std::pair<int32_t, OuterCandidate>>& outer_pairs = scratch.outer_pairs;
        outer_pairs.clear();
        std::vector<int64_t>& hits = scratch.box_hits;
        for (size_t o = 0; o < obstacle_aabbs.size(); ++o) {
            hits.clear();
            index.outer_tree.query_into(obstacle_aabbs[o], hits);
            for (int64_t item : hits)
                outer_pairs.emplace_back(
                    static_cast<int32_t>(item / index.body_count),
                    OuterCandidate{static_cast<int32_t>(item % index.body_count),
                                   static_cast<int32_t>(o)});
        }
        bucket_by_component(outer_pairs, n_comp, scratch.outer_offsets, scratch.outer_cands,
                            scratch.cursor);
        parallel_for(n_comp, [&](size_t comp) {
            if (labels[comp] == Label::Red) return;
            for (int32_t c = scratch.outer_offsets[comp]; c < scratch.outer_offsets[comp + 1];
                 ++c) {
                const OuterCandidate& cand = scratch.outer_cands[c];
                const OBB& obb = index.outer_obbs[comp * index.body_count + cand.body];
                if (obb_intersects_aabb(obb, obstacle_aabbs[cand.obstacle])) {
                    labels[comp] = Label::Gray;
                    return;
                }
            }
        });
    }
    const auto green_end = clock::now();

    result.red_phase_ms = std::chrono::duration<double, std::milli>(red_end - red_start).count();
    result.green_phase_ms =
        std::chrono::duration<double, std::milli>(green_end - red_end).count();
    return result;
}

}  // namespace rgg
