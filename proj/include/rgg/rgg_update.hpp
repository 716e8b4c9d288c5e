#pragma once

#include <optional>
#include <span>

#include "rgg/approximation.hpp"
#include "rgg/broadphase.hpp"
#include "rgg/roadmap.hpp"
#include "rgg/scene.hpp"

namespace rgg {

struct RggParams {
    double delta = 0.1;
    double slack = 0.0;
    SphereGenParams robot_spheres{.k_spheres = 3};
    SphereGenParams obstacle_spheres{.k_spheres = 6};
};

/// Certificate for a red label: the obstacle inner sphere and spline whose
/// contact invalidated the component.
struct RedWitness {
    int obstacle = 0;
    int obstacle_sphere = 0;
    SplineSource spline;
    double distance = 0.0;  // sphere center to polyline
};

/// Preprocessed red-green-gray state: per-component outer OBBs and inner
/// splines indexed by two AABB trees, plus obstacle approximations.
/// Immutable during updates.
struct RggIndex {
    std::vector<ComponentApprox> components;  // flat order: nodes then edges
    std::vector<Spline> splines;              // flat: component-major
    AabbTree outer_tree;                      // id = component * body_count + body
    AabbTree inner_tree;                      // id = flat spline index
    std::vector<ObstacleApprox> obstacles;
    double slack = 0.0;
    int body_count = 0;
    int spheres_per_body = 0;

    // Derived, rebuilt by rgg_rebuild_index: packed storage for the update's
    // narrow phases.
    std::vector<Vec3> spline_points_flat;
    std::vector<int32_t> spline_begin;  // splines.size() + 1 offsets
    std::vector<double> spline_limit;   // radius + slack per spline
    std::vector<OBB> outer_obbs;        // indexed by outer tree item id
};

RggIndex rgg_preprocess(const Roadmap& roadmap, const RobotModel& robot,
                        std::span<const Obstacle> obstacles, const RggParams& params);

/// Rebuilds everything derivable from components/obstacles/slack: the flat
/// spline storage, both trees, and the packed narrow-phase arrays. Called by
/// rgg_preprocess and by cache loading.
void rgg_rebuild_index(RggIndex& index);

struct RggUpdateResult {
    LabelMap labels;
    std::vector<std::optional<RedWitness>> witnesses;  // per component, set iff red
    double red_phase_ms = 0.0;
    double green_phase_ms = 0.0;
};

/// Labels every component against the obstacles at the given poses:
/// red when an obstacle inner sphere contacts an inner spline (within
/// spline radius + slack), green when every body OBB misses every obstacle
/// AABB, gray otherwise.
RggUpdateResult rgg_update(const RggIndex& index, std::span<const Pose> obstacle_poses,
                           uint64_t epoch = 0);

}  // namespace rgg
