#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "rgg/kinematics.hpp"
#include "rgg/roadmap.hpp"

namespace rgg {

struct SphereGenParams {
    int n_samples = 24;   // interior samples (candidate spheres)
    int k_spheres = 3;    // spheres kept
    int push_steps = 6;   // medial-axis push iterations per sample
    int mc_points = 4096; // Monte-Carlo samples for the union-volume estimate
    uint64_t seed = 0;
};

/// Inner approximation of a component body: a shortcut polyline through one
/// inscribed sphere's center across the component's configurations, carrying
/// that sphere's radius.
struct SplineSource {
    int component = 0;  // flat component index
    int body = 0;
    int sphere = 0;

    bool operator==(const SplineSource&) const = default;
};

struct Spline {
    std::vector<Vec3> points;
    double radius = 0.0;
    SplineSource source;
    std::vector<uint32_t> center_indices;  // indices into the original center list
};

/// Per-component approximations: one outer OBB per robot body, one inner
/// spline per body per sphere.
struct ComponentApprox {
    std::vector<OBB> outer;
    std::vector<Spline> inner;
};

/// Obstacle approximations: outer AABB of the posed mesh, inner spheres kept
/// in the obstacle's local frame (rigid under pose changes).
struct ObstacleApprox {
    std::shared_ptr<const TriMesh> mesh;
    AABB outer;
    std::vector<Sphere> local_spheres;
    Pose current_pose;

    void set_pose(const Pose& pose);
    std::vector<Sphere> posed_spheres() const;
};

/// Inscribed-sphere generation: sample interior points, push each toward the
/// medial axis (nearest boundary point, opposite boundary point, midpoint),
/// radius = boundary distance, then keep the k spheres with large union.
std::vector<Sphere> generate_spheres(const TriMesh& mesh, const SphereGenParams& params);

/// Greedy max-union selection of k spheres, union volume estimated by
/// fixed-seed Monte-Carlo over the candidates' bounding box.
std::vector<Sphere> large_union_k(const std::vector<Sphere>& candidates, int k, int mc_points,
                                  uint64_t seed);

/// Monte-Carlo union volume of a sphere set (the estimator large_union_k
/// ranks subsets with).
double mc_union_volume(std::span<const Sphere> spheres, const AABB& box, int mc_points,
                       uint64_t seed);

/// Union of each body's posed vertices over the given configurations.
std::vector<std::vector<Vec3>> edge_point_cloud(const RobotModel& robot,
                                                std::span<const Config> cfgs);

/// One OBB per body fitted to its swept point cloud.
std::vector<OBB> build_component_outer(const RobotModel& robot, std::span<const Config> cfgs,
                                       double delta);

/// Shortcutting: keep a subsequence of centers (first and last included) such
/// that every skipped center lies strictly within r of its covering segment.
/// Doubling search with binary refinement on the first bad segment.
std::vector<uint32_t> shortcut_indices(std::span<const Vec3> centers, double r);
std::vector<Vec3> shortcut_spline(std::span<const Vec3> centers, double r);

/// Largest l in [lo, hi) with segment(centers[i], centers[l]) good and
/// segment(centers[i], centers[l+1]) bad. Preconditions (lo good, hi bad) are
/// checked and violations reported, since the search assumes goodness is
/// monotone along the polyline.
uint32_t good_bad_pt(std::span<const Vec3> centers, uint32_t i, uint32_t lo, uint32_t hi,
                     double r);

/// Splines for one component: per body and per inscribed sphere, the sphere
/// center tracked across cfgs and shortcut with that sphere's radius.
std::vector<Spline> build_component_inner(const RobotModel& robot, std::span<const Config> cfgs,
                                          std::span<const std::vector<Sphere>> body_spheres,
                                          int component_flat);

ObstacleApprox build_obstacle_approx(std::shared_ptr<const TriMesh> mesh, const Pose& pose,
                                     const SphereGenParams& params);

}  // namespace rgg
