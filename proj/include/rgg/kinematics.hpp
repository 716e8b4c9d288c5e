#pragma once

#include <array>
#include <string>
#include <vector>

#include "rgg/geometry.hpp"
#include "rgg/trimesh.hpp"

namespace rgg {

/// Point in joint space.
struct Config {
    std::vector<double> coords;

    bool operator==(const Config&) const = default;
};

/// Straight joint-space segment between two configurations.
struct Edge {
    Config a;
    Config b;
};

struct JointSpec {
    int parent = -1;  // parent body index, -1 for the fixed base
    Vec3 offset;      // attachment point in the parent frame
    bool spherical = true;
    std::array<std::array<double, 2>, 3> limits{{{-M_PI, M_PI}, {-M_PI, M_PI}, {-M_PI, M_PI}}};
};

struct BodySpec {
    std::string name;
    TriMesh mesh;  // in the body's local frame
    JointSpec joint;
};

/// Kinematic tree of rigid bodies rooted at a fixed base. Each spherical
/// joint contributes three angle coordinates (intrinsic Z-Y-X about its
/// attachment point); fixed joints contribute none.
class RobotModel {
 public:
    static RobotModel create(Pose base_pose, std::vector<BodySpec> bodies);

    int dof_count() const { return dof_count_; }
    size_t body_count() const { return bodies_.size(); }
    const TriMesh& body_mesh(size_t i) const { return bodies_[i].mesh; }
    const BodySpec& body(size_t i) const { return bodies_[i]; }
    const Pose& base_pose() const { return base_pose_; }

    /// First coordinate index of body i's joint angles, or -1 for fixed joints.
    int angle_offset(size_t i) const { return angle_offset_[i]; }

    double limit_lo(int coord) const { return limits_[coord][0]; }
    double limit_hi(int coord) const { return limits_[coord][1]; }

 private:
    Pose base_pose_;
    std::vector<BodySpec> bodies_;
    std::vector<int> angle_offset_;
    std::vector<std::array<double, 2>> limits_;  // per coordinate
    int dof_count_ = 0;
};

struct PosedBody {
    int body_index = 0;
    Pose pose;
    std::vector<Vec3> world_vertices;
};

/// Forward kinematics: one posed body per robot body, poses composed down
/// the chain.
std::vector<PosedBody> fk(const RobotModel& robot, const Config& c);

/// Body poses only (no vertex transform); same chain composition as fk.
std::vector<Pose> body_poses(const RobotModel& robot, const Config& c);

/// Allocation-free variant for hot loops; out is resized to body_count().
void body_poses_into(const RobotModel& robot, const Config& c, std::vector<Pose>& out);

double config_distance(const Config& a, const Config& b);

/// Visits the max(2, ceil(len/eps) + 1) uniform samples of a -> b (endpoints
/// included) with one reused Config; the samples match discretize_edge
/// exactly.
template <typename Fn>
void for_each_edge_cfg(const Config& a, const Config& b, double eps, Fn&& fn) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const double len = config_distance(a, b);
    const size_t n = std::max<size_t>(2, static_cast<size_t>(std::ceil(len / eps)) + 1);
    Config c;
    c.coords.resize(a.coords.size());
    for (size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        for (size_t k = 0; k < a.coords.size(); ++k)
            c.coords[k] = a.coords[k] * (1.0 - t) + b.coords[k] * t;
        fn(static_cast<const Config&>(c));
    }
}

/// Uniform interpolation a -> b with max(2, ceil(len/eps) + 1) samples,
/// endpoints included.
std::vector<Config> discretize_edge(const Edge& e, double eps);

}  // namespace rgg
