#include "rgg/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace rgg {

RobotModel RobotModel::create(Pose base_pose, std::vector<BodySpec> bodies) {
    if (bodies.empty()) throw std::invalid_argument("robot needs at least one body");
    if (!base_pose.rotation.is_rotation()) throw std::invalid_argument("base pose rotation invalid");

    RobotModel r;
    r.base_pose_ = base_pose;
    for (size_t i = 0; i < bodies.size(); ++i) {
        const JointSpec& j = bodies[i].joint;
        if (j.parent < -1 || j.parent >= static_cast<int>(i))
            throw std::invalid_argument("joint parents must form a tree in topological order");
        if (j.spherical) {
            r.angle_offset_.push_back(r.dof_count_);
            r.dof_count_ += 3;
            for (const auto& lim : j.limits) {
                if (!(lim[0] <= lim[1])) throw std::invalid_argument("joint limit lo > hi");
                r.limits_.push_back({lim[0], lim[1]});
            }
        } else {
            r.angle_offset_.push_back(-1);
        }
    }
    r.bodies_ = std::move(bodies);
    return r;
}

void body_poses_into(const RobotModel& robot, const Config& c, std::vector<Pose>& out) {
    if (static_cast<int>(c.coords.size()) != robot.dof_count())
        throw std::invalid_argument("configuration has wrong dof count");

    out.resize(robot.body_count());
    for (size_t i = 0; i < robot.body_count(); ++i) {
        const JointSpec& j = robot.body(i).joint;
        const Pose& parent = j.parent < 0 ? robot.base_pose() : out[j.parent];
        Mat3 rot = Mat3::identity();
        if (j.spherical) {
            const int o = robot.angle_offset(i);
            rot = Mat3::rot_z(c.coords[o]) * Mat3::rot_y(c.coords[o + 1]) *
                  Mat3::rot_x(c.coords[o + 2]);
        }
        out[i] = parent * Pose{rot, j.offset};
    }
}

std::vector<Pose> body_poses(const RobotModel& robot, const Config& c) {
    std::vector<Pose> poses;
    body_poses_into(robot, c, poses);
    return poses;
}

std::vector<PosedBody> fk(const RobotModel& robot, const Config& c) {
    const std::vector<Pose> poses = body_poses(robot, c);
    std::vector<PosedBody> out(robot.body_count());
    for (size_t i = 0; i < robot.body_count(); ++i) {
        out[i].body_index = static_cast<int>(i);
        out[i].pose = poses[i];
        const auto& verts = robot.body_mesh(i).vertices;
        out[i].world_vertices.reserve(verts.size());
        for (const Vec3& v : verts) out[i].world_vertices.push_back(poses[i].apply(v));
    }
    return out;
}

double config_distance(const Config& a, const Config& b) {
    if (a.coords.size() != b.coords.size())
        throw std::invalid_argument("configurations have different dof counts");
    double d2 = 0.0;
    for (size_t i = 0; i < a.coords.size(); ++i) {
        const double d = a.coords[i] - b.coords[i];
        d2 += d * d;
    }
    return std::sqrt(d2);
}

std::vector<Config> discretize_edge(const Edge& e, double eps) {
    std::vector<Config> out;
    for_each_edge_cfg(e.a, e.b, eps, [&out](const Config& c) { out.push_back(c); });
    return out;
}

}  // namespace rgg
