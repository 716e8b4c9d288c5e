#include "rgg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "rgg/parallel.hpp"

namespace rgg {

namespace {

struct PosedObstacle {
    std::vector<Vec3> vertices;
    AABB box;
    const TriMesh* mesh;
    Pose inverse_pose;

    Triangle triangle(size_t i) const {
        const auto& t = mesh->triangles[i];
        return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
    }
};

PosedObstacle pose_obstacle(const Obstacle& o, const Pose& pose) {
    PosedObstacle p;
    p.mesh = o.mesh.get();
    p.inverse_pose = pose.inverse();
    p.vertices.reserve(o.mesh->vertices.size());
    AABB box = AABB::empty();
    for (const Vec3& v : o.mesh->vertices) {
        p.vertices.push_back(pose.apply(v));
        box.expand(p.vertices.back());
    }
    p.box = box;
    return p;
}

bool body_hits_obstacle(const TriMesh& body_mesh, std::span<const Vec3> body_vertices,
                        const PosedObstacle& obstacle) {
    const TriMesh& mesh = body_mesh;
    for (const auto& t : mesh.triangles) {
        const Triangle tri{body_vertices[t[0]], body_vertices[t[1]], body_vertices[t[2]]};
        for (size_t j = 0; j < obstacle.mesh->triangles.size(); ++j)
            if (tri_intersects_tri(tri, obstacle.triangle(j))) return true;
    }
    // Surface-disjoint but possibly swallowed whole: probe one vertex.
    return point_in_mesh(obstacle.inverse_pose.apply(body_vertices[0]), *obstacle.mesh);
}

// Reused across configurations so per-config validation stays allocation-free.
struct CollideScratch {
    std::vector<Pose> poses;
    std::vector<Vec3> vertices;
};

bool collide_posed(const RobotModel& robot, const Config& c,
                   std::span<const PosedObstacle> obstacles, CollideScratch& scratch) {
    body_poses_into(robot, c, scratch.poses);
    for (size_t b = 0; b < robot.body_count(); ++b) {
        const TriMesh& mesh = robot.body_mesh(b);
        scratch.vertices.resize(mesh.vertices.size());
        AABB body_box = AABB::empty();
        for (size_t v = 0; v < mesh.vertices.size(); ++v) {
            scratch.vertices[v] = scratch.poses[b].apply(mesh.vertices[v]);
            body_box.expand(scratch.vertices[v]);
        }
        for (const PosedObstacle& obstacle : obstacles) {
            if (!body_box.overlaps(obstacle.box)) continue;
            if (body_hits_obstacle(mesh, scratch.vertices, obstacle)) return true;
        }
    }
    return false;
}

std::vector<PosedObstacle> pose_all(std::span<const Obstacle> obstacles,
                                    std::span<const Pose> poses) {
    if (obstacles.size() != poses.size())
        throw std::invalid_argument("pose count does not match obstacle count");
    std::vector<PosedObstacle> out;
    out.reserve(obstacles.size());
    for (size_t i = 0; i < obstacles.size(); ++i)
        out.push_back(pose_obstacle(obstacles[i], poses[i]));
    return out;
}

}  // namespace

bool collide_config(const RobotModel& robot, const Config& c, std::span<const Obstacle> obstacles,
                    std::span<const Pose> poses) {
    CollideScratch scratch;
    return collide_posed(robot, c, pose_all(obstacles, poses), scratch);
}

size_t GroundTruth::invalid_count() const {
    return static_cast<size_t>(std::count(invalid.begin(), invalid.end(), uint8_t{1}));
}

GroundTruth ground_truth(const Roadmap& roadmap, const RobotModel& robot,
                         std::span<const Obstacle> obstacles, std::span<const Pose> poses) {
    const std::vector<PosedObstacle> posed = pose_all(obstacles, poses);

    GroundTruth gt;
    gt.invalid.assign(roadmap.component_count(), 0);
    parallel_for(roadmap.component_count(), [&](size_t flat) {
        thread_local CollideScratch scratch;
        bool hit = false;
        for_each_component_cfg(roadmap, roadmap.component(flat), [&](const Config& c) {
            if (!hit && collide_posed(robot, c, posed, scratch)) hit = true;
        });
        gt.invalid[flat] = hit ? 1 : 0;
    });
    return gt;
}

}  // namespace rgg
