#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "rgg/kinematics.hpp"

namespace rgg {

struct Obstacle {
    std::string name;
    std::shared_ptr<const TriMesh> mesh;
    Pose pose;  // scene placement; trials re-orient about the same translation
};

struct SceneParams {
    double eps = 0.1;             // edge discretization resolution (radians)
    double delta = 0.1;           // OBB fitting quality
    double slack = 0.0;           // sphere-spline contact slack
    double grid_resolution = 4.0; // DRM cell side length
    int robot_spheres = 3;
    int obstacle_spheres = 6;
    int sphere_samples = 24;
    int push_steps = 6;
    int mc_points = 4096;
    int n_nodes = 330;
    int k_neighbors = 3;
    uint64_t seed = 1;
};

struct SceneDoc {
    AABB workspace;
    RobotModel robot;
    std::vector<Obstacle> obstacles;
    SceneParams params;
};

/// Robot description: JSON with base pose, per-body mesh reference, joint
/// attachments and limits. Mesh paths resolve relative to the file.
RobotModel load_robot(const std::filesystem::path& path);

/// Scene description: JSON with workspace bounds, robot reference, obstacle
/// list and parameters. Referenced files must exist; bounds must be positive.
SceneDoc load_scene(const std::filesystem::path& path);

}  // namespace rgg
