#pragma once

#include <span>

#include "rgg/roadmap.hpp"
#include "rgg/scene.hpp"

namespace rgg {

/// Exact per-configuration collision test: any posed robot triangle against
/// any posed obstacle triangle (AABB broad phase, triangle-triangle narrow
/// phase), plus a containment probe for a body swallowed whole.
bool collide_config(const RobotModel& robot, const Config& c, std::span<const Obstacle> obstacles,
                    std::span<const Pose> poses);

/// Ground truth at resolution eps: a component is invalid iff any config in
/// cfg(component) collides.
struct GroundTruth {
    std::vector<uint8_t> invalid;  // flat component order

    size_t invalid_count() const;
    size_t valid_count() const { return invalid.size() - invalid_count(); }
};

GroundTruth ground_truth(const Roadmap& roadmap, const RobotModel& robot,
                         std::span<const Obstacle> obstacles, std::span<const Pose> poses);

}  // namespace rgg
