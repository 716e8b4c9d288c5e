#pragma once

#include <span>

#include "rgg/roadmap.hpp"
#include "rgg/scene.hpp"

namespace rgg {

/// Grid-based dynamic roadmap baseline: a uniform partition of the workspace
/// into cubic cells, each mapped to the components whose swept geometry
/// intersects it (exact triangle-box overlap per sampled configuration).
struct DrmIndex {
    AABB bounds;
    double resolution = 4.0;
    int nx = 0, ny = 0, nz = 0;
    std::vector<std::vector<int32_t>> cell_components;  // sorted unique flat ids
    size_t component_count = 0;

    size_t cell_count() const { return static_cast<size_t>(nx) * ny * nz; }
    size_t cell_index(int ix, int iy, int iz) const {
        return (static_cast<size_t>(iz) * ny + iy) * nx + ix;
    }
    /// Cell boxes are clipped to the workspace bounds.
    AABB cell_box(int ix, int iy, int iz) const;
};

DrmIndex drm_preprocess(const Roadmap& roadmap, const RobotModel& robot, const AABB& bounds,
                        double resolution);

/// Components mapped from any cell overlapping any obstacle's posed AABB are
/// gray; everything else is green. DRM never labels red.
LabelMap drm_update(const DrmIndex& index, std::span<const Obstacle> obstacles,
                    std::span<const Pose> poses, uint64_t epoch = 0);

}  // namespace rgg
