#include "rgg/drm.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <stdexcept>

namespace rgg {

AABB DrmIndex::cell_box(int ix, int iy, int iz) const {
    const Vec3 lo{bounds.min.x + ix * resolution, bounds.min.y + iy * resolution,
                  bounds.min.z + iz * resolution};
    const Vec3 hi = comp_min(lo + Vec3{resolution, resolution, resolution}, bounds.max);
    return {lo, hi};
}

namespace {

struct CellRange {
    int lo[3];
    int hi[3];
    bool empty = false;
};

CellRange cell_range(const DrmIndex& index, const AABB& box) {
    CellRange r;
    const int dims[3] = {index.nx, index.ny, index.nz};
    for (int a = 0; a < 3; ++a) {
        const double lo = (box.min[a] - index.bounds.min[a]) / index.resolution;
        const double hi = (box.max[a] - index.bounds.min[a]) / index.resolution;
        r.lo[a] = std::max(0, static_cast<int>(std::floor(lo)));
        r.hi[a] = std::min(dims[a] - 1, static_cast<int>(std::floor(hi)));
        if (r.lo[a] > r.hi[a]) r.empty = true;
    }
    return r;
}

}  // namespace

DrmIndex drm_preprocess(const Roadmap& roadmap, const RobotModel& robot, const AABB& bounds,
                        double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");

    DrmIndex index;
    index.bounds = bounds;
    index.resolution = resolution;
    const Vec3 ext = bounds.extents();
    index.nx = std::max(1, static_cast<int>(std::ceil(ext.x / resolution - 1e-12)));
    index.ny = std::max(1, static_cast<int>(std::ceil(ext.y / resolution - 1e-12)));
    index.nz = std::max(1, static_cast<int>(std::ceil(ext.z / resolution - 1e-12)));
    index.component_count = roadmap.component_count();
    index.cell_components.assign(index.cell_count(), {});

    for (size_t flat = 0; flat < roadmap.component_count(); ++flat) {
        for (const Config& c : component_cfgs(roadmap, roadmap.component(flat))) {
            for (const PosedBody& body : fk(robot, c)) {
                const TriMesh& mesh = robot.body_mesh(body.body_index);
                for (const auto& t : mesh.triangles) {
                    const Triangle tri{body.world_vertices[t[0]], body.world_vertices[t[1]],
                                       body.world_vertices[t[2]]};
                    AABB tri_box = AABB::empty();
                    for (const Vec3& v : tri) tri_box.expand(v);
                    const CellRange range = cell_range(index, tri_box);
                    if (range.empty) continue;
                    for (int iz = range.lo[2]; iz <= range.hi[2]; ++iz)
                        for (int iy = range.lo[1]; iy <= range.hi[1]; ++iy)
                            for (int ix = range.lo[0]; ix <= range.hi[0]; ++ix) {
                                if (tri_overlaps_aabb(tri, index.cell_box(ix, iy, iz)))
                                    index.cell_components[index.cell_index(ix, iy, iz)]
                                        .push_back(static_cast<int32_t>(flat));
                            }
                }
            }
        }
    }
    for (auto& cell : index.cell_components) {
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    }
    return index;
}

LabelMap drm_update(const DrmIndex& index, std::span<const Obstacle> obstacles,
                    std::span<const Pose> poses, uint64_t epoch) {
    if (obstacles.size() != poses.size())
        throw std::invalid_argument("pose count does not match obstacle count");

    // Union of the cell sets overlapped by the obstacle boxes: the set of
    // components needing revalidation, which is what this grid scheme
    // produces on every update.
    std::unordered_set<int32_t> affected;
    for (size_t o = 0; o < obstacles.size(); ++o) {
        AABB box = AABB::empty();
        for (const Vec3& v : obstacles[o].mesh->vertices) box.expand(poses[o].apply(v));
        const CellRange range = cell_range(index, box);
        if (range.empty) continue;
        for (int iz = range.lo[2]; iz <= range.hi[2]; ++iz)
            for (int iy = range.lo[1]; iy <= range.hi[1]; ++iy)
                for (int ix = range.lo[0]; ix <= range.hi[0]; ++ix) {
                    // Boundary cells are clipped, so re-check the actual box.
                    if (!index.cell_box(ix, iy, iz).overlaps(box)) continue;
                    const auto& cell = index.cell_components[index.cell_index(ix, iy, iz)];
                    affected.insert(cell.begin(), cell.end());
                }
    }

    LabelMap out;
    out.epoch = epoch;
    out.labels.assign(index.component_count, Label::Green);
    for (int32_t comp : affected) out.labels[comp] = Label::Gray;
    return out;
}

}  // namespace rgg
