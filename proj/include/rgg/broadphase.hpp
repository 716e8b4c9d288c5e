#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rgg/geometry.hpp"

namespace rgg {

/// Static binary AABB hierarchy built by median split on the longest axis,
/// with small multi-item leaves stored contiguously. Queries are exact at the
/// AABB level: they return exactly the ids whose stored box overlaps the
/// query (closed sets), independent of build order.
class AabbTree {
 public:
    AabbTree() = default;

    static AabbTree build(std::vector<std::pair<int64_t, AABB>> items);

    /// Ids whose stored AABB overlaps q, ascending.
    std::vector<int64_t> query(const AABB& q) const;

    /// Ids whose stored AABB overlaps the sphere (exact box-sphere distance,
    /// not the sphere's AABB), ascending.
    std::vector<int64_t> query(const Sphere& s) const;

    /// Allocation-light variants: append hits to out in deterministic
    /// traversal order (not sorted).
    void query_into(const AABB& q, std::vector<int64_t>& out) const;
    void query_into(const Sphere& s, std::vector<int64_t>& out) const;

    /// Runs up to 32 sphere queries in one traversal; appends (sphere index,
    /// id) pairs. Hit sets per sphere equal the single-sphere queries.
    void query_into(std::span<const Sphere> spheres,
                    std::vector<std::pair<int32_t, int64_t>>& out) const;

    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

 private:
    static constexpr int32_t kLeafSize = 4;

    // Node boxes are conservatively rounded to float (min down, max up);
    // pruning with them can only keep extra nodes, and the exact double item
    // test at the leaves decides membership.
    struct Node {
        float lo[3];
        float hi[3];
        int32_t left = -1;   // < 0 marks a leaf
        int32_t right = -1;  // leaf: begin index
        int32_t count = 0;   // leaf: item count

        void set_box(const AABB& box);
        bool overlaps(const AABB& q) const {
            return lo[0] <= q.max.x && hi[0] >= q.min.x && lo[1] <= q.max.y &&
                   hi[1] >= q.min.y && lo[2] <= q.max.z && hi[2] >= q.min.z;
        }
        double dist2(const Vec3& p) const {
            const double dx = std::max({lo[0] - p.x, 0.0, p.x - hi[0]});
            const double dy = std::max({lo[1] - p.y, 0.0, p.y - hi[1]});
            const double dz = std::max({lo[2] - p.z, 0.0, p.z - hi[2]});
            return dx * dx + dy * dy + dz * dz;
        }
    };

    int32_t build_range(int32_t lo, int32_t hi);

    std::vector<Node> nodes_;
    std::vector<std::pair<int64_t, AABB>> items_;  // permuted into leaf order
    int32_t root_ = -1;
};

}  // namespace rgg
