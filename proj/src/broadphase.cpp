#include "rgg/broadphase.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace rgg {

namespace {

float round_down(double v) {
    const float f = static_cast<float>(v);
    return static_cast<double>(f) <= v ? f : std::nextafterf(f, -INFINITY);
}

float round_up(double v) {
    const float f = static_cast<float>(v);
    return static_cast<double>(f) >= v ? f : std::nextafterf(f, INFINITY);
}

}  // namespace

void AabbTree::Node::set_box(const AABB& box) {
    lo[0] = round_down(box.min.x);
    lo[1] = round_down(box.min.y);
    lo[2] = round_down(box.min.z);
    hi[0] = round_up(box.max.x);
    hi[1] = round_up(box.max.y);
    hi[2] = round_up(box.max.z);
}

AabbTree AabbTree::build(std::vector<std::pair<int64_t, AABB>> items) {
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < items.size(); ++i)
        if (items[i].first == items[i - 1].first)
            throw std::invalid_argument("duplicate item id in tree build");

    AabbTree t;
    t.items_ = std::move(items);
    if (t.items_.empty()) return t;
    t.nodes_.reserve(2 * t.items_.size() / kLeafSize + 2);
    t.root_ = t.build_range(0, static_cast<int32_t>(t.items_.size()));
    return t;
}

int32_t AabbTree::build_range(int32_t lo, int32_t hi) {
    const int32_t node_id = static_cast<int32_t>(nodes_.size());
    nodes_.emplace_back();

    AABB box = AABB::empty();
    for (int32_t i = lo; i < hi; ++i) box.expand(items_[i].second);
    nodes_[node_id].set_box(box);

    if (hi - lo <= kLeafSize) {
        nodes_[node_id].left = -1;
        nodes_[node_id].right = lo;
        nodes_[node_id].count = hi - lo;
        return node_id;
    }

    AABB centroid = AABB::empty();
    for (int32_t i = lo; i < hi; ++i) centroid.expand(items_[i].second.center());
    const Vec3 ext = centroid.extents();
    int axis = 0;
    if (ext.y > ext.x) axis = 1;
    if (ext.z > ext[axis]) axis = 2;

    const int32_t mid = lo + (hi - lo) / 2;
    std::nth_element(items_.begin() + lo, items_.begin() + mid, items_.begin() + hi,
                     [axis](const auto& a, const auto& b) {
                         const double ca = a.second.center()[axis];
                         const double cb = b.second.center()[axis];
                         return ca < cb || (ca == cb && a.first < b.first);
                     });

    const int32_t left = build_range(lo, mid);
    const int32_t right = build_range(mid, hi);
    nodes_[node_id].left = left;
    nodes_[node_id].right = right;
    return node_id;
}

// Median splits keep the tree balanced, so the traversal stack stays within
// the tree height (about log2 n) plus slack.
void AabbTree::query_into(const AABB& q, std::vector<int64_t>& out) const {
    if (root_ < 0) return;
    int32_t stack[64];
    int top = 0;
    stack[top++] = root_;
    while (top > 0) {
        const Node& n = nodes_[stack[--top]];
        if (!n.overlaps(q)) continue;
        if (n.left < 0) {
            for (int32_t i = n.right; i < n.right + n.count; ++i)
                if (items_[i].second.overlaps(q)) out.push_back(items_[i].first);
        } else {
            stack[top++] = n.left;
            stack[top++] = n.right;
        }
    }
}

void AabbTree::query_into(const Sphere& s, std::vector<int64_t>& out) const {
    if (root_ < 0) return;
    const double r2 = s.radius * s.radius;
    int32_t stack[64];
    int top = 0;
    stack[top++] = root_;
    while (top > 0) {
        const Node& n = nodes_[stack[--top]];
        if (n.dist2(s.center) > r2) continue;
        if (n.left < 0) {
            for (int32_t i = n.right; i < n.right + n.count; ++i)
                if (items_[i].second.dist2(s.center) <= r2) out.push_back(items_[i].first);
        } else {
            stack[top++] = n.left;
            stack[top++] = n.right;
        }
    }
}

void AabbTree::query_into(std::span<const Sphere> spheres,
                          std::vector<std::pair<int32_t, int64_t>>& out) const {
    if (root_ < 0 || spheres.empty()) return;
    if (spheres.size() > 32) throw std::invalid_argument("batched query limited to 32 spheres");
    const uint32_t full = spheres.size() == 32 ? ~0u : (1u << spheres.size()) - 1u;

    // Children only re-test spheres that reached their parent.
    std::pair<int32_t, uint32_t> stack[64];
    int top = 0;
    stack[top++] = {root_, full};
    while (top > 0) {
        const auto [node_id, in_mask] = stack[--top];
        const Node& n = nodes_[node_id];
        uint32_t mask = 0;
        for (uint32_t m = in_mask; m;) {
            const int s = std::countr_zero(m);
            m &= m - 1;
            if (n.dist2(spheres[s].center) <= spheres[s].radius * spheres[s].radius)
                mask |= 1u << s;
        }
        if (!mask) continue;
        if (n.left < 0) {
            for (int32_t i = n.right; i < n.right + n.count; ++i) {
                for (uint32_t m = mask; m;) {
                    const int s = std::countr_zero(m);
                    m &= m - 1;
                    if (items_[i].second.dist2(spheres[s].center) <=
                        spheres[s].radius * spheres[s].radius)
                        out.emplace_back(s, items_[i].first);
                }
            }
        } else {
            stack[top++] = {n.left, mask};
            stack[top++] = {n.right, mask};
        }
    }
}

std::vector<int64_t> AabbTree::query(const AABB& q) const {
    std::vector<int64_t> out;
    query_into(q, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int64_t> AabbTree::query(const Sphere& s) const {
    std::vector<int64_t> out;
    query_into(s, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rgg
