#include "rgg/approximation.hpp"

#include <algorithm>
#include <stdexcept>

#include "rgg/rng.hpp"

namespace rgg {

namespace {

Vec3 sample_interior(const TriMesh& mesh, const AABB& box, RandomEngine& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Vec3 p{rng.in_range(box.min.x, box.max.x), rng.in_range(box.min.y, box.max.y),
                     rng.in_range(box.min.z, box.max.z)};
        if (point_in_mesh(p, mesh)) return p;
    }
    throw std::runtime_error("thin geometry");
}

// "Opposite" boundary point: farthest ray-boundary intersection along (p - c)
// from c. When p sits on the boundary (p == c) the direction degenerates, so
// cast along the closest triangle's normal instead and keep the farther exit.
Vec3 opposite_point(const TriMesh& mesh, const Vec3& c, const Vec3& p) {
    const Vec3 dir = p - c;
    if (norm2(dir) > 1e-24) return ray_exit_point(c, dir, mesh);

    size_t closest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        const double d = dist_point_triangle(c, mesh.triangle(i));
        if (d < best) {
            best = d;
            closest = i;
        }
    }
    const Triangle tri = mesh.triangle(closest);
    const Vec3 n = normalized(cross(tri[1] - tri[0], tri[2] - tri[0]));
    Vec3 out = c;
    for (const Vec3& d : {n, -n}) {
        try {
            const Vec3 exit = ray_exit_point(c, d, mesh);
            if (norm2(exit - c) > norm2(out - c)) out = exit;
        } catch (const std::runtime_error&) {
        }
    }
    return out;
}

}  // namespace

double mc_union_volume(std::span<const Sphere> spheres, const AABB& box, int mc_points,
                       uint64_t seed) {
    if (spheres.empty() || mc_points <= 0) return 0.0;
    RandomEngine rng(seed);
    long hits = 0;
    for (int i = 0; i < mc_points; ++i) {
        const Vec3 p{rng.in_range(box.min.x, box.max.x), rng.in_range(box.min.y, box.max.y),
                     rng.in_range(box.min.z, box.max.z)};
        for (const Sphere& s : spheres) {
            if (norm2(p - s.center) <= s.radius * s.radius) {
                ++hits;
                break;
            }
        }
    }
    return box.volume() * static_cast<double>(hits) / static_cast<double>(mc_points);
}

std::vector<Sphere> large_union_k(const std::vector<Sphere>& candidates, int k, int mc_points,
                                  uint64_t seed) {
    if (k < 0 || static_cast<size_t>(k) > candidates.size())
        throw std::invalid_argument("k exceeds candidate count");
    if (k == 0) return {};
    if (mc_points <= 0) throw std::invalid_argument("mc_points must be positive");

    AABB box = AABB::empty();
    for (const Sphere& s : candidates) {
        box.expand(s.center - Vec3{s.radius, s.radius, s.radius});
        box.expand(s.center + Vec3{s.radius, s.radius, s.radius});
    }

    // Fixed sample set shared by every marginal-volume comparison.
    RandomEngine rng(seed);
    std::vector<Vec3> samples;
    samples.reserve(mc_points);
    for (int i = 0; i < mc_points; ++i)
        samples.push_back({rng.in_range(box.min.x, box.max.x), rng.in_range(box.min.y, box.max.y),
                           rng.in_range(box.min.z, box.max.z)});

    std::vector<std::vector<char>> inside(candidates.size());
    for (size_t c = 0; c < candidates.size(); ++c) {
        inside[c].resize(samples.size());
        const Sphere& s = candidates[c];
        for (size_t i = 0; i < samples.size(); ++i)
            inside[c][i] = norm2(samples[i] - s.center) <= s.radius * s.radius;
    }

    std::vector<char> covered(samples.size(), 0);
    std::vector<char> selected(candidates.size(), 0);
    std::vector<Sphere> out;
    out.reserve(k);
    for (int round = 0; round < k; ++round) {
        long best_gain = -1;
        size_t best = 0;
        for (size_t c = 0; c < candidates.size(); ++c) {
            if (selected[c]) continue;
            long gain = 0;
            for (size_t i = 0; i < samples.size(); ++i)
                gain += inside[c][i] && !covered[i];
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        selected[best] = 1;
        for (size_t i = 0; i < samples.size(); ++i)
            if (inside[best][i]) covered[i] = 1;
        out.push_back(candidates[best]);
    }
    return out;
}

std::vector<Sphere> generate_spheres(const TriMesh& mesh, const SphereGenParams& params) {
    if (params.n_samples < params.k_spheres || params.k_spheres < 1)
        throw std::invalid_argument("need n_samples >= k_spheres >= 1");
    if (params.push_steps < 0) throw std::invalid_argument("push_steps must be nonnegative");
    if (std::abs(mesh.signed_volume()) <= 1e-12)
        throw std::invalid_argument("mesh has zero enclosed volume");

    const AABB box = mesh.bounds();
    RandomEngine rng(params.seed);
    std::vector<Sphere> candidates;
    candidates.reserve(params.n_samples);

    for (int i = 0; i < params.n_samples; ++i) {
        Vec3 p = sample_interior(mesh, box, rng);
        bool ok = true;
        for (int step = 0; step < params.push_steps && ok; ++step) {
            const auto [c, d] = nearest_boundary_point(p, mesh);
            try {
                const Vec3 opp = opposite_point(mesh, c, p);
                p = (c + opp) * 0.5;
            } catch (const std::runtime_error&) {
                ok = false;  // grazing ray; keep the candidate as pushed so far
            }
        }
        const double r = nearest_boundary_point(p, mesh).second;
        if (r > 1e-9) candidates.push_back({p, r});
    }

    if (static_cast<int>(candidates.size()) < params.k_spheres)
        throw std::runtime_error("thin geometry");
    return large_union_k(candidates, params.k_spheres, params.mc_points,
                         mix_seed(params.seed, 0x5e1ec7));
}

std::vector<std::vector<Vec3>> edge_point_cloud(const RobotModel& robot,
                                                std::span<const Config> cfgs) {
    if (cfgs.empty()) throw std::invalid_argument("empty configuration set");
    std::vector<std::vector<Vec3>> clouds(robot.body_count());
    for (size_t b = 0; b < robot.body_count(); ++b)
        clouds[b].reserve(cfgs.size() * robot.body_mesh(b).vertices.size());
    for (const Config& c : cfgs) {
        const auto posed = fk(robot, c);
        for (size_t b = 0; b < posed.size(); ++b)
            clouds[b].insert(clouds[b].end(), posed[b].world_vertices.begin(),
                             posed[b].world_vertices.end());
    }
    return clouds;
}

std::vector<OBB> build_component_outer(const RobotModel& robot, std::span<const Config> cfgs,
                                       double delta) {
    const auto clouds = edge_point_cloud(robot, cfgs);
    std::vector<OBB> out;
    out.reserve(clouds.size());
    for (const auto& cloud : clouds) out.push_back(obb_fit(cloud, delta));
    return out;
}

namespace {

// Good segment: every interior center strictly within r of the chord.
bool segment_good(std::span<const Vec3> centers, uint32_t i, uint32_t j, double r) {
    const Segment seg{centers[i], centers[j]};
    for (uint32_t m = i + 1; m < j; ++m)
        if (!(dist_point_segment(centers[m], seg) < r)) return false;
    return true;
}

}  // namespace

uint32_t good_bad_pt(std::span<const Vec3> centers, uint32_t i, uint32_t lo, uint32_t hi,
                     double r) {
    if (!(lo < hi)) throw std::invalid_argument("good_bad_pt needs lo < hi");
    if (!segment_good(centers, i, lo, r) || segment_good(centers, i, hi, r))
        throw std::runtime_error(
            "good_bad_pt bracket violated: segment goodness is not monotone here");
    while (hi - lo > 1) {
        const uint32_t mid = lo + (hi - lo) / 2;
        if (segment_good(centers, i, mid, r)) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::vector<uint32_t> shortcut_indices(std::span<const Vec3> centers, double r) {
    if (centers.empty()) throw std::invalid_argument("empty center list");
    const uint32_t n = static_cast<uint32_t>(centers.size());
    std::vector<uint32_t> out{0};
    if (n == 1) return out;

    uint32_t i = 0;
    while (i < n - 1) {
        // Doubling probe: segment(i, i+1) is good by definition, so start the
        // search from the first stride that can skip a center.
        uint32_t prev = i + 1;
        uint32_t next = n - 1;
        for (uint32_t stride = 2;; stride *= 2) {
            const uint32_t k = std::min(i + stride, n - 1);
            if (!segment_good(centers, i, k, r)) {
                next = good_bad_pt(centers, i, prev, k, r);
                break;
            }
            if (k == n - 1) break;  // reached the end with a good segment
            prev = k;
        }
        out.push_back(next);
        i = next;
    }
    return out;
}

std::vector<Vec3> shortcut_spline(std::span<const Vec3> centers, double r) {
    std::vector<Vec3> out;
    for (uint32_t idx : shortcut_indices(centers, r)) out.push_back(centers[idx]);
    return out;
}

std::vector<Spline> build_component_inner(const RobotModel& robot, std::span<const Config> cfgs,
                                          std::span<const std::vector<Sphere>> body_spheres,
                                          int component_flat) {
    if (cfgs.empty()) throw std::invalid_argument("empty configuration set");
    if (body_spheres.size() != robot.body_count())
        throw std::invalid_argument("sphere sets do not match body count");

    std::vector<std::vector<Pose>> poses;
    poses.reserve(cfgs.size());
    for (const Config& c : cfgs) poses.push_back(body_poses(robot, c));

    std::vector<Spline> out;
    std::vector<Vec3> centers;
    for (size_t b = 0; b < robot.body_count(); ++b) {
        for (size_t s = 0; s < body_spheres[b].size(); ++s) {
            const Sphere& sphere = body_spheres[b][s];
            centers.clear();
            centers.reserve(cfgs.size());
            for (const auto& cfg_poses : poses) centers.push_back(cfg_poses[b].apply(sphere.center));

            Spline spline;
            spline.radius = sphere.radius;
            spline.source = {component_flat, static_cast<int>(b), static_cast<int>(s)};
            spline.center_indices = shortcut_indices(centers, sphere.radius);
            spline.points.reserve(spline.center_indices.size());
            for (uint32_t idx : spline.center_indices) spline.points.push_back(centers[idx]);
            out.push_back(std::move(spline));
        }
    }
    return out;
}

void ObstacleApprox::set_pose(const Pose& pose) {
    current_pose = pose;
    AABB box = AABB::empty();
    for (const Vec3& v : mesh->vertices) box.expand(pose.apply(v));
    outer = box;
}

std::vector<Sphere> ObstacleApprox::posed_spheres() const {
    std::vector<Sphere> out;
    out.reserve(local_spheres.size());
    for (const Sphere& s : local_spheres) out.push_back({current_pose.apply(s.center), s.radius});
    return out;
}

ObstacleApprox build_obstacle_approx(std::shared_ptr<const TriMesh> mesh, const Pose& pose,
                                     const SphereGenParams& params) {
    ObstacleApprox a;
    a.mesh = std::move(mesh);
    a.local_spheres = generate_spheres(*a.mesh, params);
    a.set_pose(pose);
    return a;
}

}  // namespace rgg
