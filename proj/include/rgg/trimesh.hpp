#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "rgg/geometry.hpp"

namespace rgg {

/// Closed, consistently oriented triangle mesh. Construct through create()
/// (or load_off), which rejects open, inconsistently wound, or zero-volume
/// input.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;

    static TriMesh create(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles);

    Triangle triangle(size_t i) const {
        const auto& t = triangles[i];
        return {vertices[t[0]], vertices[t[1]], vertices[t[2]]};
    }

    /// Signed enclosed volume (positive for outward-wound meshes).
    double signed_volume() const;

    AABB bounds() const;
};

/// Ray-crossing parity with deterministic re-selection of the ray direction
/// on degenerate hits. Points on the surface count as inside.
bool point_in_mesh(const Vec3& p, const TriMesh& m);

/// Closest point on any triangle of m and its distance.
std::pair<Vec3, double> nearest_boundary_point(const Vec3& p, const TriMesh& m);

/// Farthest intersection of ray(origin, dir) with the mesh boundary.
/// Throws "ray misses boundary" when no triangle is hit.
Vec3 ray_exit_point(const Vec3& origin, const Vec3& dir, const TriMesh& m);

TriMesh load_off(const std::filesystem::path& path);
void save_off(const TriMesh& m, const std::filesystem::path& path);

// Factory shapes, all watertight and outward-wound.
TriMesh make_box(const Vec3& min, const Vec3& max);
TriMesh make_tetrahedron(double scale = 1.0);
TriMesh make_icosphere(double radius, int subdivisions);

}  // namespace rgg
