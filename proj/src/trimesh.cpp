#include "rgg/trimesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rgg {

TriMesh TriMesh::create(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> triangles) {
    if (vertices.empty() || triangles.empty())
        throw std::invalid_argument("mesh needs vertices and triangles");
    for (const Vec3& v : vertices)
        if (!is_finite(v)) throw std::invalid_argument("mesh vertex is not finite");

    const int n = static_cast<int>(vertices.size());
    std::map<std::pair<int, int>, int> directed;
    for (const auto& t : triangles) {
        for (int k = 0; k < 3; ++k) {
            if (t[k] < 0 || t[k] >= n) throw std::invalid_argument("triangle index out of range");
            const int a = t[k], b = t[(k + 1) % 3];
            if (a == b) throw std::invalid_argument("degenerate triangle edge");
            ++directed[{a, b}];
        }
    }
    // Closed orientable surface: every directed edge once, with its reverse
    // present, i.e. each undirected edge shared by exactly 2 triangles.
    for (const auto& [e, count] : directed) {
        if (count != 1) throw std::invalid_argument("mesh is not watertight");
        if (!directed.contains({e.second, e.first}))
            throw std::invalid_argument("mesh is not watertight");
    }

    TriMesh m;
    m.vertices = std::move(vertices);
    m.triangles = std::move(triangles);
    if (std::abs(m.signed_volume()) <= 1e-12)
        throw std::invalid_argument("mesh has zero enclosed volume");
    return m;
}

double TriMesh::signed_volume() const {
    double v = 0.0;
    for (const auto& t : triangles) {
        const Vec3& a = vertices[t[0]];
        const Vec3& b = vertices[t[1]];
        const Vec3& c = vertices[t[2]];
        v += dot(a, cross(b, c));
    }
    return v / 6.0;
}

AABB TriMesh::bounds() const { return aabb_of(vertices); }

namespace {

struct RayHit {
    bool hit = false;
    bool degenerate = false;
    double t = 0.0;
};

// Moller-Trumbore. Reports hits with t >= -1e-12; flags hits too close to a
// triangle edge or to a parallel configuration as degenerate so the caller
// can retry with a different direction.
RayHit ray_triangle(const Vec3& origin, const Vec3& dir, const Triangle& tri) {
    RayHit out;
    const Vec3 e1 = tri[1] - tri[0];
    const Vec3 e2 = tri[2] - tri[0];
    const Vec3 h = cross(dir, e2);
    const double a = dot(e1, h);
    const double scale = norm(e1) * norm(e2);
    if (std::abs(a) <= 1e-12 * std::max(scale, 1e-30)) {
        // Parallel; degenerate only if the ray is near the triangle plane.
        const Vec3 n = cross(e1, e2);
        const double nn = norm(n);
        if (nn > 0.0 && std::abs(dot(n / nn, origin - tri[0])) <= 1e-9) out.degenerate = true;
        return out;
    }
    const double f = 1.0 / a;
    const Vec3 s = origin - tri[0];
    const double u = f * dot(s, h);
    const Vec3 q = cross(s, e1);
    const double v = f * dot(dir, q);
    const double t = f * dot(e2, q);
    const double edge_tol = 1e-10;
    if (u < -edge_tol || v < -edge_tol || u + v > 1.0 + edge_tol) return out;
    if (t < -1e-12) return out;
    if (u < edge_tol || v < edge_tol || u + v > 1.0 - edge_tol) {
        out.degenerate = true;
        return out;
    }
    out.hit = true;
    out.t = t;
    return out;
}

// Fixed, input-independent direction sequence for parity rays.
Vec3 probe_direction(int attempt) {
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    const double z = 1.0 - 2.0 * ((attempt * 7 % 97) + 0.5) / 97.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = ga * (attempt * 13 + 1);
    return {r * std::cos(phi), r * std::sin(phi), z};
}

}  // namespace

bool point_in_mesh(const Vec3& p, const TriMesh& m) {
    // Surface points count as inside (closed set).
    for (size_t i = 0; i < m.triangles.size(); ++i)
        if (dist_point_triangle(p, m.triangle(i)) <= 1e-12) return true;

    for (int attempt = 0; attempt < 32; ++attempt) {
        const Vec3 dir = probe_direction(attempt);
        int crossings = 0;
        bool ok = true;
        for (size_t i = 0; i < m.triangles.size() && ok; ++i) {
            const RayHit hit = ray_triangle(p, dir, m.triangle(i));
            if (hit.degenerate) ok = false;
            else if (hit.hit && hit.t > 1e-12) ++crossings;
        }
        if (ok) return (crossings % 2) == 1;
    }
    throw std::runtime_error("point_in_mesh: no robust ray direction found");
}

std::pair<Vec3, double> nearest_boundary_point(const Vec3& p, const TriMesh& m) {
    Vec3 best{};
    double best_d2 = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < m.triangles.size(); ++i) {
        const Vec3 q = closest_point_triangle(p, m.triangle(i));
        const double d2 = norm2(q - p);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = q;
        }
    }
    return {best, std::sqrt(best_d2)};
}

Vec3 ray_exit_point(const Vec3& origin, const Vec3& dir, const TriMesh& m) {
    if (norm2(dir) <= 0.0) throw std::invalid_argument("zero ray direction");
    double best_t = -std::numeric_limits<double>::infinity();
    bool found = false;
    for (size_t i = 0; i < m.triangles.size(); ++i) {
        const Triangle tri = m.triangle(i);
        // Accept edge-adjacent hits here; only the farthest one matters.
        const Vec3 e1 = tri[1] - tri[0];
        const Vec3 e2 = tri[2] - tri[0];
        const Vec3 h = cross(dir, e2);
        const double a = dot(e1, h);
        if (std::abs(a) <= 1e-14 * std::max(norm(e1) * norm(e2), 1e-30)) continue;
        const double f = 1.0 / a;
        const Vec3 s = origin - tri[0];
        const double u = f * dot(s, h);
        const Vec3 q = cross(s, e1);
        const double v = f * dot(dir, q);
        const double t = f * dot(e2, q);
        if (u < -1e-10 || v < -1e-10 || u + v > 1.0 + 1e-10 || t < -1e-12) continue;
        if (t > best_t) {
            best_t = t;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("ray misses boundary");
    return origin + dir * best_t;
}

TriMesh load_off(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mesh file: " + path.string());

    auto next_line = [&in](std::string& line) {
        while (std::getline(in, line)) {
            const size_t pos = line.find_first_not_of(" \t\r\n");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line)) throw std::runtime_error("empty mesh file: " + path.string());
    {
        std::istringstream hs(line);
        std::string magic;
        hs >> magic;
        if (magic != "OFF") throw std::runtime_error("not an OFF file: " + path.string());
    }
    if (!next_line(line)) throw std::runtime_error("truncated OFF header: " + path.string());
    size_t nv = 0, nf = 0, ne = 0;
    {
        std::istringstream cs(line);
        if (!(cs >> nv >> nf)) throw std::runtime_error("bad OFF counts: " + path.string());
        cs >> ne;  // optional, ignored
    }

    std::vector<Vec3> verts;
    verts.reserve(nv);
    for (size_t i = 0; i < nv; ++i) {
        if (!next_line(line)) throw std::runtime_error("truncated OFF vertices: " + path.string());
        std::istringstream vs(line);
        Vec3 v;
        if (!(vs >> v.x >> v.y >> v.z)) throw std::runtime_error("bad OFF vertex: " + path.string());
        verts.push_back(v);
    }
    std::vector<std::array<int, 3>> tris;
    tris.reserve(nf);
    for (size_t i = 0; i < nf; ++i) {
        if (!next_line(line)) throw std::runtime_error("truncated OFF faces: " + path.string());
        std::istringstream fs(line);
        int k = 0;
        if (!(fs >> k) || k != 3)
            throw std::runtime_error("OFF face is not a triangle: " + path.string());
        std::array<int, 3> t{};
        if (!(fs >> t[0] >> t[1] >> t[2]))
            throw std::runtime_error("bad OFF face: " + path.string());
        tris.push_back(t);
    }
    return TriMesh::create(std::move(verts), std::move(tris));
}

void save_off(const TriMesh& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write mesh file: " + path.string());
    out << "OFF\n" << m.vertices.size() << ' ' << m.triangles.size() << " 0\n";
    char buf[96];
    for (const Vec3& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << buf;
    }
    for (const auto& t : m.triangles) out << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

TriMesh make_box(const Vec3& lo, const Vec3& hi) {
    const std::vector<Vec3> v = {{lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z},
                                 {lo.x, hi.y, lo.z}, {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z},
                                 {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z}};
    const std::vector<std::array<int, 3>> t = {
        {0, 2, 1}, {0, 3, 2},  // bottom
        {4, 5, 6}, {4, 6, 7},  // top
        {0, 1, 5}, {0, 5, 4},  // front
        {1, 2, 6}, {1, 6, 5},  // right
        {2, 3, 7}, {2, 7, 6},  // back
        {3, 0, 4}, {3, 4, 7},  // left
    };
    return TriMesh::create(v, t);
}

TriMesh make_tetrahedron(double scale) {
    const double s = scale;
    const std::vector<Vec3> v = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    const std::vector<std::array<int, 3>> t = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
    return TriMesh::create(v, t);
}

TriMesh make_icosphere(double radius, int subdivisions) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                           {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                           {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
    std::vector<std::array<int, 3>> t = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            const auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            v.push_back((v[a] + v[b]) * 0.5);
            const int id = static_cast<int>(v.size()) - 1;
            midpoint[key] = id;
            return id;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(t.size() * 4);
        for (const auto& tri : t) {
            const int ab = mid(tri[0], tri[1]);
            const int bc = mid(tri[1], tri[2]);
            const int ca = mid(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        t = std::move(next);
    }
    for (Vec3& p : v) p = normalized(p) * radius;
    return TriMesh::create(std::move(v), std::move(t));
}

}  // namespace rgg
