#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace rgg {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    bool operator==(const Vec3& o) const = default;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    void set(int i, double v) {
        if (i == 0) x = v;
        else if (i == 1) y = v;
        else z = v;
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return n > 0.0 ? v / n : Vec3{0, 0, 0};
}

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

inline Vec3 comp_min(const Vec3& a, const Vec3& b) {
    return {std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
}
inline Vec3 comp_max(const Vec3& a, const Vec3& b) {
    return {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
}

/// Row-major 3x3 matrix; used for rotations.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return Mat3{}; }

    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        return Mat3{{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
    }
    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        return Mat3{{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
    }

    static Mat3 rot_x(double t) {
        const double c = std::cos(t), s = std::sin(t);
        return Mat3{{1, 0, 0, 0, c, -s, 0, s, c}};
    }
    static Mat3 rot_y(double t) {
        const double c = std::cos(t), s = std::sin(t);
        return Mat3{{c, 0, s, 0, 1, 0, -s, 0, c}};
    }
    static Mat3 rot_z(double t) {
        const double c = std::cos(t), s = std::sin(t);
        return Mat3{{c, -s, 0, s, c, 0, 0, 0, 1}};
    }

    /// Rotation from a unit quaternion (w, x, y, z).
    static Mat3 from_quat(double w, double x, double y, double z);

    double at(int r, int c) const { return m[r * 3 + c]; }

    Vec3 row(int r) const { return {m[r * 3], m[r * 3 + 1], m[r * 3 + 2]}; }
    Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
                r.m[i * 3 + j] = s;
            }
        return r;
    }

    Mat3 transposed() const {
        return Mat3{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    /// Orthonormal with determinant +1 within tol.
    bool is_rotation(double tol = 1e-9) const;
};

/// Rigid placement: p_world = rotation * p_local + translation.
struct Pose {
    Mat3 rotation;
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

    Pose operator*(const Pose& o) const {
        return {rotation * o.rotation, rotation * o.translation + translation};
    }

    Pose inverse() const {
        const Mat3 rt = rotation.transposed();
        return {rt, -(rt * translation)};
    }

    static Pose identity() { return {}; }
    static Pose translate(const Vec3& t) { return {Mat3::identity(), t}; }
};

struct AABB {
    Vec3 min;
    Vec3 max;

    static AABB empty() {
        const double inf = std::numeric_limits<double>::infinity();
        return {{inf, inf, inf}, {-inf, -inf, -inf}};
    }

    void expand(const Vec3& p) {
        min = comp_min(min, p);
        max = comp_max(max, p);
    }
    void expand(const AABB& b) {
        min = comp_min(min, b.min);
        max = comp_max(max, b.max);
    }

    Vec3 center() const { return (min + max) * 0.5; }
    Vec3 half_extents() const { return (max - min) * 0.5; }
    Vec3 extents() const { return max - min; }
    double volume() const {
        const Vec3 e = extents();
        return e.x * e.y * e.z;
    }

    bool contains(const Vec3& p, double tol = 0.0) const {
        return p.x >= min.x - tol && p.x <= max.x + tol && p.y >= min.y - tol &&
               p.y <= max.y + tol && p.z >= min.z - tol && p.z <= max.z + tol;
    }
    bool contains(const AABB& b) const {
        return b.min.x >= min.x && b.min.y >= min.y && b.min.z >= min.z &&
               b.max.x <= max.x && b.max.y <= max.y && b.max.z <= max.z;
    }

    // Closed-set overlap: touching counts.
    bool overlaps(const AABB& b) const {
        return min.x <= b.max.x && max.x >= b.min.x && min.y <= b.max.y && max.y >= b.min.y &&
               min.z <= b.max.z && max.z >= b.min.z;
    }

    AABB inflated(double r) const { return {min - Vec3{r, r, r}, max + Vec3{r, r, r}}; }

    /// Squared distance from p to the closed box (0 if inside).
    double dist2(const Vec3& p) const {
        const double dx = std::max({min.x - p.x, 0.0, p.x - max.x});
        const double dy = std::max({min.y - p.y, 0.0, p.y - max.y});
        const double dz = std::max({min.z - p.z, 0.0, p.z - max.z});
        return dx * dx + dy * dy + dz * dz;
    }
};

struct OBB {
    Vec3 center;
    std::array<Vec3, 3> axes;  // orthonormal
    Vec3 half_extents;         // nonnegative

    OBB() : axes{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}} {}

    double volume() const { return 8.0 * half_extents.x * half_extents.y * half_extents.z; }

    AABB enclosing_aabb() const {
        Vec3 r{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            const Vec3 a = axes[i] * half_extents[i];
            r += Vec3{std::abs(a.x), std::abs(a.y), std::abs(a.z)};
        }
        return {center - r, center + r};
    }

    bool contains(const Vec3& p, double tol = 0.0) const {
        const Vec3 d = p - center;
        for (int i = 0; i < 3; ++i)
            if (std::abs(dot(d, axes[i])) > half_extents[i] + tol) return false;
        return true;
    }
};

struct Sphere {
    Vec3 center;
    double radius = 0.0;
};

struct Segment {
    Vec3 a;
    Vec3 b;
};

using Triangle = std::array<Vec3, 3>;

/// Componentwise min/max box of a nonempty point set. Throws on empty input.
AABB aabb_of(std::span<const Vec3> points);

/// Near-minimum-volume oriented bounding box of a point cloud. The search
/// always evaluates the identity orientation, so the result never exceeds the
/// axis-aligned box volume; delta controls how finely candidate orientations
/// are refined. Degenerate (collinear/coplanar) inputs yield zero half-extents.
OBB obb_fit(std::span<const Vec3> points, double delta);

/// Separating-axis test over the 15 candidate axes. Closed sets: touching
/// boxes intersect.
bool obb_intersects_aabb(const OBB& o, const AABB& a);

double dist_point_segment(const Vec3& p, const Segment& s);

/// True iff the minimum distance from the sphere center to the polyline is at
/// most radius + slack. A single point is a degenerate polyline.
bool sphere_intersects_polyline(const Sphere& sp, std::span<const Vec3> pts, double slack);

/// Closed triangle-triangle intersection. Degenerate (zero-area) triangles
/// fall back to a distance test.
bool tri_intersects_tri(const Triangle& t1, const Triangle& t2);

/// Closed triangle vs closed box, separating-axis test (13 axes).
bool tri_overlaps_aabb(const Triangle& t, const AABB& box);

Vec3 closest_point_triangle(const Vec3& p, const Triangle& t);
double dist_point_triangle(const Vec3& p, const Triangle& t);
double dist_segment_segment(const Segment& s1, const Segment& s2);

}  // namespace rgg
