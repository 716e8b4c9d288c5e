#include "rgg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgg {

Mat3 Mat3::from_quat(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n <= 0.0) throw std::invalid_argument("zero quaternion");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    return Mat3{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
                 2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
                 2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

bool Mat3::is_rotation(double tol) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(dot(row(i), row(j)) - want) > tol) return false;
        }
    return std::abs(det() - 1.0) <= tol;
}

AABB aabb_of(std::span<const Vec3> points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    AABB box = AABB::empty();
    for (const Vec3& p : points) box.expand(p);
    return box;
}

bool obb_intersects_aabb(const OBB& o, const AABB& a) {
    // SAT with the AABB in the world frame. R maps the OBB frame into world.
    const Vec3 t = o.center - a.center();
    const Vec3 ha = a.half_extents();
    const Vec3 hb = o.half_extents;

    double R[3][3], AbsR[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            R[i][j] = o.axes[j][i];
            AbsR[i][j] = std::abs(R[i][j]) + 1e-12;
        }

    // World (AABB) axes.
    for (int i = 0; i < 3; ++i) {
        const double ra = ha[i];
        const double rb = hb.x * AbsR[i][0] + hb.y * AbsR[i][1] + hb.z * AbsR[i][2];
        if (std::abs(t[i]) > ra + rb) return false;
    }
    // OBB axes.
    for (int j = 0; j < 3; ++j) {
        const double ra = ha.x * AbsR[0][j] + ha.y * AbsR[1][j] + ha.z * AbsR[2][j];
        const double rb = hb[j];
        const double tj = t.x * R[0][j] + t.y * R[1][j] + t.z * R[2][j];
        if (std::abs(tj) > ra + rb) return false;
    }
    // Cross products of axes.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            const double ra = ha[i1] * AbsR[i2][j] + ha[i2] * AbsR[i1][j];
            const double rb = hb[j1] * AbsR[i][j2] + hb[j2] * AbsR[i][j1];
            const double tt = t[i2] * R[i1][j] - t[i1] * R[i2][j];
            if (std::abs(tt) > ra + rb) return false;
        }
    return true;
}

namespace {

double dist2_point_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
    const Vec3 ab = b - a;
    const double len2 = norm2(ab);
    if (len2 <= 0.0) return norm2(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return norm2(p - (a + ab * t));
}

}  // namespace

double dist_point_segment(const Vec3& p, const Segment& s) {
    return std::sqrt(dist2_point_segment(p, s.a, s.b));
}

bool sphere_intersects_polyline(const Sphere& sp, std::span<const Vec3> pts, double slack) {
    if (pts.empty()) throw std::invalid_argument("empty polyline");
    const double limit = sp.radius + slack;
    if (limit < 0.0) return false;
    const double limit2 = limit * limit;
    if (pts.size() == 1) return norm2(sp.center - pts[0]) <= limit2;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (dist2_point_segment(sp.center, pts[i], pts[i + 1]) <= limit2) return true;
    return false;
}

Vec3 closest_point_triangle(const Vec3& p, const Triangle& t) {
    // Ericson, Real-Time Collision Detection, 5.1.5.
    const Vec3& a = t[0];
    const Vec3& b = t[1];
    const Vec3& c = t[2];
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = dot(ab, ap), d2 = dot(ac, ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const Vec3 bp = p - b;
    const double d3 = dot(ab, bp), d4 = dot(ac, bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return a + ab * v;
    }

    const Vec3 cp = p - c;
    const double d5 = dot(ab, cp), d6 = dot(ac, cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return a + ac * w;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + (c - b) * w;
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom, w = vc * denom;
    return a + ab * v + ac * w;
}

double dist_point_triangle(const Vec3& p, const Triangle& t) {
    return norm(p - closest_point_triangle(p, t));
}

double dist_segment_segment(const Segment& s1, const Segment& s2) {
    // Ericson, Real-Time Collision Detection, 5.1.9.
    const Vec3 d1 = s1.b - s1.a;
    const Vec3 d2 = s2.b - s2.a;
    const Vec3 r = s1.a - s2.a;
    const double a = norm2(d1), e = norm2(d2), f = dot(d2, r);
    constexpr double kEps = 1e-30;

    double s, t;
    if (a <= kEps && e <= kEps) return norm(r);
    if (a <= kEps) {
        s = 0.0;
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= kEps) {
            t = 0.0;
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            s = denom > kEps ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return norm((s1.a + d1 * s) - (s2.a + d2 * t));
}

namespace {

// ---- triangle-triangle helpers -------------------------------------------

constexpr double kPlaneTol = 1e-12;

struct V2 {
    double x, y;
};

double orient2d(const V2& a, const V2& b, const V2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

V2 project_axis(const Vec3& p, int drop) {
    switch (drop) {
        case 0: return {p.y, p.z};
        case 1: return {p.x, p.z};
        default: return {p.x, p.y};
    }
}

int dominant_axis(const Vec3& n) {
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    if (ax >= ay && ax >= az) return 0;
    return ay >= az ? 1 : 2;
}

bool point_in_tri_2d(const V2& p, const V2& a, const V2& b, const V2& c, double tol) {
    const double o1 = orient2d(a, b, p);
    const double o2 = orient2d(b, c, p);
    const double o3 = orient2d(c, a, p);
    const bool non_neg = o1 >= -tol && o2 >= -tol && o3 >= -tol;
    const bool non_pos = o1 <= tol && o2 <= tol && o3 <= tol;
    return non_neg || non_pos;
}

bool seg_intersects_seg_2d(const V2& p1, const V2& q1, const V2& p2, const V2& q2, double tol) {
    const double d1 = orient2d(p2, q2, p1);
    const double d2 = orient2d(p2, q2, q1);
    const double d3 = orient2d(p1, q1, p2);
    const double d4 = orient2d(p1, q1, q2);
    if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
        ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol)))
        return true;

    auto on_segment = [tol](const V2& a, const V2& b, const V2& p) {
        if (std::abs(orient2d(a, b, p)) > tol) return false;
        return p.x >= std::min(a.x, b.x) - tol && p.x <= std::max(a.x, b.x) + tol &&
               p.y >= std::min(a.y, b.y) - tol && p.y <= std::max(a.y, b.y) + tol;
    };
    return on_segment(p2, q2, p1) || on_segment(p2, q2, q1) || on_segment(p1, q1, p2) ||
           on_segment(p1, q1, q2);
}

bool coplanar_tri_tri_2d(const Triangle& t1, const Triangle& t2, int drop, double tol) {
    V2 a[3], b[3];
    for (int i = 0; i < 3; ++i) {
        a[i] = project_axis(t1[i], drop);
        b[i] = project_axis(t2[i], drop);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (seg_intersects_seg_2d(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3], tol))
                return true;
    for (int i = 0; i < 3; ++i) {
        if (point_in_tri_2d(a[i], b[0], b[1], b[2], tol)) return true;
        if (point_in_tri_2d(b[i], a[0], a[1], a[2], tol)) return true;
    }
    return false;
}

// Closed point-in-triangle for a point known to lie in the triangle's plane.
bool point_in_tri_3d(const Vec3& p, const Triangle& t, const Vec3& n) {
    const int drop = dominant_axis(n);
    const V2 pp = project_axis(p, drop);
    const V2 a = project_axis(t[0], drop);
    const V2 b = project_axis(t[1], drop);
    const V2 c = project_axis(t[2], drop);
    const double area = std::abs(orient2d(a, b, c));
    return point_in_tri_2d(pp, a, b, c, std::max(1e-14, 1e-12 * area));
}

// Closed segment vs closed triangle; n is the (unnormalized) triangle normal.
bool seg_intersects_tri(const Vec3& p, const Vec3& q, const Triangle& t, const Vec3& n,
                        double plane_tol) {
    const double dp = dot(n, p - t[0]);
    const double dq = dot(n, q - t[0]);
    if (dp > plane_tol && dq > plane_tol) return false;
    if (dp < -plane_tol && dq < -plane_tol) return false;

    if (std::abs(dp) <= plane_tol && std::abs(dq) <= plane_tol) {
        // Segment lies in the triangle's plane.
        const int drop = dominant_axis(n);
        const V2 pp = project_axis(p, drop), qq = project_axis(q, drop);
        const V2 a = project_axis(t[0], drop);
        const V2 b = project_axis(t[1], drop);
        const V2 c = project_axis(t[2], drop);
        const double tol = std::max(1e-14, 1e-12 * std::abs(orient2d(a, b, c)));
        if (point_in_tri_2d(pp, a, b, c, tol) || point_in_tri_2d(qq, a, b, c, tol)) return true;
        return seg_intersects_seg_2d(pp, qq, a, b, tol) || seg_intersects_seg_2d(pp, qq, b, c, tol) ||
               seg_intersects_seg_2d(pp, qq, c, a, tol);
    }

    Vec3 x;
    if (std::abs(dp) <= plane_tol) x = p;
    else if (std::abs(dq) <= plane_tol) x = q;
    else {
        const double s = dp / (dp - dq);
        if (s < 0.0 || s > 1.0) return false;
        x = p + (q - p) * s;
    }
    return point_in_tri_3d(x, t, n);
}

bool tri_degenerate(const Triangle& t, const Vec3& n) {
    const double scale2 = std::max({norm2(t[1] - t[0]), norm2(t[2] - t[0]), norm2(t[2] - t[1]), 1e-300});
    return norm2(n) <= 1e-24 * scale2 * scale2;
}

double dist_seg_tri(const Segment& s, const Triangle& t) {
    double d = std::min(dist_point_triangle(s.a, t), dist_point_triangle(s.b, t));
    for (int i = 0; i < 3; ++i)
        d = std::min(d, dist_segment_segment(s, {t[i], t[(i + 1) % 3]}));
    const Vec3 n = cross(t[1] - t[0], t[2] - t[0]);
    if (norm2(n) > 0.0) {
        const double dp = dot(n, s.a - t[0]);
        const double dq = dot(n, s.b - t[0]);
        if ((dp <= 0.0) != (dq <= 0.0)) {
            const Vec3 x = s.a + (s.b - s.a) * (dp / (dp - dq));
            if (point_in_tri_3d(x, t, n)) return 0.0;
        }
    }
    return d;
}

// Fallback for degenerate triangles: closed sets intersect iff distance is 0.
bool tri_tri_by_distance(const Triangle& t1, const Triangle& t2) {
    double d = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        d = std::min(d, dist_seg_tri({t1[i], t1[(i + 1) % 3]}, t2));
        d = std::min(d, dist_seg_tri({t2[i], t2[(i + 1) % 3]}, t1));
    }
    return d <= 1e-12;
}

}  // namespace

bool tri_intersects_tri(const Triangle& t1, const Triangle& t2) {
    const Vec3 n1 = cross(t1[1] - t1[0], t1[2] - t1[0]);
    const Vec3 n2 = cross(t2[1] - t2[0], t2[2] - t2[0]);
    if (tri_degenerate(t1, n1) || tri_degenerate(t2, n2)) return tri_tri_by_distance(t1, t2);

    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        scale = std::max({scale, std::abs(t1[i].x), std::abs(t1[i].y), std::abs(t1[i].z),
                          std::abs(t2[i].x), std::abs(t2[i].y), std::abs(t2[i].z)});
    const double tol1 = std::max(kPlaneTol, 1e-12 * norm(n1) * scale);
    const double tol2 = std::max(kPlaneTol, 1e-12 * norm(n2) * scale);

    double d2[3], d1[3];
    for (int i = 0; i < 3; ++i) {
        d2[i] = dot(n1, t2[i] - t1[0]);
        d1[i] = dot(n2, t1[i] - t2[0]);
    }
    if ((d2[0] > tol1 && d2[1] > tol1 && d2[2] > tol1) ||
        (d2[0] < -tol1 && d2[1] < -tol1 && d2[2] < -tol1))
        return false;
    if ((d1[0] > tol2 && d1[1] > tol2 && d1[2] > tol2) ||
        (d1[0] < -tol2 && d1[1] < -tol2 && d1[2] < -tol2))
        return false;

    const bool coplanar = std::abs(d2[0]) <= tol1 && std::abs(d2[1]) <= tol1 &&
                          std::abs(d2[2]) <= tol1;
    if (coplanar) {
        const int drop = dominant_axis(n1);
        return coplanar_tri_tri_2d(t1, t2, drop, 1e-13 * std::max(1.0, scale * scale));
    }

    for (int i = 0; i < 3; ++i) {
        if (seg_intersects_tri(t1[i], t1[(i + 1) % 3], t2, n2, tol2)) return true;
        if (seg_intersects_tri(t2[i], t2[(i + 1) % 3], t1, n1, tol1)) return true;
    }
    return false;
}

bool tri_overlaps_aabb(const Triangle& t, const AABB& box) {
    // Akenine-Moller box-triangle SAT, closed sets.
    const Vec3 c = box.center();
    const Vec3 e = box.half_extents();
    const Vec3 v0 = t[0] - c, v1 = t[1] - c, v2 = t[2] - c;
    const Vec3 f0 = v1 - v0, f1 = v2 - v1, f2 = v0 - v2;

    auto axis_test = [&](const Vec3& a) {
        const double p0 = dot(v0, a), p1 = dot(v1, a), p2 = dot(v2, a);
        const double r = e.x * std::abs(a.x) + e.y * std::abs(a.y) + e.z * std::abs(a.z);
        return std::min({p0, p1, p2}) > r || std::max({p0, p1, p2}) < -r;
    };

    const Vec3 axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Vec3& u : axes)
        for (const Vec3& f : {f0, f1, f2})
            if (axis_test(cross(u, f))) return false;

    // Box face normals: triangle AABB vs box.
    if (std::min({v0.x, v1.x, v2.x}) > e.x || std::max({v0.x, v1.x, v2.x}) < -e.x) return false;
    if (std::min({v0.y, v1.y, v2.y}) > e.y || std::max({v0.y, v1.y, v2.y}) < -e.y) return false;
    if (std::min({v0.z, v1.z, v2.z}) > e.z || std::max({v0.z, v1.z, v2.z}) < -e.z) return false;

    // Triangle plane vs box.
    const Vec3 n = cross(f0, f1);
    const double d = dot(n, v0);
    const double r = e.x * std::abs(n.x) + e.y * std::abs(n.y) + e.z * std::abs(n.z);
    return std::abs(d) <= r;
}

}  // namespace rgg
