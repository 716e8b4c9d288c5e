#include "rgg/geometry.hpp"

#include <algorithm>
#include <stdexcept>

// Approximate minimum-volume OBB fitting: estimate a primary direction from
// the cloud diameter and a fixed direction grid, find the optimal rectangle
// of the projection perpendicular to it with rotating calipers, then refine
// the primary direction locally until the angular step is below a bound
// driven by delta. The identity orientation is always a candidate, which caps
// the result at the axis-aligned box volume.

namespace rgg {

namespace {

struct P2 {
    double x, y;
};

double cross2(const P2& o, const P2& a, const P2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain; collinear points dropped.
std::vector<P2> convex_hull_2d(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<P2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

struct Rect2 {
    double area = 0.0;
    double ux = 1.0, uy = 0.0;  // unit direction of one rectangle side
};

Rect2 min_area_rect(const std::vector<P2>& hull) {
    Rect2 best;
    if (hull.size() <= 1) return best;
    if (hull.size() == 2) {
        const double dx = hull[1].x - hull[0].x, dy = hull[1].y - hull[0].y;
        const double len = std::hypot(dx, dy);
        if (len > 0) {
            best.ux = dx / len;
            best.uy = dy / len;
        }
        return best;  // zero area, oriented along the segment
    }
    best.area = std::numeric_limits<double>::infinity();
    const size_t h = hull.size();
    for (size_t i = 0; i < h; ++i) {
        const P2& a = hull[i];
        const P2& b = hull[(i + 1) % h];
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double len = std::hypot(dx, dy);
        if (len <= 0) continue;
        const double ux = dx / len, uy = dy / len;
        double lo_u = std::numeric_limits<double>::infinity(), hi_u = -lo_u;
        double lo_v = lo_u, hi_v = -lo_u;
        for (const P2& p : hull) {
            const double u = p.x * ux + p.y * uy;
            const double v = -p.x * uy + p.y * ux;
            lo_u = std::min(lo_u, u);
            hi_u = std::max(hi_u, u);
            lo_v = std::min(lo_v, v);
            hi_v = std::max(hi_v, v);
        }
        const double area = (hi_u - lo_u) * (hi_v - lo_v);
        if (area < best.area) {
            best.area = area;
            best.ux = ux;
            best.uy = uy;
        }
    }
    if (!std::isfinite(best.area)) best.area = 0.0;
    return best;
}

// Orthonormal complement of unit vector d.
void make_basis(const Vec3& d, Vec3& u, Vec3& v) {
    const Vec3 pick = std::abs(d.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    u = normalized(cross(d, pick));
    v = cross(d, u);
}

struct Fit {
    double volume = std::numeric_limits<double>::infinity();
    std::array<Vec3, 3> axes;
    Vec3 dir;  // primary direction that produced this fit
};

Fit evaluate_direction(std::span<const Vec3> pts, const Vec3& dir) {
    Fit fit;
    fit.dir = dir;
    Vec3 u, v;
    make_basis(dir, u, v);

    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    std::vector<P2> proj;
    proj.reserve(pts.size());
    for (const Vec3& p : pts) {
        const double d = dot(p, dir);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        proj.push_back({dot(p, u), dot(p, v)});
    }
    const Rect2 rect = min_area_rect(convex_hull_2d(std::move(proj)));
    fit.volume = (hi - lo) * rect.area;
    fit.axes[0] = dir;
    fit.axes[1] = u * rect.ux + v * rect.uy;
    fit.axes[2] = u * -rect.uy + v * rect.ux;
    return fit;
}

std::vector<Vec3> sphere_grid(int n) {
    // Golden-spiral directions; fixed, so results are deterministic.
    std::vector<Vec3> dirs;
    dirs.reserve(n);
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - 2.0 * (i + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = ga * i;
        dirs.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return dirs;
}

Vec3 diameter_direction(std::span<const Vec3> pts) {
    auto farthest_from = [&](const Vec3& q) {
        size_t best = 0;
        double bd = -1.0;
        for (size_t i = 0; i < pts.size(); ++i) {
            const double d = norm2(pts[i] - q);
            if (d > bd) {
                bd = d;
                best = i;
            }
        }
        return best;
    };
    const size_t i0 = farthest_from(pts[0]);
    const size_t i1 = farthest_from(pts[i0]);
    const Vec3 d = pts[i1] - pts[i0];
    return norm2(d) > 0 ? normalized(d) : Vec3{1, 0, 0};
}

// Extreme points along a fixed direction grid; used to keep the orientation
// search cheap on large clouds. Final extents are computed over all points.
std::vector<Vec3> extreme_subset(std::span<const Vec3> pts) {
    const std::vector<Vec3> dirs = sphere_grid(128);
    std::vector<size_t> idx;
    idx.reserve(dirs.size() + 6);
    for (const Vec3& d : dirs) {
        size_t best = 0;
        double bd = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < pts.size(); ++i) {
            const double s = dot(pts[i], d);
            if (s > bd) {
                bd = s;
                best = i;
            }
        }
        idx.push_back(best);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<Vec3> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(pts[i]);
    return out;
}

OBB box_from_axes(std::span<const Vec3> pts, const std::array<Vec3, 3>& axes) {
    Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi = -lo;
    for (const Vec3& p : pts) {
        for (int i = 0; i < 3; ++i) {
            const double d = dot(p, axes[i]);
            if (d < lo[i]) lo.set(i, d);
            if (d > hi[i]) hi.set(i, d);
        }
    }
    OBB obb;
    obb.axes = axes;
    obb.half_extents = (hi - lo) * 0.5;
    const Vec3 mid = (lo + hi) * 0.5;
    obb.center = axes[0] * mid.x + axes[1] * mid.y + axes[2] * mid.z;
    return obb;
}

}  // namespace

OBB obb_fit(std::span<const Vec3> points, double delta) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");

    const std::vector<Vec3> reduced =
        points.size() > 1200 ? extreme_subset(points) : std::vector<Vec3>(points.begin(), points.end());
    const std::span<const Vec3> work(reduced);

    std::vector<Vec3> coarse = sphere_grid(60);
    coarse.push_back({1, 0, 0});
    coarse.push_back({0, 1, 0});
    coarse.push_back({0, 0, 1});
    coarse.push_back(diameter_direction(work));

    std::vector<Fit> fits;
    fits.reserve(coarse.size());
    for (const Vec3& d : coarse) fits.push_back(evaluate_direction(work, d));
    std::sort(fits.begin(), fits.end(), [](const Fit& a, const Fit& b) { return a.volume < b.volume; });
    fits.resize(std::min<size_t>(fits.size(), 3));

    const double target_step = std::min(0.04, delta / 2.0);
    for (Fit& beam : fits) {
        for (double step = 0.35; step > target_step; step *= 0.5) {
            Fit best = beam;
            Vec3 u, v;
            make_basis(beam.dir, u, v);
            const double t = std::tan(step);
            for (int k = 0; k < 8; ++k) {
                const double a = 2.0 * M_PI * k / 8.0;
                const Vec3 d = normalized(beam.dir + (u * std::cos(a) + v * std::sin(a)) * t);
                const Fit f = evaluate_direction(work, d);
                if (f.volume < best.volume) best = f;
            }
            beam = best;
        }
    }

    const Fit& best = *std::min_element(
        fits.begin(), fits.end(), [](const Fit& a, const Fit& b) { return a.volume < b.volume; });

    const OBB oriented = box_from_axes(points, best.axes);
    const OBB aligned = box_from_axes(points, {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
    return oriented.volume() < aligned.volume() ? oriented : aligned;
}

}  // namespace rgg
