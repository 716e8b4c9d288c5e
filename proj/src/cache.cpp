#include "rgg/cache.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rgg {

namespace {

constexpr char kMagic[8] = {'R', 'G', 'G', 'C', 'A', 'C', 'H', 'E'};
constexpr uint32_t kVersion = 1;

class Writer {
 public:
    explicit Writer(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot write cache file: " + path.string());
    }

    void raw(const void* p, size_t n) { out_.write(static_cast<const char*>(p), n); }
    void u8(uint8_t v) { raw(&v, 1); }
    void u32(uint32_t v) { raw(&v, 4); }
    void u64(uint64_t v) { raw(&v, 8); }
    void i32(int32_t v) { raw(&v, 4); }
    void f64(double v) { raw(&v, 8); }
    void str(const std::string& s) {
        u64(s.size());
        raw(s.data(), s.size());
    }
    void vec3(const Vec3& v) {
        f64(v.x);
        f64(v.y);
        f64(v.z);
    }
    void mat3(const Mat3& m) {
        for (double v : m.m) f64(v);
    }
    void pose(const Pose& p) {
        mat3(p.rotation);
        vec3(p.translation);
    }
    void aabb(const AABB& b) {
        vec3(b.min);
        vec3(b.max);
    }
    void mesh(const TriMesh& m) {
        u64(m.vertices.size());
        for (const Vec3& v : m.vertices) vec3(v);
        u64(m.triangles.size());
        for (const auto& t : m.triangles) {
            i32(t[0]);
            i32(t[1]);
            i32(t[2]);
        }
    }

 private:
    std::ofstream out_;
};

class Reader {
 public:
    explicit Reader(const std::filesystem::path& path) : in_(path, std::ios::binary) {
        if (!in_) throw std::runtime_error("cannot open cache file: " + path.string());
    }

    void raw(void* p, size_t n) {
        in_.read(static_cast<char*>(p), n);
        if (!in_) throw std::runtime_error("truncated cache file");
    }
    uint8_t u8() {
        uint8_t v;
        raw(&v, 1);
        return v;
    }
    uint32_t u32() {
        uint32_t v;
        raw(&v, 4);
        return v;
    }
    uint64_t u64() {
        uint64_t v;
        raw(&v, 8);
        return v;
    }
    int32_t i32() {
        int32_t v;
        raw(&v, 4);
        return v;
    }
    double f64() {
        double v;
        raw(&v, 8);
        return v;
    }
    std::string str() {
        std::string s(u64(), '\0');
        raw(s.data(), s.size());
        return s;
    }
    Vec3 vec3() {
        Vec3 v;
        v.x = f64();
        v.y = f64();
        v.z = f64();
        return v;
    }
    Mat3 mat3() {
        Mat3 m;
        for (double& v : m.m) v = f64();
        return m;
    }
    Pose pose() {
        Pose p;
        p.rotation = mat3();
        p.translation = vec3();
        return p;
    }
    AABB aabb() {
        AABB b;
        b.min = vec3();
        b.max = vec3();
        return b;
    }
    TriMesh mesh() {
        std::vector<Vec3> verts(u64());
        for (Vec3& v : verts) v = vec3();
        std::vector<std::array<int, 3>> tris(u64());
        for (auto& t : tris) {
            t[0] = i32();
            t[1] = i32();
            t[2] = i32();
        }
        return TriMesh::create(std::move(verts), std::move(tris));
    }

 private:
    std::ifstream in_;
};

void write_config(Writer& w, const Config& c) {
    w.u64(c.coords.size());
    for (double v : c.coords) w.f64(v);
}

Config read_config(Reader& r) {
    Config c;
    c.coords.resize(r.u64());
    for (double& v : c.coords) v = r.f64();
    return c;
}

void write_spline(Writer& w, const Spline& s) {
    w.u64(s.points.size());
    for (const Vec3& p : s.points) w.vec3(p);
    w.f64(s.radius);
    w.i32(s.source.component);
    w.i32(s.source.body);
    w.i32(s.source.sphere);
    w.u64(s.center_indices.size());
    for (uint32_t idx : s.center_indices) w.u32(idx);
}

Spline read_spline(Reader& r) {
    Spline s;
    s.points.resize(r.u64());
    for (Vec3& p : s.points) p = r.vec3();
    s.radius = r.f64();
    s.source.component = r.i32();
    s.source.body = r.i32();
    s.source.sphere = r.i32();
    s.center_indices.resize(r.u64());
    for (uint32_t& idx : s.center_indices) idx = r.u32();
    return s;
}

void write_obb(Writer& w, const OBB& o) {
    w.vec3(o.center);
    for (const Vec3& a : o.axes) w.vec3(a);
    w.vec3(o.half_extents);
}

OBB read_obb(Reader& r) {
    OBB o;
    o.center = r.vec3();
    for (Vec3& a : o.axes) a = r.vec3();
    o.half_extents = r.vec3();
    return o;
}

void write_robot(Writer& w, const RobotModel& robot) {
    w.pose(robot.base_pose());
    w.u64(robot.body_count());
    for (size_t i = 0; i < robot.body_count(); ++i) {
        const BodySpec& b = robot.body(i);
        w.str(b.name);
        w.mesh(b.mesh);
        w.i32(b.joint.parent);
        w.vec3(b.joint.offset);
        w.u8(b.joint.spherical ? 1 : 0);
        for (const auto& lim : b.joint.limits) {
            w.f64(lim[0]);
            w.f64(lim[1]);
        }
    }
}

RobotModel read_robot(Reader& r) {
    const Pose base = r.pose();
    std::vector<BodySpec> bodies(r.u64());
    for (BodySpec& b : bodies) {
        b.name = r.str();
        b.mesh = r.mesh();
        b.joint.parent = r.i32();
        b.joint.offset = r.vec3();
        b.joint.spherical = r.u8() != 0;
        for (auto& lim : b.joint.limits) {
            lim[0] = r.f64();
            lim[1] = r.f64();
        }
    }
    return RobotModel::create(base, std::move(bodies));
}

void write_params(Writer& w, const SceneParams& p) {
    w.f64(p.eps);
    w.f64(p.delta);
    w.f64(p.slack);
    w.f64(p.grid_resolution);
    w.i32(p.robot_spheres);
    w.i32(p.obstacle_spheres);
    w.i32(p.sphere_samples);
    w.i32(p.push_steps);
    w.i32(p.mc_points);
    w.i32(p.n_nodes);
    w.i32(p.k_neighbors);
    w.u64(p.seed);
}

SceneParams read_params(Reader& r) {
    SceneParams p;
    p.eps = r.f64();
    p.delta = r.f64();
    p.slack = r.f64();
    p.grid_resolution = r.f64();
    p.robot_spheres = r.i32();
    p.obstacle_spheres = r.i32();
    p.sphere_samples = r.i32();
    p.push_steps = r.i32();
    p.mc_points = r.i32();
    p.n_nodes = r.i32();
    p.k_neighbors = r.i32();
    p.seed = r.u64();
    return p;
}

}  // namespace

void save_cache(const Preprocessed& p, const std::filesystem::path& path) {
    Writer w(path);
    w.raw(kMagic, sizeof kMagic);
    w.u32(kVersion);

    // Scene.
    w.aabb(p.scene.workspace);
    write_robot(w, p.scene.robot);
    write_params(w, p.scene.params);
    w.u64(p.scene.obstacles.size());
    for (const Obstacle& o : p.scene.obstacles) {
        w.str(o.name);
        w.mesh(*o.mesh);
        w.pose(o.pose);
    }

    // Roadmap.
    w.u64(p.roadmap.nodes.size());
    for (const Config& c : p.roadmap.nodes) write_config(w, c);
    w.u64(p.roadmap.edges.size());
    for (const auto& [a, b] : p.roadmap.edges) {
        w.i32(a);
        w.i32(b);
    }
    w.f64(p.roadmap.eps);
    w.u64(p.roadmap.seed);

    // RGG index.
    w.f64(p.rgg.slack);
    w.i32(p.rgg.body_count);
    w.i32(p.rgg.spheres_per_body);
    w.u64(p.rgg.components.size());
    for (const ComponentApprox& c : p.rgg.components) {
        w.u64(c.outer.size());
        for (const OBB& o : c.outer) write_obb(w, o);
        w.u64(c.inner.size());
        for (const Spline& s : c.inner) write_spline(w, s);
    }
    w.u64(p.rgg.obstacles.size());
    for (const ObstacleApprox& o : p.rgg.obstacles) {
        w.u64(o.local_spheres.size());
        for (const Sphere& s : o.local_spheres) {
            w.vec3(s.center);
            w.f64(s.radius);
        }
        w.pose(o.current_pose);
    }

    // DRM index.
    w.aabb(p.drm.bounds);
    w.f64(p.drm.resolution);
    w.i32(p.drm.nx);
    w.i32(p.drm.ny);
    w.i32(p.drm.nz);
    w.u64(p.drm.component_count);
    w.u64(p.drm.cell_components.size());
    for (const auto& cell : p.drm.cell_components) {
        w.u64(cell.size());
        for (int32_t comp : cell) w.i32(comp);
    }
}

Preprocessed load_cache(const std::filesystem::path& path) {
    Reader r(path);
    char magic[8];
    r.raw(magic, sizeof magic);
    if (std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("not a cache file: " + path.string());
    if (r.u32() != kVersion) throw std::runtime_error("unsupported cache version");

    const AABB workspace = r.aabb();
    RobotModel robot = read_robot(r);
    const SceneParams params = read_params(r);
    std::vector<Obstacle> obstacles(r.u64());
    for (Obstacle& o : obstacles) {
        o.name = r.str();
        o.mesh = std::make_shared<TriMesh>(r.mesh());
        o.pose = r.pose();
    }
    Preprocessed p{SceneDoc{workspace, std::move(robot), std::move(obstacles), params}, {}, {}, {}};

    p.roadmap.nodes.resize(r.u64());
    for (Config& c : p.roadmap.nodes) c = read_config(r);
    p.roadmap.edges.resize(r.u64());
    for (auto& [a, b] : p.roadmap.edges) {
        a = r.i32();
        b = r.i32();
    }
    p.roadmap.eps = r.f64();
    p.roadmap.seed = r.u64();

    p.rgg.slack = r.f64();
    p.rgg.body_count = r.i32();
    p.rgg.spheres_per_body = r.i32();
    p.rgg.components.resize(r.u64());
    for (ComponentApprox& c : p.rgg.components) {
        c.outer.resize(r.u64());
        for (OBB& o : c.outer) o = read_obb(r);
        c.inner.resize(r.u64());
        for (Spline& s : c.inner) s = read_spline(r);
    }
    p.rgg.obstacles.resize(r.u64());
    if (p.rgg.obstacles.size() != p.scene.obstacles.size())
        throw std::runtime_error("cache is inconsistent: obstacle counts differ");
    for (size_t i = 0; i < p.rgg.obstacles.size(); ++i) {
        ObstacleApprox& o = p.rgg.obstacles[i];
        o.mesh = p.scene.obstacles[i].mesh;
        o.local_spheres.resize(r.u64());
        for (Sphere& s : o.local_spheres) {
            s.center = r.vec3();
            s.radius = r.f64();
        }
        o.set_pose(r.pose());
    }

    // Trees and packed arrays are rebuilt deterministically from the stored
    // approximations.
    rgg_rebuild_index(p.rgg);

    p.drm.bounds = r.aabb();
    p.drm.resolution = r.f64();
    p.drm.nx = r.i32();
    p.drm.ny = r.i32();
    p.drm.nz = r.i32();
    p.drm.component_count = r.u64();
    p.drm.cell_components.resize(r.u64());
    for (auto& cell : p.drm.cell_components) {
        cell.resize(r.u64());
        for (int32_t& comp : cell) comp = r.i32();
    }
    return p;
}

}  // namespace rgg
