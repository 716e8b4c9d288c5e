#include "rgg/scene.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace rgg {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    json doc;
    in >> doc;
    return doc;
}

Vec3 parse_vec3(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw std::runtime_error(std::string(what) + " must be an array of 3 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Pose parse_pose(const json& j) {
    Pose p;
    if (j.contains("translation")) p.translation = parse_vec3(j["translation"], "translation");
    if (j.contains("quaternion")) {
        const json& q = j["quaternion"];
        if (!q.is_array() || q.size() != 4)
            throw std::runtime_error("quaternion must be [w, x, y, z]");
        p.rotation = Mat3::from_quat(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                                     q[3].get<double>());
    } else if (j.contains("euler_zyx")) {
        const Vec3 e = parse_vec3(j["euler_zyx"], "euler_zyx");
        p.rotation = Mat3::rot_z(e.x) * Mat3::rot_y(e.y) * Mat3::rot_x(e.z);
    }
    if (!p.rotation.is_rotation()) throw std::runtime_error("pose rotation is not orthonormal");
    return p;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& ref) {
    const std::filesystem::path p(ref);
    return p.is_absolute() ? p : base.parent_path() / p;
}

}  // namespace

RobotModel load_robot(const std::filesystem::path& path) {
    const json doc = read_json(path);

    Pose base;
    if (doc.contains("base_pose")) base = parse_pose(doc["base_pose"]);

    if (!doc.contains("bodies") || !doc["bodies"].is_array() || doc["bodies"].empty())
        throw std::runtime_error("robot description needs a nonempty bodies array");

    std::vector<BodySpec> bodies;
    for (const json& jb : doc["bodies"]) {
        BodySpec b;
        b.name = jb.value("name", "body" + std::to_string(bodies.size()));
        if (!jb.contains("mesh")) throw std::runtime_error("body is missing a mesh reference");
        b.mesh = load_off(resolve(path, jb["mesh"].get<std::string>()));

        if (!jb.contains("joint")) throw std::runtime_error("body is missing its joint");
        const json& jj = jb["joint"];
        b.joint.parent = jj.value("parent", -1);
        if (jj.contains("offset")) b.joint.offset = parse_vec3(jj["offset"], "joint offset");
        const std::string type = jj.value("type", "spherical");
        if (type == "spherical") b.joint.spherical = true;
        else if (type == "fixed") b.joint.spherical = false;
        else throw std::runtime_error("unknown joint type: " + type);
        if (jj.contains("limits")) {
            const json& jl = jj["limits"];
            if (!jl.is_array() || jl.size() != 3)
                throw std::runtime_error("joint limits must be 3 [lo, hi] pairs");
            for (int k = 0; k < 3; ++k) {
                if (!jl[k].is_array() || jl[k].size() != 2)
                    throw std::runtime_error("joint limit must be [lo, hi]");
                b.joint.limits[k] = {jl[k][0].get<double>(), jl[k][1].get<double>()};
            }
        }
        bodies.push_back(std::move(b));
    }
    return RobotModel::create(base, std::move(bodies));
}

SceneDoc load_scene(const std::filesystem::path& path) {
    const json doc = read_json(path);

    if (!doc.contains("workspace")) throw std::runtime_error("scene is missing workspace bounds");
    AABB ws;
    ws.min = parse_vec3(doc["workspace"]["min"], "workspace min");
    ws.max = parse_vec3(doc["workspace"]["max"], "workspace max");
    if (!(ws.min.x < ws.max.x && ws.min.y < ws.max.y && ws.min.z < ws.max.z))
        throw std::runtime_error("workspace bounds must be positive");

    if (!doc.contains("robot")) throw std::runtime_error("scene is missing a robot reference");

    std::vector<Obstacle> obstacles;
    if (doc.contains("obstacles")) {
        for (const json& jo : doc["obstacles"]) {
            Obstacle o;
            o.name = jo.value("name", "obstacle" + std::to_string(obstacles.size()));
            if (!jo.contains("mesh"))
                throw std::runtime_error("obstacle is missing a mesh reference");
            o.mesh = std::make_shared<TriMesh>(load_off(resolve(path, jo["mesh"].get<std::string>())));
            if (jo.contains("pose")) o.pose = parse_pose(jo["pose"]);
            obstacles.push_back(std::move(o));
        }
    }

    SceneParams params;
    if (doc.contains("parameters")) {
        const json& jp = doc["parameters"];
        params.eps = jp.value("eps", params.eps);
        params.delta = jp.value("delta", params.delta);
        params.slack = jp.value("slack", params.slack);
        params.grid_resolution = jp.value("grid_resolution", params.grid_resolution);
        params.robot_spheres = jp.value("robot_spheres", params.robot_spheres);
        params.obstacle_spheres = jp.value("obstacle_spheres", params.obstacle_spheres);
        params.sphere_samples = jp.value("sphere_samples", params.sphere_samples);
        params.push_steps = jp.value("push_steps", params.push_steps);
        params.mc_points = jp.value("mc_points", params.mc_points);
        params.n_nodes = jp.value("n_nodes", params.n_nodes);
        params.k_neighbors = jp.value("k_neighbors", params.k_neighbors);
        params.seed = jp.value("seed", params.seed);
        if (!(params.eps > 0) || !(params.delta > 0) || !(params.grid_resolution > 0))
            throw std::runtime_error("eps, delta and grid_resolution must be positive");
    }

    SceneDoc scene{ws, load_robot(resolve(path, doc["robot"].get<std::string>())),
                   std::move(obstacles), params};
    return scene;
}

}  // namespace rgg
