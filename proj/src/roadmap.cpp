#include "rgg/roadmap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rgg/rng.hpp"

namespace rgg {

const char* label_name(Label l) {
    switch (l) {
        case Label::Red: return "red";
        case Label::Green: return "green";
        case Label::Gray: return "gray";
    }
    return "?";
}

size_t LabelMap::count(Label l) const {
    return static_cast<size_t>(std::count(labels.begin(), labels.end(), l));
}

namespace {

bool robot_inside(const RobotModel& robot, const Config& c, const AABB& bounds) {
    for (const PosedBody& b : fk(robot, c))
        for (const Vec3& v : b.world_vertices)
            if (!bounds.contains(v)) return false;
    return true;
}

}  // namespace

Roadmap build_prm(const RobotModel& robot, const AABB& bounds, int n_nodes, int k_neighbors,
                  uint64_t seed, double eps) {
    if (n_nodes < 2) throw std::invalid_argument("n_nodes must be at least 2");
    if (k_neighbors < 1) throw std::invalid_argument("k_neighbors must be at least 1");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    RandomEngine rng(seed);
    Roadmap r;
    r.eps = eps;
    r.seed = seed;
    r.nodes.reserve(n_nodes);

    const long max_attempts = 100L * n_nodes;
    long attempts = 0;
    while (static_cast<int>(r.nodes.size()) < n_nodes) {
        if (++attempts > max_attempts) throw std::runtime_error("workspace bounds too tight");
        Config c;
        c.coords.reserve(robot.dof_count());
        for (int d = 0; d < robot.dof_count(); ++d)
            c.coords.push_back(rng.in_range(robot.limit_lo(d), robot.limit_hi(d)));
        if (robot_inside(robot, c, bounds)) r.nodes.push_back(std::move(c));
    }

    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<double, int>> dist;
    dist.reserve(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        dist.clear();
        for (int j = 0; j < n_nodes; ++j)
            if (j != i) dist.emplace_back(config_distance(r.nodes[i], r.nodes[j]), j);
        const size_t k = std::min<size_t>(k_neighbors, dist.size());
        std::partial_sort(dist.begin(), dist.begin() + k, dist.end());
        for (size_t t = 0; t < k; ++t)
            edge_set.insert(std::minmax(i, dist[t].second));
    }
    r.edges.assign(edge_set.begin(), edge_set.end());
    return r;
}

std::vector<Config> component_cfgs(const Roadmap& r, ComponentId id) {
    if (id.kind == ComponentKind::Node) {
        if (id.index < 0 || id.index >= static_cast<int>(r.nodes.size()))
            throw std::out_of_range("node index out of range");
        return {r.nodes[id.index]};
    }
    if (id.index < 0 || id.index >= static_cast<int>(r.edges.size()))
        throw std::out_of_range("edge index out of range");
    const auto& [a, b] = r.edges[id.index];
    return discretize_edge({r.nodes[a], r.nodes[b]}, r.eps);
}

}  // namespace rgg
