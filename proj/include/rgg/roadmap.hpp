#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rgg/kinematics.hpp"

namespace rgg {

enum class ComponentKind : uint8_t { Node = 0, Edge = 1 };

/// A roadmap component: a node or an edge. Nodes are degenerate edges, so all
/// labeling machinery treats the two uniformly.
struct ComponentId {
    ComponentKind kind = ComponentKind::Node;
    int index = 0;

    bool operator==(const ComponentId&) const = default;
};

enum class Label : uint8_t { Red = 0, Green = 1, Gray = 2 };

const char* label_name(Label l);

/// Roadmap graph: configurations as nodes, straight joint-space segments as
/// edges, discretized at resolution eps. Immutable after construction.
struct Roadmap {
    std::vector<Config> nodes;
    std::vector<std::pair<int, int>> edges;  // sorted, a < b, no duplicates
    double eps = 0.1;
    uint64_t seed = 0;

    size_t component_count() const { return nodes.size() + edges.size(); }

    ComponentId component(size_t flat) const {
        return flat < nodes.size()
                   ? ComponentId{ComponentKind::Node, static_cast<int>(flat)}
                   : ComponentId{ComponentKind::Edge, static_cast<int>(flat - nodes.size())};
    }

    size_t flat_index(ComponentId id) const {
        return id.kind == ComponentKind::Node ? static_cast<size_t>(id.index)
                                              : nodes.size() + static_cast<size_t>(id.index);
    }
};

/// One label per component (nodes first, then edges), published wholesale
/// with an update epoch.
struct LabelMap {
    std::vector<Label> labels;
    uint64_t epoch = 0;

    Label at(const Roadmap& r, ComponentId id) const { return labels[r.flat_index(id)]; }

    size_t count(Label l) const;
};

/// PRM-style construction: nodes sampled uniformly within joint limits and
/// rejected unless the whole posed robot fits in `bounds`; each node is
/// connected to its k nearest joint-space neighbors. No obstacle is consulted;
/// all obstacle effects come from update-time labeling.
Roadmap build_prm(const RobotModel& robot, const AABB& bounds, int n_nodes, int k_neighbors,
                  uint64_t seed, double eps);

/// cfg(component): single config for nodes, discretize_edge at roadmap.eps
/// for edges.
std::vector<Config> component_cfgs(const Roadmap& r, ComponentId id);

/// Allocation-free visit of cfg(component); same samples as component_cfgs.
template <typename Fn>
void for_each_component_cfg(const Roadmap& r, ComponentId id, Fn&& fn) {
    if (id.kind == ComponentKind::Node) {
        fn(static_cast<const Config&>(r.nodes.at(id.index)));
        return;
    }
    const auto& [a, b] = r.edges.at(id.index);
    for_each_edge_cfg(r.nodes[a], r.nodes[b], r.eps, fn);
}

}  // namespace rgg
