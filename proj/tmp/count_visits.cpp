// crude visit counter: replicate the batched traversal logic against the tree rebuilt here
#include "rgg/cache.hpp"
#include "rgg/rgg_update.hpp"
#include <cstdio>
using namespace rgg;
int main(){
    Preprocessed p = load_cache("tmp/t.cache");
    std::vector<Pose> poses;
    for (auto& o : p.scene.obstacles) poses.push_back({Mat3::rot_z(0.7)*Mat3::rot_y(0.5), o.pose.translation});
    ObstacleApprox posed = p.rgg.obstacles[0]; posed.set_pose(poses[0]);
    auto spheres = posed.posed_spheres();
    // rebuild items as the index does to count brute force tests
    size_t n_splines = p.rgg.splines.size();
    std::vector<AABB> boxes;
    for (auto& s : p.rgg.splines) boxes.push_back(aabb_of(s.points).inflated(std::max(0.0, s.radius + p.rgg.slack)));
    size_t hits = 0;
    for (auto& sp : spheres) for (auto& b : boxes) if (b.dist2(sp.center) <= sp.radius*sp.radius) hits++;
    std::printf("splines=%zu spheres=%zu brute tests=%zu hits=%zu hit-rate=%.2f%%\n",
        n_splines, spheres.size(), n_splines*spheres.size(), hits, 100.0*hits/(n_splines*spheres.size()));
    return 0;
}
