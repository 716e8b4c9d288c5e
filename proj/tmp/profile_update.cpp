#include "rgg/cache.hpp"
#include "rgg/rgg_update.hpp"
#include "rgg/drm.hpp"
#include <chrono>
#include <cstdio>
using namespace rgg;
using clk = std::chrono::steady_clock;
static double ms(clk::time_point a, clk::time_point b){ return std::chrono::duration<double,std::milli>(b-a).count(); }
int main(){
    Preprocessed p = load_cache("tmp/desk10.cache");
    std::vector<Pose> poses;
    for (auto& o : p.scene.obstacles) poses.push_back({Mat3::rot_z(0.7)*Mat3::rot_y(0.5), o.pose.translation});
    // warm
    rgg_update(p.rgg, poses, 0);
    // candidate counts
    {
        ObstacleApprox posed = p.rgg.obstacles[0]; posed.set_pose(poses[0]);
        auto spheres = posed.posed_spheres();
        size_t inner_hits = 0;
        for (auto& s : spheres) inner_hits += p.rgg.inner_tree.query(s).size();
        size_t outer_hits = p.rgg.outer_tree.query(posed.outer).size();
        std::printf("splines=%zu inner_hits(total over 6 spheres)=%zu outer_items=%zu outer_hits=%zu\n",
                    p.rgg.splines.size(), inner_hits, p.rgg.outer_tree.size(), outer_hits);
        size_t pts = 0; for (auto& s : p.rgg.splines) pts += s.points.size();
        std::printf("avg spline pts=%.2f\n", double(pts)/p.rgg.splines.size());
    }
    double red=0, green=0, total=0, drm=0;
    const int N = 200;
    for (int i=0;i<N;i++){
        auto t0 = clk::now();
        auto r = rgg_update(p.rgg, poses, 0);
        auto t1 = clk::now();
        auto d = drm_update(p.drm, p.scene.obstacles, poses, 0);
        auto t2 = clk::now();
        red += r.red_phase_ms; green += r.green_phase_ms; total += ms(t0,t1); drm += ms(t1,t2);
    }
    std::printf("rgg total=%.3fms (red=%.3f green=%.3f other=%.3f) drm=%.4fms\n",
        total/N, red/N, green/N, (total-red-green*N)/N - 0, drm/N);
    std::printf("rgg/drm ratio = %.1f\n", total/drm);
    // DRM pair count
    size_t pairs=0; for (auto& c : p.drm.cell_components) pairs += c.size();
    std::printf("drm cells=%zu total (cell,comp) pairs=%zu\n", p.drm.cell_components.size(), pairs);
    return 0;
}
