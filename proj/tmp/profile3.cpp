#include "rgg/cache.hpp"
#include "rgg/rgg_update.hpp"
#include <chrono>
#include <cstdio>
using namespace rgg;
using clk = std::chrono::steady_clock;
static double ms(clk::time_point a, clk::time_point b){ return std::chrono::duration<double,std::milli>(b-a).count(); }
int main(){
    Preprocessed p = load_cache("tmp/desk10.cache");
    std::vector<Pose> poses;
    for (auto& o : p.scene.obstacles) poses.push_back({Mat3::rot_z(0.7)*Mat3::rot_y(0.5), o.pose.translation});
    ObstacleApprox posed = p.rgg.obstacles[0]; posed.set_pose(poses[0]);
    auto spheres = posed.posed_spheres();
    const int N=1000;
    std::vector<std::pair<int32_t,int64_t>> hits;
    // batched query alone
    auto t0 = clk::now();
    for (int i=0;i<N;i++){ hits.clear(); p.rgg.inner_tree.query_into(std::span<const Sphere>(spheres), hits); }
    auto t1 = clk::now();
    std::printf("batched query: %.4f ms (%zu hits)\n", ms(t0,t1)/N, hits.size());
    // full red phase equivalent (from rgg_update internals, measured via rgg_update with empty... just call rgg_update)
    double red=0, green=0;
    for (int i=0;i<N/5;i++){ auto r = rgg_update(p.rgg, poses, 0); red+=r.red_phase_ms; green+=r.green_phase_ms; }
    std::printf("red=%.4f green=%.4f\n", red/(N/5), green/(N/5));
    // outer query alone
    t0 = clk::now();
    std::vector<int64_t> ohits;
    for (int i=0;i<N;i++){ ohits.clear(); p.rgg.outer_tree.query_into(posed.outer, ohits); }
    t1 = clk::now();
    std::printf("outer query: %.4f ms (%zu hits)\n", ms(t0,t1)/N, ohits.size());
    return 0;
}
