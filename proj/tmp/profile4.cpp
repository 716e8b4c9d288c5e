#include "rgg/cache.hpp"
#include "rgg/rgg_update.hpp"
#include "rgg/oracle.hpp"
#include <chrono>
#include <cstdio>
#include <algorithm>
using namespace rgg;
using clk = std::chrono::steady_clock;
static double ms(clk::time_point a, clk::time_point b){ return std::chrono::duration<double,std::milli>(b-a).count(); }
int main(){
    Preprocessed p = load_cache("tmp/desk.cache");
    std::vector<Pose> poses;
    for (auto& o : p.scene.obstacles) poses.push_back({Mat3::rot_z(0.7)*Mat3::rot_y(0.5), o.pose.translation});
    std::vector<double> t_first, t_second, t_drm;
    for (int i=0;i<12;i++){
        // interleave oracle churn like the bench protocol
        auto gt = ground_truth(p.roadmap, p.scene.robot, p.scene.obstacles, poses);
        (void)gt;
        auto a0 = clk::now();
        auto r1 = rgg_update(p.rgg, poses, 0);
        auto a1 = clk::now();
        auto r2 = rgg_update(p.rgg, poses, 0);
        auto a2 = clk::now();
        auto d = drm_update(p.drm, p.scene.obstacles, poses, 0);
        auto a3 = clk::now();
        t_first.push_back(ms(a0,a1)); t_second.push_back(ms(a1,a2)); t_drm.push_back(ms(a2,a3));
    }
    auto med=[](std::vector<double> v){ std::sort(v.begin(),v.end()); return v[v.size()/2]; };
    std::printf("rgg first-after-oracle median=%.3fms  second=%.3fms  drm=%.4fms\n",
        med(t_first), med(t_second), med(t_drm));
    return 0;
}
