#include "rgg/cache.hpp"
#include "rgg/rgg_update.hpp"
#include <chrono>
#include <cstdio>
using namespace rgg;
using clk = std::chrono::steady_clock;
static double ms(clk::time_point a, clk::time_point b){ return std::chrono::duration<double,std::milli>(b-a).count(); }
int main(){
    Preprocessed p = load_cache("tmp/desk.cache");
    std::vector<Pose> poses;
    for (auto& o : p.scene.obstacles) poses.push_back({Mat3::rot_z(0.7)*Mat3::rot_y(0.5), o.pose.translation});
    ObstacleApprox posed = p.rgg.obstacles[0]; posed.set_pose(poses[0]);
    auto spheres = posed.posed_spheres();

    const int N = 500;
    // 1: queries only
    double t_query = 0; size_t total_hits = 0;
    {
        std::vector<int64_t> hits;
        auto t0 = clk::now();
        for (int it=0; it<N; ++it) {
            total_hits = 0;
            for (auto& s : spheres) { hits.clear(); p.rgg.inner_tree.query_into(s, hits); total_hits += hits.size(); }
        }
        t_query = ms(t0, clk::now())/N;
    }
    // 2: narrow only (pre-gathered candidates)
    std::vector<std::pair<int32_t,std::pair<int,int>>> cands; // spline, (sphere)
    {
        std::vector<int64_t> hits;
        for (size_t s=0;s<spheres.size();++s){ hits.clear(); p.rgg.inner_tree.query_into(spheres[s], hits);
            for (auto id : hits) cands.push_back({(int32_t)id,{(int)s,0}}); }
    }
    double t_narrow = 0; size_t reds=0;
    {
        auto t0 = clk::now();
        for (int it=0; it<N; ++it) {
            reds = 0;
            for (auto& [spl, os] : cands) {
                const Sphere& sphere = spheres[os.first];
                const double limit = sphere.radius + p.rgg.spline_limit[spl];
                const double limit2 = limit*limit;
                const Vec3* pts = p.rgg.spline_points_flat.data() + p.rgg.spline_begin[spl];
                const int np = p.rgg.spline_begin[spl+1]-p.rgg.spline_begin[spl];
                double best2 = norm2(sphere.center - pts[0]);
                for (int i=0;i+1<np && best2>limit2;++i){
                    const Vec3 ab = pts[i+1]-pts[i];
                    const double len2 = norm2(ab);
                    double t = len2>0.0? dot(sphere.center-pts[i],ab)/len2 : 0.0;
                    t = t<0?0:(t>1?1:t);
                    const Vec3 q = pts[i]+ab*t;
                    const double d2 = norm2(sphere.center-q);
                    if (d2<best2) best2=d2;
                }
                if (best2<=limit2) reds++;
            }
        }
        t_narrow = ms(t0, clk::now())/N;
    }
    // 3. posing cost
    double t_pose = 0;
    {
        auto t0 = clk::now();
        for (int it=0; it<N; ++it) { ObstacleApprox pp = p.rgg.obstacles[0]; pp.set_pose(poses[0]); auto ss = pp.posed_spheres(); (void)ss; }
        t_pose = ms(t0, clk::now())/N;
    }
    std::printf("query=%0.4fms (hits=%zu) narrow=%.4fms (cands=%zu contacts=%zu) pose=%.4fms\n",
        t_query, total_hits, t_narrow, cands.size(), reds, t_pose);
    return 0;
}
