#include "rgg/scene.hpp"
#include "rgg/roadmap.hpp"
#include <cstdio>
using namespace rgg;
int main(){
    SceneDoc s = load_scene("data/scenes/default.json");
    for (int k : {4, 5}) for (int n : {330, 350, 370}) {
        Roadmap r = build_prm(s.robot, s.workspace, n, k, s.params.seed, s.params.eps);
        std::printf("n=%d k=%d -> edges=%zu\n", n, k, r.edges.size());
    }
    return 0;
}
