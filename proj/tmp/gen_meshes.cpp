#include "rgg/trimesh.hpp"
using namespace rgg;
int main() {
    save_off(make_box({-0.7, -0.7, 0.0}, {0.7, 0.7, 4.5}), "data/meshes/link_upper.off");
    save_off(make_box({-0.6, -0.6, 0.0}, {0.6, 0.6, 4.0}), "data/meshes/link_fore.off");
    save_off(make_box({-0.9, -0.9, 0.0}, {0.9, 0.9, 1.6}), "data/meshes/effector.off");
    save_off(make_box({-6.0, -1.5, -1.5}, {6.0, 1.5, 1.5}), "data/meshes/prism_a.off");
    save_off(make_box({-5.0, -1.0, -1.0}, {5.0, 1.0, 1.0}), "data/meshes/prism_b.off");
    save_off(make_box({-4.0, -4.0, -1.0}, {4.0, 4.0, 1.0}), "data/meshes/prism_c.off");
    save_off(make_box({-3.0, -2.0, -2.0}, {3.0, 2.0, 2.0}), "data/meshes/prism_d.off");
    return 0;
}
