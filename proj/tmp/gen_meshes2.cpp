#include "rgg/trimesh.hpp"
using namespace rgg;
int main() {
    save_off(make_box({-1.1, -1.1, 0.0}, {1.1, 1.1, 5.5}), "data/meshes/link_upper.off");
    save_off(make_box({-0.9, -0.9, 0.0}, {0.9, 0.9, 4.5}), "data/meshes/link_fore.off");
    save_off(make_box({-1.3, -1.3, 0.0}, {1.3, 1.3, 1.8}), "data/meshes/effector.off");
    return 0;
}
