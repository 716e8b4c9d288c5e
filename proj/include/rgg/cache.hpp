#pragma once

#include <filesystem>

#include "rgg/drm.hpp"
#include "rgg/rgg_update.hpp"
#include "rgg/roadmap.hpp"
#include "rgg/scene.hpp"

namespace rgg {

/// Everything `build` produces: the scene (meshes embedded), the roadmap, and
/// both preprocessed indexes. update/bench/validate run from this alone.
struct Preprocessed {
    SceneDoc scene;
    Roadmap roadmap;
    RggIndex rgg;
    DrmIndex drm;
};

/// Versioned binary cache. Doubles are stored raw, so a load reproduces
/// bitwise-equal configurations and approximations.
void save_cache(const Preprocessed& p, const std::filesystem::path& path);
Preprocessed load_cache(const std::filesystem::path& path);

}  // namespace rgg
