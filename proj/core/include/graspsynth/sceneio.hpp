#pragma once

#include <string>

#include "graspsynth/render.hpp"
#include "graspsynth/scene.hpp"

namespace graspsynth {

struct SceneBundle {
  Scene scene;
  CameraModel camera;
};

/// Canonical scene document: table, camera intrinsics/extrinsics, and
/// placements as (asset descriptor, quaternion wxyz, translation xyz).
/// Field order and float formatting are pinned, so saving a loaded scene
/// reproduces the file byte for byte.
std::string scene_to_json(const SceneBundle& bundle);
SceneBundle scene_from_json(const std::string& json_text);

void save_scene(const SceneBundle& bundle, const std::string& path);
SceneBundle load_scene(const std::string& path);

/// ASCII PLY with per-point instance id and source flag properties (and
/// normals when present), using the canonical float format.
std::string cloud_to_ply(const PointCloud& cloud);
void save_ply(const PointCloud& cloud, const std::string& path);

}  // namespace graspsynth
