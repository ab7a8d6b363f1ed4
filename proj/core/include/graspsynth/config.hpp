#pragma once

#include <cstdint>
#include <string>

#include "graspsynth/bench.hpp"
#include "graspsynth/cascade.hpp"

namespace graspsynth {

/// Every tunable of the pipeline in one declarative document. Values here
/// are the defaults; a JSON config may override any subset. Unknown keys
/// are rejected.
struct RunConfig {
  uint64_t seed = 1;

  // scene synthesis
  int scene_objects_min = 4;
  int scene_objects_max = 8;
  double table_extent = 0.35;
  int asset_library_size = 24;
  uint64_t asset_library_seed = 7;
  int camera_width = 128;
  int camera_height = 96;
  double camera_fov = 1.0;
  double camera_radius = 0.65;
  double depth_noise_sigma = 0.0;
  double flip_prob = 0.0;
  double merge_prob = 0.0;

  // crops
  double crop_box_size = 0.40;
  double crop_center_noise = 0.02;
  int crop_points = 4096;

  // candidate generation
  double standoff_min = 0.005;
  double standoff_max = 0.04;
  double hn_max_translation = 0.02;
  double hn_max_rotation = 15.0 * M_PI / 180.0;

  // cascade
  double evaluator_threshold = 0.5;
  double collision_threshold = 0.5;
  int mh_iterations = 20;
  double mh_translation_step = 0.01;
  double mh_rotation_step = 5.0 * M_PI / 180.0;
  int n_samples = 200;
  std::string collider = "soft_collision";
  double friction_mu = 0.5;

  // voxel baseline
  double voxel_size = 0.02;
  int voxel_points_per_object = 100;

  // gripper
  double jaw_width = 0.08;

  // dataset export
  int gripper_cloud_points = 128;

  // benchmark
  int bench_scenes = 20;
  int bench_grasps_per_scene = 120;
  int bench_reference_candidates = 400;

  // blocker
  int max_removals = 3;

  GraspPipeline pipeline(const GripperModel& gripper, const Scene* full_state = nullptr) const;
  BenchConfig bench() const;
};

/// Parses a JSON document over the defaults. Throws std::invalid_argument
/// naming the first unknown key.
RunConfig parse_config(const std::string& json_text);

/// Loads from a file; empty path falls back to the GRASPSYNTH_CONFIG
/// environment variable, and plain defaults when that is unset.
RunConfig load_config(const std::string& path);

/// Canonical serialization of the full document (every field).
std::string config_to_json(const RunConfig& config);

}  // namespace graspsynth
