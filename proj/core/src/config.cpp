#include "graspsynth/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "graspsynth/canonical_json.hpp"

namespace graspsynth {

GraspPipeline RunConfig::pipeline(const GripperModel& gripper, const Scene* full_state) const {
  GraspPipeline p;
  p.gripper = &gripper;
  p.config.evaluator_threshold = evaluator_threshold;
  p.config.collision_threshold = collision_threshold;
  p.config.mh_iterations = mh_iterations;
  p.config.mh_translation_step = mh_translation_step;
  p.config.mh_rotation_step = mh_rotation_step;
  p.config.n_samples = n_samples;
  p.collider = collider;
  p.friction_mu = friction_mu;
  p.crop_box_size = crop_box_size;
  p.crop_center_noise = 0.0;  // planning crops are centered, noise is for training data
  p.crop_points = crop_points;
  p.standoff_min = standoff_min;
  p.standoff_max = standoff_max;
  p.voxel_points_per_object = voxel_points_per_object;
  p.voxel_size = voxel_size;
  p.full_state = full_state;
  return p;
}

BenchConfig RunConfig::bench() const {
  BenchConfig b;
  b.scenes = bench_scenes;
  b.objects_min = scene_objects_min;
  b.objects_max = scene_objects_max;
  b.seed = seed;
  b.grasps_per_scene = bench_grasps_per_scene;
  b.reference_candidates = bench_reference_candidates;
  b.mh_iterations = mh_iterations;
  b.friction_mu = friction_mu;
  b.crop_points = crop_points;
  b.crop_box_size = crop_box_size;
  return b;
}

namespace {

template <typename T>
void assign(const nlohmann::json& j, T& field) {
  field = j.get<T>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  RunConfig config;
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  if (!doc.is_object()) throw std::invalid_argument("config: top level must be an object");

  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") assign(value, config.seed);
    else if (key == "scene_objects_min") assign(value, config.scene_objects_min);
    else if (key == "scene_objects_max") assign(value, config.scene_objects_max);
    else if (key == "table_extent") assign(value, config.table_extent);
    else if (key == "asset_library_size") assign(value, config.asset_library_size);
    else if (key == "asset_library_seed") assign(value, config.asset_library_seed);
    else if (key == "camera_width") assign(value, config.camera_width);
    else if (key == "camera_height") assign(value, config.camera_height);
    else if (key == "camera_fov") assign(value, config.camera_fov);
    else if (key == "camera_radius") assign(value, config.camera_radius);
    else if (key == "depth_noise_sigma") assign(value, config.depth_noise_sigma);
    else if (key == "flip_prob") assign(value, config.flip_prob);
    else if (key == "merge_prob") assign(value, config.merge_prob);
    else if (key == "crop_box_size") assign(value, config.crop_box_size);
    else if (key == "crop_center_noise") assign(value, config.crop_center_noise);
    else if (key == "crop_points") assign(value, config.crop_points);
    else if (key == "standoff_min") assign(value, config.standoff_min);
    else if (key == "standoff_max") assign(value, config.standoff_max);
    else if (key == "hn_max_translation") assign(value, config.hn_max_translation);
    else if (key == "hn_max_rotation") assign(value, config.hn_max_rotation);
    else if (key == "evaluator_threshold") assign(value, config.evaluator_threshold);
    else if (key == "collision_threshold") assign(value, config.collision_threshold);
    else if (key == "mh_iterations") assign(value, config.mh_iterations);
    else if (key == "mh_translation_step") assign(value, config.mh_translation_step);
    else if (key == "mh_rotation_step") assign(value, config.mh_rotation_step);
    else if (key == "n_samples") assign(value, config.n_samples);
    else if (key == "collider") assign(value, config.collider);
    else if (key == "friction_mu") assign(value, config.friction_mu);
    else if (key == "voxel_size") assign(value, config.voxel_size);
    else if (key == "voxel_points_per_object") assign(value, config.voxel_points_per_object);
    else if (key == "jaw_width") assign(value, config.jaw_width);
    else if (key == "gripper_cloud_points") assign(value, config.gripper_cloud_points);
    else if (key == "bench_scenes") assign(value, config.bench_scenes);
    else if (key == "bench_grasps_per_scene") assign(value, config.bench_grasps_per_scene);
    else if (key == "bench_reference_candidates") assign(value, config.bench_reference_candidates);
    else if (key == "max_removals") assign(value, config.max_removals);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::string effective = path;
  if (effective.empty()) {
    if (const char* env = std::getenv("GRASPSYNTH_CONFIG")) effective = env;
  }
  if (effective.empty()) return RunConfig{};

  std::ifstream in(effective);
  if (!in) throw std::runtime_error("cannot open config file: " + effective);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const RunConfig& c) {
  JsonWriter w;
  w.begin_object();
  w.key("seed").value(c.seed);
  w.key("scene_objects_min").value(c.scene_objects_min);
  w.key("scene_objects_max").value(c.scene_objects_max);
  w.key("table_extent").value(c.table_extent);
  w.key("asset_library_size").value(c.asset_library_size);
  w.key("asset_library_seed").value(c.asset_library_seed);
  w.key("camera_width").value(c.camera_width);
  w.key("camera_height").value(c.camera_height);
  w.key("camera_fov").value(c.camera_fov);
  w.key("camera_radius").value(c.camera_radius);
  w.key("depth_noise_sigma").value(c.depth_noise_sigma);
  w.key("flip_prob").value(c.flip_prob);
  w.key("merge_prob").value(c.merge_prob);
  w.key("crop_box_size").value(c.crop_box_size);
  w.key("crop_center_noise").value(c.crop_center_noise);
  w.key("crop_points").value(c.crop_points);
  w.key("standoff_min").value(c.standoff_min);
  w.key("standoff_max").value(c.standoff_max);
  w.key("hn_max_translation").value(c.hn_max_translation);
  w.key("hn_max_rotation").value(c.hn_max_rotation);
  w.key("evaluator_threshold").value(c.evaluator_threshold);
  w.key("collision_threshold").value(c.collision_threshold);
  w.key("mh_iterations").value(c.mh_iterations);
  w.key("mh_translation_step").value(c.mh_translation_step);
  w.key("mh_rotation_step").value(c.mh_rotation_step);
  w.key("n_samples").value(c.n_samples);
  w.key("collider").value(c.collider);
  w.key("friction_mu").value(c.friction_mu);
  w.key("voxel_size").value(c.voxel_size);
  w.key("voxel_points_per_object").value(c.voxel_points_per_object);
  w.key("jaw_width").value(c.jaw_width);
  w.key("gripper_cloud_points").value(c.gripper_cloud_points);
  w.key("bench_scenes").value(c.bench_scenes);
  w.key("bench_grasps_per_scene").value(c.bench_grasps_per_scene);
  w.key("bench_reference_candidates").value(c.bench_reference_candidates);
  w.key("max_removals").value(c.max_removals);
  w.end_object();
  return w.str();
}

}  // namespace graspsynth
