#include <doctest.h>

#include <map>
#include <set>

#include "graspsynth/assets.hpp"
#include "graspsynth/primitives.hpp"
#include "graspsynth/render.hpp"
#include "graspsynth/rng.hpp"
#include "graspsynth/scene.hpp"
#include "graspsynth/segment.hpp"
#include "oracles.hpp"

using namespace graspsynth;

TEST_CASE("asset stable poses rest on the table") {
  Rng rng(3);
  for (const ObjectAsset& asset : procedural_asset_library(99, 12)) {
    double weight_sum = 0.0;
    for (const StablePose& sp : asset.stable_poses) {
      weight_sum += sp.weight;
      double min_z = std::numeric_limits<double>::max();
      for (const Vec3& v : asset.mesh.vertices) min_z = std::min(min_z, sp.pose.apply(v).z());
      CHECK(std::abs(min_z) < 1e-4);
    }
    CHECK(weight_sum == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(is_watertight(asset.mesh));
  }
  CHECK(heldout_asset_library().size() == 15);
}

TEST_CASE("stable pose sampling") {
  const Aabb point_region{{0, 0, 0}, {0, 0, 0}};

  SUBCASE("single pose with zero table extent keeps the pose up to yaw") {
    ObjectAsset asset = make_cylinder_asset("cyl", 0.03, 0.1);
    asset.stable_poses.resize(1);
    asset.stable_poses[0].weight = 1.0;
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
      const Pose p = sample_stable_pose(asset, point_region, rng);
      CHECK(p.translation.x() == 0.0);
      CHECK(p.translation.y() == 0.0);
      CHECK(p.translation.z() ==
            doctest::Approx(asset.stable_poses[0].pose.translation.z()).epsilon(1e-12));
      // Residual rotation after removing the stable orientation is a pure yaw.
      const Quat residual = p.rotation * asset.stable_poses[0].pose.rotation.conjugate();
      CHECK(std::abs(residual.x()) < 1e-12);
      CHECK(std::abs(residual.y()) < 1e-12);
    }
  }

  SUBCASE("degenerate weights always choose the certain pose") {
    ObjectAsset asset = make_box_asset("box", {0.04, 0.05, 0.06});
    asset.stable_poses[0].weight = 1.0;
    asset.stable_poses[1].weight = 0.0;
    asset.stable_poses[2].weight = 0.0;
    Rng rng(19);
    for (int i = 0; i < 50; ++i) {
      const Pose p = sample_stable_pose(asset, point_region, rng);
      CHECK(p.translation.z() ==
            doctest::Approx(asset.stable_poses[0].pose.translation.z()).epsilon(1e-12));
    }
  }

  SUBCASE("even weights draw evenly") {
    ObjectAsset asset = make_cylinder_asset("cyl", 0.03, 0.1);
    REQUIRE(asset.stable_poses.size() == 2);
    asset.stable_poses[0].weight = 0.5;
    asset.stable_poses[1].weight = 0.5;
    const double z0 = asset.stable_poses[0].pose.translation.z();
    Rng rng(23);
    int first = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
      const Pose p = sample_stable_pose(asset, point_region, rng);
      if (std::abs(p.translation.z() - z0) < 1e-9) ++first;
    }
    CHECK(std::abs(first / static_cast<double>(n) - 0.5) < 0.02);
  }

  SUBCASE("no stable poses is an error") {
    ObjectAsset asset;
    asset.mesh = make_box(Vec3(0.02, 0.02, 0.02));
    Rng rng(1);
    CHECK_THROWS_AS(sample_stable_pose(asset, point_region, rng), std::invalid_argument);
  }
}

TEST_CASE("rejection placement") {
  SUBCASE("empty table accepts on the first attempt") {
    Scene scene;
    Rng rng(29);
    const auto id = place_with_rejection(scene, make_box_asset("b", {0.05, 0.05, 0.05}), 1, rng);
    REQUIRE(id.has_value());
    CHECK(*id == 1);
    CHECK(scene.placements.size() == 1);
  }

  SUBCASE("fully covered table rejects every attempt") {
    Scene scene;
    scene.table_extent = 0.2;
    // Slab spanning the whole placement region.
    const ObjectAsset slab = make_box_asset("slab", {0.9, 0.9, 0.05});
    place_fixed(scene, slab, Pose::from_translation({0, 0, 0.025}));
    Rng rng(31);
    const auto id =
        place_with_rejection(scene, make_box_asset("b", {0.05, 0.05, 0.05}), 50, rng);
    CHECK_FALSE(id.has_value());
    CHECK(scene.placements.size() == 1);  // unchanged on failure
  }

  SUBCASE("generated scenes have no pairwise mesh intersections") {
    const auto library = procedural_asset_library(7, 8);
    Rng rng(37);
    int scenes_built = 0;
    for (int s = 0; s < 100; ++s) {
      Scene scene;
      Rng scene_rng = rng.fork(s);
      for (int k = 0; k < 5; ++k)
        place_with_rejection(scene, library[scene_rng.uniform_int(library.size())], 40,
                             scene_rng);
      if (scene.placements.size() < 2) continue;
      ++scenes_built;
      for (size_t i = 0; i < scene.placements.size(); ++i)
        for (size_t j = i + 1; j < scene.placements.size(); ++j) {
          const auto& a = scene.placements[i];
          const auto& b = scene.placements[j];
          // Exhaustive oracle, bounding-box prefiltered.
          if (!a.world_mesh.bounds().intersects(b.world_mesh.bounds())) continue;
          CHECK_FALSE(oracles::brute_force_mesh_collide(a.world_mesh, Pose::identity(),
                                                        b.world_mesh, Pose::identity()));
        }
    }
    CHECK(scenes_built >= 90);
  }
}

TEST_CASE("single view rendering") {
  SUBCASE("empty scene sees only the table") {
    Scene scene;
    const CameraModel cam = CameraModel::look_at({0.3, 0.2, 0.5}, {0, 0, 0}, 32, 24, 1.0);
    const PointCloud cloud = render_cloud(scene, cam);
    REQUIRE(cloud.size() > 0);
    for (int id : cloud.instance_ids) CHECK(id == kTableInstance);
    for (const Vec3& p : cloud.points) CHECK(std::abs(p.z()) < 1e-9);
  }

  SUBCASE("center pixel range equals the analytic depth") {
    Scene scene;
    const ObjectAsset box = make_box_asset("box", {0.1, 0.1, 0.1});
    place_fixed(scene, box, Pose::from_translation({0, 0, 0.05}));
    const double eye_height = 0.8;
    const CameraModel cam =
        CameraModel::look_at({0, 0, eye_height}, {0, 0, 0}, 33, 33, 0.8);
    const PointCloud cloud = render_cloud(scene, cam);

    // The exact center ray hits the top face at z = 0.1.
    double best = std::numeric_limits<double>::max();
    Vec3 center_point = Vec3::Zero();
    for (const Vec3& p : cloud.points) {
      const double d = (p - Vec3(0, 0, 0.1)).norm();
      if (d < best) {
        best = d;
        center_point = p;
      }
    }
    CHECK(best < 1e-9);
    const double range = (center_point - Vec3(0, 0, eye_height)).norm();
    CHECK(range == doctest::Approx(eye_height - 0.1).epsilon(1e-6));
  }

  SUBCASE("an object fully behind another is invisible") {
    Scene scene;
    // Wall between camera and a small box; camera looks horizontally.
    place_fixed(scene, make_box_asset("wall", {0.02, 0.4, 0.3}),
                Pose::from_translation({0.2, 0, 0.15}));
    place_fixed(scene, make_box_asset("hidden", {0.04, 0.04, 0.04}),
                Pose::from_translation({0.35, 0, 0.02}));
    const CameraModel cam = CameraModel::look_at({0, 0, 0.1}, {0.4, 0, 0.1}, 64, 48, 0.9);
    const PointCloud cloud = render_cloud(scene, cam);
    REQUIRE(cloud.size() > 0);
    for (int id : cloud.instance_ids) CHECK(id != 2);
  }

  SUBCASE("no rendered point is occluded from the camera") {
    const auto library = procedural_asset_library(13, 6);
    Scene scene;
    Rng rng(41);
    for (int k = 0; k < 4; ++k) place_with_rejection(scene, library[k], 40, rng);
    const CameraModel cam = CameraModel::look_at({0.5, 0.4, 0.6}, {0, 0, 0}, 48, 36, 1.0);
    const PointCloud cloud = render_cloud(scene, cam);
    REQUIRE(cloud.size() > 0);

    const Vec3 origin = cam.extrinsic.translation;
    for (const Vec3& p : cloud.points) {
      const Vec3 dir = (p - origin).normalized();
      double first_hit = std::numeric_limits<double>::max();
      for (const Placement& pl : scene.placements) {
        const auto hit = pl.world_bvh.raycast(origin, dir);
        if (hit && hit->t < first_hit) first_hit = hit->t;
      }
      if (dir.z() != 0.0) {
        const double t = (scene.table_height - origin.z()) / dir.z();
        if (t > 0.0 && t < first_hit) first_hit = t;
      }
      CHECK(std::abs(first_hit - (p - origin).norm()) < 1e-5);
    }
  }
}

namespace {

// Two abutting point patches on a 2 mm grid, instance `a` on x < 0 and
// instance `b` on x >= 0.
PointCloud abutting_patches(int a, int b, int rows) {
  PointCloud cloud;
  for (int i = -25; i < 25; ++i)
    for (int j = 0; j < rows; ++j)
      cloud.push(Vec3(i * 0.002, j * 0.002, 0.0), i < 0 ? a : b);
  return cloud;
}

}  // namespace

TEST_CASE("segmentation corruption") {
  SUBCASE("zero probabilities change nothing") {
    const PointCloud cloud = abutting_patches(1, 2, 30);
    Rng rng(43);
    const PointCloud out = corrupt_segmentation(cloud, 0.0, 0.0, rng);
    CHECK(out.instance_ids == cloud.instance_ids);
    for (size_t i = 0; i < cloud.size(); ++i) CHECK(out.points[i] == cloud.points[i]);
  }

  SUBCASE("certain merge removes the occluded instance") {
    // Instance 2 is smaller (fewer visible points) and touching instance 1.
    PointCloud cloud = abutting_patches(1, 2, 40);
    std::vector<int> keep;
    int dropped = 0;
    for (size_t i = 0; i < cloud.size(); ++i) {
      if (cloud.instance_ids[i] == 2 && cloud.points[i].x() > 0.02 && ++dropped) continue;
      keep.push_back(static_cast<int>(i));
    }
    cloud = cloud.subset(keep);
    REQUIRE(dropped > 0);

    Rng rng(47);
    const PointCloud out = corrupt_segmentation(cloud, 0.0, 1.0, rng);
    for (int id : out.instance_ids) CHECK(id != 2);
  }

  SUBCASE("half flip probability flips about half the boundary band") {
    const PointCloud cloud = abutting_patches(1, 2, 100);
    // Brute-force band membership.
    std::vector<int> band;
    for (size_t i = 0; i < cloud.size(); ++i) {
      for (size_t j = 0; j < cloud.size(); ++j) {
        if (cloud.instance_ids[i] == cloud.instance_ids[j]) continue;
        if ((cloud.points[i] - cloud.points[j]).norm() < 0.005) {
          band.push_back(static_cast<int>(i));
          break;
        }
      }
    }
    REQUIRE(band.size() > 300);

    Rng rng(53);
    const PointCloud out = corrupt_segmentation(cloud, 0.5, 0.0, rng);
    int flipped = 0;
    for (size_t i = 0; i < cloud.size(); ++i)
      if (out.instance_ids[i] != cloud.instance_ids[i]) ++flipped;
    const double fraction = flipped / static_cast<double>(band.size());
    CHECK(fraction > 0.45);
    CHECK(fraction < 0.55);

    // Nothing outside the band may flip.
    std::set<int> band_set(band.begin(), band.end());
    for (size_t i = 0; i < cloud.size(); ++i)
      if (!band_set.count(static_cast<int>(i)))
        CHECK(out.instance_ids[i] == cloud.instance_ids[i]);
  }
}

TEST_CASE("target crops") {
  const auto library = procedural_asset_library(61, 6);
  Scene scene;
  Rng rng(59);
  for (int k = 0; k < 3; ++k) REQUIRE(place_with_rejection(scene, library[k], 60, rng));
  const CameraModel cam = CameraModel::look_at({0.45, 0.35, 0.55}, {0, 0, 0}, 96, 72, 1.0);
  const PointCloud cloud = render_cloud(scene, cam);
  REQUIRE(!cloud.instance_indices(1).empty());

  SUBCASE("n_points equal to the in-box count reproduces those points exactly") {
    // Count the in-box points for a noiseless crop first.
    const auto target_idx = cloud.instance_indices(1);
    Vec3 centroid = Vec3::Zero();
    for (int i : target_idx) centroid += cloud.points[i];
    centroid /= static_cast<double>(target_idx.size());
    const Aabb box{centroid - Vec3::Constant(0.2), centroid + Vec3::Constant(0.2)};
    std::set<std::array<double, 3>> expected;
    int count = 0;
    for (const Vec3& p : cloud.points)
      if (box.contains(p)) {
        ++count;
        expected.insert({p.x(), p.y(), p.z()});
      }
    REQUIRE(count > 16);

    Rng crop_rng(67);
    const CropResult crop = crop_target(cloud, 1, 0.4, 0.0, count, crop_rng);
    CHECK(static_cast<int>(crop.scene_crop.size()) == count);
    for (const Vec3& p : crop.scene_crop.points)
      CHECK(expected.count({p.x(), p.y(), p.z()}) == 1);
  }

  SUBCASE("object crop is the target-labeled subset of the scene crop") {
    Rng crop_rng(71);
    const CropResult crop = crop_target(cloud, 1, 0.4, 0.0, 512, crop_rng);
    CHECK(crop.scene_crop.size() == 512);
    CHECK(!crop.object_crop.empty());
    std::set<std::array<double, 3>> scene_pts;
    for (const Vec3& p : crop.scene_crop.points) scene_pts.insert({p.x(), p.y(), p.z()});
    for (size_t i = 0; i < crop.object_crop.size(); ++i) {
      const Vec3& p = crop.object_crop.points[i];
      CHECK(scene_pts.count({p.x(), p.y(), p.z()}) == 1);
      CHECK(crop.object_crop.instance_ids[i] == 1);
    }
  }

  SUBCASE("every crop point existed in the input") {
    std::set<std::array<double, 3>> input_pts;
    for (const Vec3& p : cloud.points) input_pts.insert({p.x(), p.y(), p.z()});
    Rng crop_rng(73);
    const CropResult crop = crop_target(cloud, 2, 0.4, 0.02, 4096, crop_rng);
    CHECK(crop.scene_crop.size() == 4096);
    for (const Vec3& p : crop.scene_crop.points)
      CHECK(input_pts.count({p.x(), p.y(), p.z()}) == 1);
  }

  SUBCASE("absent target throws") {
    Rng crop_rng(79);
    CHECK_THROWS_AS(crop_target(cloud, 99, 0.4, 0.0, 128, crop_rng), std::invalid_argument);
  }
}
