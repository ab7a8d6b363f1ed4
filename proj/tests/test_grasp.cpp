#include <doctest.h>

#include <algorithm>

#include "graspsynth/collision.hpp"
#include "graspsynth/metrics.hpp"
#include "graspsynth/primitives.hpp"
#include "graspsynth/rng.hpp"
#include "graspsynth/sampler.hpp"

using namespace graspsynth;

namespace {

PointCloud flat_patch(double z, int side, double spacing) {
  PointCloud cloud;
  for (int i = -side; i <= side; ++i)
    for (int j = -side; j <= side; ++j)
      cloud.push(Vec3(i * spacing, j * spacing, z), Vec3::UnitZ(), 1);
  return cloud;
}

PointCloud sphere_cloud(const Vec3& center, double radius, int n, Rng& rng) {
  PointCloud cloud;
  for (int i = 0; i < n; ++i) {
    const Vec3 dir = rng.unit_vector();
    cloud.push(center + radius * dir, dir, 1);
  }
  return cloud;
}

}  // namespace

TEST_CASE("surface normal sampler") {
  SUBCASE("k = 0 gives an empty sequence") {
    Rng rng(1);
    PointCloud cloud = flat_patch(0.0, 3, 0.01);
    CHECK(surface_normal_sampler(cloud, 0, 0.01, 0.02, rng).empty());
  }

  SUBCASE("empty cloud throws") {
    Rng rng(1);
    CHECK_THROWS_AS(surface_normal_sampler(PointCloud{}, 5, 0.01, 0.02, rng),
                    std::invalid_argument);
  }

  SUBCASE("flat patch with fixed standoff puts every grasp at that height") {
    Rng rng(3);
    PointCloud cloud = flat_patch(0.0, 4, 0.01);
    const double s = 0.025;
    for (const Grasp& g : surface_normal_sampler(cloud, 50, s, s, rng)) {
      CHECK(g.pose.translation.z() == doctest::Approx(s).epsilon(1e-12));
      CHECK((approach_axis(g.pose) - (-Vec3::UnitZ())).norm() < 1e-9);
      CHECK(g.source == GraspSource::surface_normal);
    }
  }

  SUBCASE("approach is anti-parallel to the sampled normal") {
    Rng rng(5);
    Rng cloud_rng(6);
    const PointCloud cloud = sphere_cloud({0.1, -0.05, 0.2}, 0.04, 300, cloud_rng);
    for (const Grasp& g : surface_normal_sampler(cloud, 100, 0.0, 0.03, rng)) {
      // Find the generating surface point: the approach line must pass
      // through the sphere center.
      const Vec3 o = g.pose.translation;
      const Vec3 d = approach_axis(g.pose);
      const Vec3 to_center = Vec3(0.1, -0.05, 0.2) - o;
      const double off_axis = (to_center - to_center.dot(d) * d).norm();
      CHECK(off_axis < 1e-3);
      CHECK(to_center.dot(d) > 0.0);  // approaching the sphere, not leaving it
    }
  }

  SUBCASE("same seed reproduces bit-identical grasps") {
    PointCloud cloud = flat_patch(0.05, 4, 0.01);
    Rng a(77), b(77);
    const auto ga = surface_normal_sampler(cloud, 20, 0.0, 0.03, a);
    const auto gb = surface_normal_sampler(cloud, 20, 0.0, 0.03, b);
    REQUIRE(ga.size() == gb.size());
    for (size_t i = 0; i < ga.size(); ++i) {
      CHECK(ga[i].pose.translation == gb[i].pose.translation);
      CHECK(ga[i].pose.rotation.coeffs() == gb[i].pose.rotation.coeffs());
    }
  }
}

TEST_CASE("grasp perturbation") {
  const GripperModel gripper = make_parallel_jaw_gripper();
  Grasp base;
  base.pose = Pose(Quat(0.8, 0.1, 0.5, -0.2), Vec3(0.2, -0.1, 0.3));

  SUBCASE("zero magnitudes reproduce the pose") {
    Rng rng(7);
    const Grasp p = perturb(base, 0.0, 0.0, rng);
    CHECK((p.pose.translation - base.pose.translation).norm() < 1e-15);
    CHECK(rotation_angle(p.pose, base.pose) < 1e-9);
    CHECK(p.source == GraspSource::perturbed);
  }

  SUBCASE("pure translation stays within the metric bound") {
    Rng rng(11);
    const double d = 0.03;
    for (int i = 0; i < 200; ++i) {
      const Grasp p = perturb(base, d, 0.0, rng);
      CHECK(grasp_distance(base.pose, p.pose, gripper) <= d + 1e-12);
    }
  }

  SUBCASE("translation norms are uniform on [0, d]") {
    Rng rng(13);
    const double d = 0.05;
    const int n = 10000;
    std::vector<double> norms;
    norms.reserve(n);
    for (int i = 0; i < n; ++i) {
      const Grasp p = perturb(base, d, 0.0, rng);
      norms.push_back((p.pose.translation - base.pose.translation).norm());
    }
    std::sort(norms.begin(), norms.end());
    double ks = 0.0;
    for (int i = 0; i < n; ++i) {
      const double expected = norms[i] / d;
      ks = std::max(ks, std::abs(expected - (i + 1.0) / n));
      ks = std::max(ks, std::abs(expected - static_cast<double>(i) / n));
    }
    CHECK(ks < 0.05);
  }
}

TEST_CASE("hard negatives") {
  const GripperModel gripper = make_parallel_jaw_gripper();

  // A graspable plate inside the closing region of the identity pose:
  // two-sided, thin, centered.
  PointCloud plate;
  for (int i = -4; i <= 4; ++i)
    for (int k = 1; k <= 4; ++k) {
      plate.push(Vec3(0.002 * i, 0.002, 0.01 * k), Vec3::UnitY(), 1);
      plate.push(Vec3(0.002 * i, -0.002, 0.01 * k), -Vec3::UnitY(), 1);
    }

  std::vector<Grasp> positives(1);
  positives[0].pose = Pose::identity();

  SUBCASE("zero perturbation yields nothing") {
    Rng rng(17);
    HardNegativeParams params;
    params.max_translation = 0.0;
    params.max_rotation = 0.0;
    CHECK(hard_negatives(positives, plate, gripper, params, rng).empty());
  }

  SUBCASE("a far-away positive is kept as too far") {
    std::vector<Grasp> far(1);
    far[0].pose = Pose::from_translation({0, 0, 0.5});
    Rng rng(19);
    HardNegativeParams params;
    params.max_translation = 0.0;
    params.max_rotation = 0.0;
    const auto out = hard_negatives(far, plate, gripper, params, rng);
    CHECK(out.size() == params.attempts_per_positive);
  }

  SUBCASE("every output collides or holds nothing, per the oracle re-check") {
    Rng rng(23);
    HardNegativeParams params;
    const auto out = hard_negatives(std::vector<Grasp>(50, positives[0]), plate, gripper,
                                    params, rng);
    REQUIRE(!out.empty());
    for (const Grasp& g : out) {
      bool collides = false;
      bool holds = false;
      for (const Vec3& p : plate.points) {
        if (point_in_body(gripper, g.pose, p)) collides = true;
        const Vec3 local = inverse(g.pose).apply(p);
        if (gripper.closing_region.expanded(params.far_margin).contains(local)) holds = true;
      }
      CHECK((collides || !holds));
    }
  }

  SUBCASE("empty positives throw") {
    Rng rng(29);
    CHECK_THROWS_AS(hard_negatives({}, plate, gripper, {}, rng), std::invalid_argument);
  }
}

TEST_CASE("free space grasps") {
  const GripperModel gripper = make_parallel_jaw_gripper();

  SUBCASE("n = 0 is empty") {
    Scene scene;
    Rng rng(31);
    CHECK(free_space_grasps(scene, gripper, 0, rng).empty());
  }

  SUBCASE("every output is exactly collision-free") {
    Scene scene;
    place_fixed(scene, make_box_asset("b", {0.06, 0.06, 0.12}),
                Pose::from_translation({0, 0, 0.06}));
    Rng rng(37);
    const auto grasps = free_space_grasps(scene, gripper, 40, rng);
    CHECK(grasps.size() == 40);
    for (const Grasp& g : grasps) {
      CHECK_FALSE(exact_collision(gripper, g.pose, scene).colliding);
      CHECK(g.source == GraspSource::free_space);
    }
  }
}

TEST_CASE("reference set generation") {
  const GripperModel gripper = make_parallel_jaw_gripper();

  SUBCASE("a lone box yields collision-free positives") {
    Scene scene;
    place_fixed(scene, make_box_asset("box", {0.04, 0.04, 0.04}),
                Pose::from_translation({0, 0, 0.02}));
    Rng rng(41);
    const auto refs = generate_reference_set(scene, 1, gripper, 500, 0.5, rng);
    CHECK(refs.size() == 500);
    int good = 0;
    for (const auto& [g, label] : refs)
      if (label.quality == GraspQuality::positive && !label.collision) ++good;
    CHECK(good >= 1);
  }

  SUBCASE("labels are reproducible against the oracles") {
    Scene scene;
    place_fixed(scene, make_box_asset("box", {0.05, 0.04, 0.06}),
                Pose::from_translation({0, 0, 0.03}));
    place_fixed(scene, make_box_asset("clutter", {0.05, 0.05, 0.09}),
                Pose::from_translation({0.08, 0, 0.045}));
    Rng rng(43);
    const auto refs = generate_reference_set(scene, 1, gripper, 120, 0.5, rng);

    Scene isolated;
    place_fixed(isolated, scene.placements[0].asset, scene.placements[0].pose);
    for (const auto& [g, label] : refs) {
      const bool quality = success_oracle(g.pose, isolated, 1, gripper, 0.5);
      const bool collision = exact_collision(gripper, g.pose, scene).colliding;
      CHECK((label.quality == GraspQuality::positive) == quality);
      CHECK(label.collision == collision);
      CHECK(label_valid(label));
      CHECK((label.set == GraspSet::g_plus) == quality);
    }
  }

  SUBCASE("an encased target admits no collision-free positives") {
    Scene scene;
    place_fixed(scene, make_box_asset("target", {0.03, 0.03, 0.03}),
                Pose::from_translation({0, 0, 0.015}));
    // Tight closed shell: interior 8 cm wide, 6 cm tall; no gripper pose
    // near the target fits inside, and the lid blocks from above.
    const double t = 0.01;
    place_fixed(scene, make_box_asset("wx+", {t, 0.1, 0.06}),
                Pose::from_translation({0.045, 0, 0.03}));
    place_fixed(scene, make_box_asset("wx-", {t, 0.1, 0.06}),
                Pose::from_translation({-0.045, 0, 0.03}));
    place_fixed(scene, make_box_asset("wy+", {0.1, t, 0.06}),
                Pose::from_translation({0, 0.045, 0.03}));
    place_fixed(scene, make_box_asset("wy-", {0.1, t, 0.06}),
                Pose::from_translation({0, -0.045, 0.03}));
    place_fixed(scene, make_box_asset("lid", {0.11, 0.11, t}),
                Pose::from_translation({0, 0, 0.065}));

    Rng rng(47);
    const auto refs = generate_reference_set(scene, 1, gripper, 300, 0.5, rng);
    for (const auto& [g, label] : refs) {
      if (label.quality == GraspQuality::positive) CHECK(label.collision);
    }
  }
}
