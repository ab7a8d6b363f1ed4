#include <doctest.h>

#include "graspsynth/metrics.hpp"
#include "graspsynth/primitives.hpp"
#include "graspsynth/rng.hpp"
#include "graspsynth/sampler.hpp"

using namespace graspsynth;

namespace {

// Approach along -x, fingertips just past the box center: closes across the
// +-y faces of a box standing at the origin.
Pose side_grasp_on_box(double grasp_height) {
  return compose(compose(Pose::from_translation({0, 0, grasp_height}),
                         Pose::from_axis_angle(Vec3::UnitY(), M_PI / 2)),
                 Pose::from_translation({0, 0, -0.045}));
}

Grasp at(const Pose& pose) {
  Grasp g;
  g.pose = pose;
  return g;
}

}  // namespace

TEST_CASE("success oracle") {
  const GripperModel gripper = make_parallel_jaw_gripper();
  Scene scene;
  place_fixed(scene, make_box_asset("box", {0.04, 0.04, 0.04}),
              Pose::from_translation({0, 0, 0.02}));

  SUBCASE("free-space grasp far from the target fails") {
    CHECK_FALSE(success_oracle(Pose::from_translation({0.3, 0.3, 0.3}), scene, 1, gripper, 0.5));
  }

  SUBCASE("canonical side grasp on a 4 cm box succeeds") {
    CHECK(success_oracle(side_grasp_on_box(0.02), scene, 1, gripper, 0.5));
  }

  SUBCASE("a neighbor intersecting the gripper fails the same grasp") {
    Scene cluttered = scene;
    // Tall box exactly where the palm sits (behind the grasp origin).
    place_fixed(cluttered, make_box_asset("wall", {0.04, 0.2, 0.2}),
                Pose::from_translation({-0.07, 0, 0.1}));
    CHECK_FALSE(success_oracle(side_grasp_on_box(0.02), cluttered, 1, gripper, 0.5));
  }

  SUBCASE("absent target throws") {
    CHECK_THROWS_AS(success_oracle(Pose::identity(), scene, 9, gripper, 0.5),
                    std::invalid_argument);
  }

  SUBCASE("deterministic across calls") {
    const Pose g = side_grasp_on_box(0.02);
    const bool first = success_oracle(g, scene, 1, gripper, 0.5);
    for (int i = 0; i < 5; ++i) CHECK(success_oracle(g, scene, 1, gripper, 0.5) == first);
  }
}

TEST_CASE("coverage metric") {
  const GripperModel gripper = make_parallel_jaw_gripper();
  Rng rng(71);
  std::vector<Grasp> reference;
  for (int i = 0; i < 20; ++i)
    reference.push_back(at({rng.rotation(), rng.in_box({{-0.2, -0.2, 0}, {0.2, 0.2, 0.2}})}));

  SUBCASE("reference covers itself exactly") {
    CHECK(coverage(reference, reference, gripper) == 1.0);
  }

  SUBCASE("nothing generated covers nothing") {
    CHECK(coverage({}, reference, gripper) == 0.0);
  }

  SUBCASE("a 1 cm displaced twin covers at the paper radius of 2 cm") {
    const std::vector<Grasp> ref = {at(Pose::from_translation({0.1, 0, 0.1}))};
    const std::vector<Grasp> gen = {at(Pose::from_translation({0.1, 0.01, 0.1}))};
    CHECK(coverage(gen, ref, gripper) == 1.0);
    // And misses at a radius below the displacement.
    CHECK(coverage(gen, ref, gripper, 0.005) == 0.0);
  }

  SUBCASE("empty reference throws") {
    CHECK_THROWS_AS(coverage(reference, {}, gripper), std::invalid_argument);
  }

  SUBCASE("coverage never drops as the generated set grows") {
    Rng grow(73);
    std::vector<Grasp> generated;
    double previous = 0.0;
    for (int step = 0; step < 30; ++step) {
      generated.push_back(
          at({grow.rotation(), grow.in_box({{-0.2, -0.2, 0}, {0.2, 0.2, 0.2}})}));
      const double c = coverage(generated, reference, gripper);
      CHECK(c >= previous);
      previous = c;
    }
  }
}

TEST_CASE("success rate") {
  const GripperModel gripper = make_parallel_jaw_gripper();
  Scene scene;
  place_fixed(scene, make_box_asset("box", {0.04, 0.04, 0.04}),
              Pose::from_translation({0, 0, 0.02}));

  SUBCASE("empty input is flagged and pinned to one") {
    const SuccessRate r = success_rate({}, scene, 1, gripper, 0.5);
    CHECK(r.rate == 1.0);
    CHECK(r.empty_input);
  }

  SUBCASE("all good and all bad") {
    const std::vector<Grasp> good = {at(side_grasp_on_box(0.02)), at(side_grasp_on_box(0.025))};
    CHECK(success_rate(good, scene, 1, gripper, 0.5).rate == 1.0);
    const std::vector<Grasp> bad = {at(Pose::from_translation({0.3, 0.3, 0.3}))};
    CHECK(success_rate(bad, scene, 1, gripper, 0.5).rate == 0.0);
  }

  SUBCASE("mixed set matches a per-grasp recount") {
    std::vector<Grasp> mixed;
    mixed.push_back(at(side_grasp_on_box(0.02)));
    mixed.push_back(at(Pose::from_translation({0.3, 0.3, 0.3})));
    mixed.push_back(at(side_grasp_on_box(0.022)));
    mixed.push_back(at(Pose::from_translation({0, 0, 0.01})));  // rams the box
    int successes = 0;
    for (const Grasp& g : mixed)
      if (success_oracle(g.pose, scene, 1, gripper, 0.5)) ++successes;
    CHECK(success_rate(mixed, scene, 1, gripper, 0.5).rate ==
          doctest::Approx(successes / 4.0));
  }
}

TEST_CASE("area under curve") {
  CHECK(auc({{0, 1}, {1, 1}}) == doctest::Approx(1.0));
  CHECK(auc({{0, 0}, {1, 0}}) == doctest::Approx(0.0));
  CHECK(auc({{0, 1}, {1, 0}}) == doctest::Approx(0.5));
  CHECK(auc({{0, 0.6}, {1, 0.6}}) == doctest::Approx(0.6));

  SUBCASE("flat extension to zero coverage") {
    CHECK(auc({{0.5, 0.8}, {1.0, 0.8}}) == doctest::Approx(0.8));
  }

  SUBCASE("bounded for random monotone curves") {
    Rng rng(79);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::pair<double, double>> pts;
      double cov = 0.0;
      for (int i = 0; i < 10; ++i) {
        cov = std::min(1.0, cov + rng.uniform(0.0, 0.15));
        pts.emplace_back(cov, rng.uniform());
      }
      const double a = auc(pts);
      CHECK(a >= 0.0);
      CHECK(a <= 1.0);
    }
  }
}

TEST_CASE("curve sweep") {
  const GripperModel gripper = make_parallel_jaw_gripper();
  Scene scene;
  place_fixed(scene, make_box_asset("box", {0.04, 0.04, 0.04}),
              Pose::from_translation({0, 0, 0.02}));
  Rng rng(83);
  std::vector<Grasp> reference;
  for (const auto& [g, label] : generate_reference_set(scene, 1, gripper, 300, 0.5, rng))
    if (label.quality == GraspQuality::positive && !label.collision) reference.push_back(g);
  REQUIRE(reference.size() >= 5);

  // Candidate pool: some successes, some junk.
  std::vector<Grasp> pool;
  for (size_t i = 0; i < std::min<size_t>(reference.size(), 20); ++i) pool.push_back(reference[i]);
  Rng junk(89);
  for (int i = 0; i < 20; ++i)
    pool.push_back(at({junk.rotation(), junk.in_box({{-0.3, -0.3, 0.2}, {0.3, 0.3, 0.4}})}));

  SUBCASE("all scores equal collapses to a single point") {
    std::vector<std::pair<Grasp, double>> scored;
    for (const Grasp& g : pool) scored.emplace_back(g, 0.7);
    const SuccessCoverageCurve curve = curve_sweep(scored, reference, scene, 1, gripper, 0.5);
    CHECK(curve.points.size() == 1);
  }

  SUBCASE("a perfect scorer dominates a constant scorer pointwise") {
    std::vector<std::pair<Grasp, double>> oracle_scored, const_scored;
    for (const Grasp& g : pool) {
      const bool ok = success_oracle(g.pose, scene, 1, gripper, 0.5);
      oracle_scored.emplace_back(g, ok ? 0.9 : 0.1);
      const_scored.emplace_back(g, 0.5);
    }
    const auto perfect = curve_sweep(oracle_scored, reference, scene, 1, gripper, 0.5);
    const auto baseline = curve_sweep(const_scored, reference, scene, 1, gripper, 0.5);
    CHECK(perfect.auc >= baseline.auc);
    // At every coverage the perfect curve's success is at least the
    // baseline's success at that same (single-point) operating level.
    REQUIRE(baseline.points.size() == 1);
    for (const auto& [cov, succ] : perfect.points)
      CHECK(succ >= baseline.points[0].second - 1e-12);
  }

  SUBCASE("success at the top threshold equals the top subset's rate") {
    std::vector<std::pair<Grasp, double>> scored;
    for (size_t i = 0; i < pool.size(); ++i)
      scored.emplace_back(pool[i], i < 3 ? 1.0 : 0.2);
    const auto curve = curve_sweep(scored, reference, scene, 1, gripper, 0.5);

    std::vector<Grasp> top = {pool[0], pool[1], pool[2]};
    const double expected = success_rate(top, scene, 1, gripper, 0.5).rate;
    const double cov_top = coverage(top, reference, gripper);
    bool found = false;
    for (const auto& [cov, succ] : curve.points)
      if (std::abs(cov - cov_top) < 1e-12 && std::abs(succ - expected) < 1e-12) found = true;
    CHECK(found);
  }
}
