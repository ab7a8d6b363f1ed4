#pragma once

#include "graspsynth/trimesh.hpp"

namespace graspsynth {

/// Axis-aligned box of the given extent centered at the origin.
TriMesh make_box(const Vec3& extent);

/// Cylinder along +z, centered at the origin.
TriMesh make_cylinder(double radius, double height, int segments = 24);

/// Watertight solid of revolution about the z axis. The profile is a closed
/// (r, z) polygon traversed in order, last point connecting back to the
/// first; points with r == 0 become poles. Output is oriented outward.
TriMesh revolve_profile(const std::vector<Eigen::Vector2d>& profile, int segments = 24);

/// Open-top bowl: flat bottom, outward-sloping wall of the given thickness.
TriMesh make_bowl(double bottom_radius, double top_radius, double height, double thickness,
                  int segments = 24);

/// Bottle: cylindrical body, conical shoulder, capped neck.
TriMesh make_bottle(double body_radius, double body_height, double neck_radius,
                    double neck_height, int segments = 24);

/// Flips triangle winding so signed volume is positive (outward normals).
void orient_outward(TriMesh& mesh);

}  // namespace graspsynth
