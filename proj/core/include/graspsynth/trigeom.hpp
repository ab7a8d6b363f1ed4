#pragma once

#include <optional>

#include "graspsynth/types.hpp"

namespace graspsynth {

/// Triangle in 3-space, by value. Used by the low-level predicates; mesh
/// code passes vertex triples through this.
struct Triangle {
  Vec3 a, b, c;

  Vec3 raw_normal() const { return (b - a).cross(c - a); }
  double area() const { return 0.5 * raw_normal().norm(); }
  Vec3 centroid() const { return (a + b + c) / 3.0; }
};

/// Möller–Trumbore. Returns the ray parameter t > 0 of the nearest hit, or
/// nullopt. `dir` need not be normalized; t is in units of |dir|.
std::optional<double> ray_triangle(const Vec3& origin, const Vec3& dir, const Triangle& tri);

/// Closest point on a triangle to p (Ericson, Real-Time Collision Detection).
Vec3 closest_point_on_triangle(const Vec3& p, const Triangle& tri);

double point_triangle_distance(const Vec3& p, const Triangle& tri);

/// Closest-approach distance between two segments [p1,q1] and [p2,q2].
double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2);

/// Segment-triangle intersection with closed predicates: grazing contact
/// (endpoint on the surface, edge touching edge) counts as intersecting.
bool segment_triangle_intersect(const Vec3& p, const Vec3& q, const Triangle& tri);

double segment_triangle_distance(const Vec3& p, const Vec3& q, const Triangle& tri);

/// Triangle-triangle overlap test, closed: shared points, edges, or faces
/// count as intersecting. Handles the coplanar case.
bool tri_tri_intersect(const Triangle& t1, const Triangle& t2);

/// Minimum distance between two triangles; 0 if they intersect.
double tri_tri_distance(const Triangle& t1, const Triangle& t2);

/// Triangle vs axis-aligned box separating-axis test, closed.
bool tri_aabb_intersect(const Triangle& tri, const Aabb& box);

}  // namespace graspsynth
