#include "graspsynth/trigeom.hpp"

#include <array>

namespace graspsynth {

namespace {

constexpr double kParallelEps = 1e-14;

// 2D helpers for the coplanar triangle-triangle case. Points are projected
// onto the dominant-axis plane of the shared normal.
struct P2 {
  double x, y;
};

double orient2d(const P2& a, const P2& b, const P2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool point_in_tri_2d(const P2& p, const P2& a, const P2& b, const P2& c) {
  const double d1 = orient2d(a, b, p);
  const double d2 = orient2d(b, c, p);
  const double d3 = orient2d(c, a, p);
  const bool has_neg = (d1 < 0) || (d2 < 0) || (d3 < 0);
  const bool has_pos = (d1 > 0) || (d2 > 0) || (d3 > 0);
  return !(has_neg && has_pos);
}

bool on_segment_2d(const P2& p, const P2& q, const P2& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool segments_intersect_2d(const P2& p1, const P2& q1, const P2& p2, const P2& q2) {
  const double d1 = orient2d(p2, q2, p1);
  const double d2 = orient2d(p2, q2, q1);
  const double d3 = orient2d(p1, q1, p2);
  const double d4 = orient2d(p1, q1, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_2d(p2, q2, p1)) return true;
  if (d2 == 0 && on_segment_2d(p2, q2, q1)) return true;
  if (d3 == 0 && on_segment_2d(p1, q1, p2)) return true;
  if (d4 == 0 && on_segment_2d(p1, q1, q2)) return true;
  return false;
}

int dominant_axis(const Vec3& n) {
  const Vec3 a = n.cwiseAbs();
  if (a.x() >= a.y() && a.x() >= a.z()) return 0;
  if (a.y() >= a.z()) return 1;
  return 2;
}

P2 project(const Vec3& v, int drop_axis) {
  switch (drop_axis) {
    case 0: return {v.y(), v.z()};
    case 1: return {v.x(), v.z()};
    default: return {v.x(), v.y()};
  }
}

bool coplanar_tri_tri(const Triangle& t1, const Triangle& t2, const Vec3& n) {
  const int drop = dominant_axis(n);
  const std::array<P2, 3> a = {project(t1.a, drop), project(t1.b, drop), project(t1.c, drop)};
  const std::array<P2, 3> b = {project(t2.a, drop), project(t2.b, drop), project(t2.c, drop)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (segments_intersect_2d(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return true;
  if (point_in_tri_2d(a[0], b[0], b[1], b[2])) return true;
  if (point_in_tri_2d(b[0], a[0], a[1], a[2])) return true;
  return false;
}

}  // namespace

std::optional<double> ray_triangle(const Vec3& origin, const Vec3& dir, const Triangle& tri) {
  const Vec3 e1 = tri.b - tri.a;
  const Vec3 e2 = tri.c - tri.a;
  const Vec3 pvec = dir.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < kParallelEps) return std::nullopt;
  const double inv_det = 1.0 / det;
  const Vec3 tvec = origin - tri.a;
  const double u = tvec.dot(pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return std::nullopt;
  const Vec3 qvec = tvec.cross(e1);
  const double v = dir.dot(qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return std::nullopt;
  const double t = e2.dot(qvec) * inv_det;
  if (t <= 0.0) return std::nullopt;
  return t;
}

Vec3 closest_point_on_triangle(const Vec3& p, const Triangle& tri) {
  const Vec3 ab = tri.b - tri.a;
  const Vec3 ac = tri.c - tri.a;
  const Vec3 ap = p - tri.a;

  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return tri.a;

  const Vec3 bp = p - tri.b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return tri.b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return tri.a + v * ab;
  }

  const Vec3 cp = p - tri.c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return tri.c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return tri.a + w * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return tri.b + w * (tri.c - tri.b);
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return tri.a + v * ab + w * ac;
}

double point_triangle_distance(const Vec3& p, const Triangle& tri) {
  return (p - closest_point_on_triangle(p, tri)).norm();
}

double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
  const Vec3 d1 = q1 - p1;
  const Vec3 d2 = q2 - p2;
  const Vec3 r = p1 - p2;
  const double a = d1.squaredNorm();
  const double e = d2.squaredNorm();
  const double f = d2.dot(r);

  double s = 0.0, t = 0.0;
  if (a <= kParallelEps && e <= kParallelEps) {
    return r.norm();
  }
  if (a <= kParallelEps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= kParallelEps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > kParallelEps ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return ((p1 + s * d1) - (p2 + t * d2)).norm();
}

bool segment_triangle_intersect(const Vec3& p, const Vec3& q, const Triangle& tri) {
  const Vec3 dir = q - p;
  const Vec3 e1 = tri.b - tri.a;
  const Vec3 e2 = tri.c - tri.a;
  const Vec3 pvec = dir.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < kParallelEps) return false;  // parallel; coplanar handled by caller
  const double inv_det = 1.0 / det;
  const Vec3 tvec = p - tri.a;
  const double u = tvec.dot(pvec) * inv_det;
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 qvec = tvec.cross(e1);
  const double v = dir.dot(qvec) * inv_det;
  if (v < 0.0 || u + v > 1.0) return false;
  const double t = e2.dot(qvec) * inv_det;
  return t >= 0.0 && t <= 1.0;
}

double segment_triangle_distance(const Vec3& p, const Vec3& q, const Triangle& tri) {
  if (segment_triangle_intersect(p, q, tri)) return 0.0;
  double d = std::min(point_triangle_distance(p, tri), point_triangle_distance(q, tri));
  d = std::min(d, segment_segment_distance(p, q, tri.a, tri.b));
  d = std::min(d, segment_segment_distance(p, q, tri.b, tri.c));
  d = std::min(d, segment_segment_distance(p, q, tri.c, tri.a));
  return d;
}

bool tri_tri_intersect(const Triangle& t1, const Triangle& t2) {
  // Edge-through-face captures every non-coplanar contact: a non-empty
  // intersection segment has its endpoints on the edges of one triangle.
  if (segment_triangle_intersect(t1.a, t1.b, t2)) return true;
  if (segment_triangle_intersect(t1.b, t1.c, t2)) return true;
  if (segment_triangle_intersect(t1.c, t1.a, t2)) return true;
  if (segment_triangle_intersect(t2.a, t2.b, t1)) return true;
  if (segment_triangle_intersect(t2.b, t2.c, t1)) return true;
  if (segment_triangle_intersect(t2.c, t2.a, t1)) return true;

  const Vec3 n1 = t1.raw_normal();
  if (n1.squaredNorm() < kParallelEps) return false;
  const double d2a = n1.dot(t2.a - t1.a);
  const double d2b = n1.dot(t2.b - t1.a);
  const double d2c = n1.dot(t2.c - t1.a);
  const double scale = n1.norm();
  const double eps = 1e-12 * scale;
  if (std::abs(d2a) <= eps && std::abs(d2b) <= eps && std::abs(d2c) <= eps)
    return coplanar_tri_tri(t1, t2, n1);
  return false;
}

double tri_tri_distance(const Triangle& t1, const Triangle& t2) {
  if (tri_tri_intersect(t1, t2)) return 0.0;
  double d = segment_triangle_distance(t1.a, t1.b, t2);
  d = std::min(d, segment_triangle_distance(t1.b, t1.c, t2));
  d = std::min(d, segment_triangle_distance(t1.c, t1.a, t2));
  d = std::min(d, segment_triangle_distance(t2.a, t2.b, t1));
  d = std::min(d, segment_triangle_distance(t2.b, t2.c, t1));
  d = std::min(d, segment_triangle_distance(t2.c, t2.a, t1));
  return d;
}

bool tri_aabb_intersect(const Triangle& tri, const Aabb& box) {
  const Vec3 c = box.center();
  const Vec3 h = 0.5 * box.extent();
  const Vec3 v0 = tri.a - c;
  const Vec3 v1 = tri.b - c;
  const Vec3 v2 = tri.c - c;
  const Vec3 e0 = v1 - v0;
  const Vec3 e1 = v2 - v1;
  const Vec3 e2 = v0 - v2;

  auto axis_separates = [&](const Vec3& axis) {
    const double len2 = axis.squaredNorm();
    if (len2 < kParallelEps) return false;
    const double p0 = v0.dot(axis);
    const double p1 = v1.dot(axis);
    const double p2 = v2.dot(axis);
    const double r = h.x() * std::abs(axis.x()) + h.y() * std::abs(axis.y()) +
                     h.z() * std::abs(axis.z());
    return std::min({p0, p1, p2}) > r || std::max({p0, p1, p2}) < -r;
  };

  // Box face normals.
  for (int i = 0; i < 3; ++i) {
    const double lo = std::min({v0[i], v1[i], v2[i]});
    const double hi = std::max({v0[i], v1[i], v2[i]});
    if (lo > h[i] || hi < -h[i]) return false;
  }
  // Triangle normal.
  if (axis_separates(e0.cross(e1))) return false;
  // Edge cross products.
  const std::array<Vec3, 3> axes = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  const std::array<Vec3, 3> edges = {e0, e1, e2};
  for (const Vec3& u : axes)
    for (const Vec3& e : edges)
      if (axis_separates(u.cross(e))) return false;
  return true;
}

}  // namespace graspsynth
