#include "graspsynth/bvh.hpp"

#include <algorithm>
#include <numeric>

namespace graspsynth {

const Aabb Bvh::empty_box_{};

namespace {

constexpr int kLeafSize = 4;
// Node-box slack in the collide traversal so exact surface contact, blurred
// by pose round-off, is never pruned before the triangle test runs.
constexpr double kContactEps = 1e-12;

Aabb triangle_box(const Triangle& t) {
  Aabb box;
  box.extend(t.a);
  box.extend(t.b);
  box.extend(t.c);
  return box;
}

// Conservative world-space enclosure of a posed local-frame box.
Aabb posed_box(const Aabb& box, const Pose& pose) {
  Aabb out;
  for (int i = 0; i < 8; ++i) {
    const Vec3 corner{(i & 1) ? box.max.x() : box.min.x(), (i & 2) ? box.max.y() : box.min.y(),
                      (i & 4) ? box.max.z() : box.min.z()};
    out.extend(pose.apply(corner));
  }
  return out;
}

Triangle posed_triangle(const Triangle& t, const Pose& pose) {
  return {pose.apply(t.a), pose.apply(t.b), pose.apply(t.c)};
}

bool ray_box(const Vec3& origin, const Vec3& dir, const Vec3& inv_dir, const Aabb& box,
             double t_max) {
  double t0 = 0.0, t1 = t_max;
  for (int i = 0; i < 3; ++i) {
    if (dir[i] == 0.0) {
      if (origin[i] < box.min[i] || origin[i] > box.max[i]) return false;
      continue;
    }
    const double ta = (box.min[i] - origin[i]) * inv_dir[i];
    const double tb = (box.max[i] - origin[i]) * inv_dir[i];
    t0 = std::max(t0, std::min(ta, tb));
    t1 = std::min(t1, std::max(ta, tb));
  }
  return t0 <= t1;
}

}  // namespace

Bvh::Bvh(const TriMesh& mesh) {
  const size_t n = mesh.triangle_count();
  if (n == 0) return;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Triangle> source(n);
  for (size_t i = 0; i < n; ++i) source[i] = mesh.triangle(i);

  tris_.reserve(n);
  tri_ids_.reserve(n);
  nodes_.reserve(2 * n);

  // Recursive median split; triangles land in leaf order in tris_.
  struct Builder {
    std::vector<Node>& nodes;
    std::vector<Triangle>& tris;
    std::vector<int>& ids;
    const std::vector<Triangle>& source;

    int build(std::vector<int>& order, int begin, int end) {
      Node node;
      for (int i = begin; i < end; ++i) node.box.extend(triangle_box(source[order[i]]));
      const int index = static_cast<int>(nodes.size());
      nodes.push_back(node);

      if (end - begin <= kLeafSize) {
        nodes[index].first = static_cast<int>(tris.size());
        nodes[index].count = end - begin;
        // Ascending source index inside a leaf keeps tie-breaking stable.
        std::sort(order.begin() + begin, order.begin() + end);
        for (int i = begin; i < end; ++i) {
          tris.push_back(source[order[i]]);
          ids.push_back(order[i]);
        }
        return index;
      }

      Aabb centroid_box;
      for (int i = begin; i < end; ++i) centroid_box.extend(source[order[i]].centroid());
      int axis = 0;
      const Vec3 e = centroid_box.extent();
      if (e.y() > e.x()) axis = 1;
      if (e.z() > e[axis]) axis = 2;

      const int mid = (begin + end) / 2;
      std::nth_element(order.begin() + begin, order.begin() + mid, order.begin() + end,
                       [&](int lhs, int rhs) {
                         const double cl = source[lhs].centroid()[axis];
                         const double cr = source[rhs].centroid()[axis];
                         return cl < cr || (cl == cr && lhs < rhs);
                       });
      const int left = build(order, begin, mid);
      const int right = build(order, mid, end);
      nodes[index].left = left;
      nodes[index].right = right;
      return index;
    }
  } builder{nodes_, tris_, tri_ids_, source};
  builder.build(order, 0, static_cast<int>(n));
}

void Bvh::raycast_node(int node_idx, const Vec3& origin, const Vec3& inv_dir, const Vec3& dir,
                       std::optional<Hit>& best) const {
  const Node& node = nodes_[node_idx];
  if (!ray_box(origin, dir, inv_dir, node.box,
               best ? best->t : std::numeric_limits<double>::max()))
    return;
  if (node.count > 0) {
    for (int i = node.first; i < node.first + node.count; ++i) {
      const auto t = ray_triangle(origin, dir, tris_[i]);
      if (!t) continue;
      if (!best || *t < best->t || (*t == best->t && tri_ids_[i] < best->triangle))
        best = Hit{*t, tri_ids_[i]};
    }
    return;
  }
  raycast_node(node.left, origin, inv_dir, dir, best);
  raycast_node(node.right, origin, inv_dir, dir, best);
}

std::optional<Bvh::Hit> Bvh::raycast(const Vec3& origin, const Vec3& dir) const {
  if (nodes_.empty()) return std::nullopt;
  const Vec3 inv_dir = dir.cwiseInverse();
  std::optional<Hit> best;
  raycast_node(0, origin, inv_dir, dir, best);
  return best;
}

void Bvh::distance_node(int node_idx, const Vec3& p, double& best) const {
  const Node& node = nodes_[node_idx];
  if (node.box.distance(p) >= best) return;
  if (node.count > 0) {
    for (int i = node.first; i < node.first + node.count; ++i)
      best = std::min(best, point_triangle_distance(p, tris_[i]));
    return;
  }
  const double dl = nodes_[node.left].box.distance(p);
  const double dr = nodes_[node.right].box.distance(p);
  if (dl <= dr) {
    distance_node(node.left, p, best);
    distance_node(node.right, p, best);
  } else {
    distance_node(node.right, p, best);
    distance_node(node.left, p, best);
  }
}

double Bvh::distance(const Vec3& p) const {
  if (nodes_.empty()) return std::numeric_limits<double>::infinity();
  double best = std::numeric_limits<double>::max();
  distance_node(0, p, best);
  return best;
}

bool bvh_collide(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b, int* tri_a,
                 int* tri_b) {
  if (a.empty() || b.empty()) return false;

  struct Walker {
    const Bvh& a;
    const Bvh& b;
    const Pose& pa;
    const Pose& pb;
    int* wa;
    int* wb;

    bool visit(int ia, int ib) {
      const Aabb box_a = posed_box(a.nodes_[ia].box, pa).expanded(kContactEps);
      const Aabb box_b = posed_box(b.nodes_[ib].box, pb);
      if (!box_a.intersects(box_b)) return false;

      const bool leaf_a = a.nodes_[ia].count > 0;
      const bool leaf_b = b.nodes_[ib].count > 0;
      if (leaf_a && leaf_b) {
        const auto& na = a.nodes_[ia];
        const auto& nb = b.nodes_[ib];
        for (int i = na.first; i < na.first + na.count; ++i) {
          const Triangle ta = posed_triangle(a.tris_[i], pa);
          for (int j = nb.first; j < nb.first + nb.count; ++j) {
            const Triangle tb = posed_triangle(b.tris_[j], pb);
            if (tri_tri_intersect(ta, tb)) {
              if (wa) *wa = a.tri_ids_[i];
              if (wb) *wb = b.tri_ids_[j];
              return true;
            }
          }
        }
        return false;
      }
      // Descend the larger non-leaf side.
      const double vol_a = leaf_a ? -1.0 : box_a.volume();
      const double vol_b = leaf_b ? -1.0 : box_b.volume();
      if (!leaf_a && (leaf_b || vol_a >= vol_b))
        return visit(a.nodes_[ia].left, ib) || visit(a.nodes_[ia].right, ib);
      return visit(ia, b.nodes_[ib].left) || visit(ia, b.nodes_[ib].right);
    }
  } walker{a, b, pose_a, pose_b, tri_a, tri_b};
  return walker.visit(0, 0);
}

double bvh_distance(const Bvh& a, const Pose& pose_a, const Bvh& b, const Pose& pose_b) {
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();

  struct Walker {
    const Bvh& a;
    const Bvh& b;
    const Pose& pa;
    const Pose& pb;
    double best = std::numeric_limits<double>::max();

    void visit(int ia, int ib) {
      const Aabb box_a = posed_box(a.nodes_[ia].box, pa);
      const Aabb box_b = posed_box(b.nodes_[ib].box, pb);
      if (box_a.distance(box_b) >= best) return;

      const bool leaf_a = a.nodes_[ia].count > 0;
      const bool leaf_b = b.nodes_[ib].count > 0;
      if (leaf_a && leaf_b) {
        const auto& na = a.nodes_[ia];
        const auto& nb = b.nodes_[ib];
        for (int i = na.first; i < na.first + na.count; ++i) {
          const Triangle ta = posed_triangle(a.tris_[i], pa);
          for (int j = nb.first; j < nb.first + nb.count; ++j)
            best = std::min(best, tri_tri_distance(ta, posed_triangle(b.tris_[j], pb)));
        }
        return;
      }
      const double vol_a = leaf_a ? -1.0 : box_a.volume();
      const double vol_b = leaf_b ? -1.0 : box_b.volume();
      if (!leaf_a && (leaf_b || vol_a >= vol_b)) {
        visit(a.nodes_[ia].left, ib);
        visit(a.nodes_[ia].right, ib);
      } else {
        visit(ia, b.nodes_[ib].left);
        visit(ia, b.nodes_[ib].right);
      }
    }
  } walker{a, b, pose_a, pose_b};
  walker.visit(0, 0);
  return walker.best;
}

}  // namespace graspsynth
