#pragma once

#include <memory>
#include <optional>

#include "cranio/mesh.hpp"

namespace cranio {

struct ClosestPointResult {
    Vec3 point = Vec3::Zero(); // closest point on the surface
    int face = -1;
    double distance = 0.0; // mm
};

struct RayHit {
    Vec3 point = Vec3::Zero();
    int face = -1;
    double t = 0.0; // ray parameter (>= 0)
};

/// AABB tree over the faces of one immutable mesh. Queries are read-only
/// and safe to run from multiple threads.
class SpatialIndex {
public:
    explicit SpatialIndex(const TriangleMesh& mesh);

    /// Exact closest point on the mesh surface (global minimum over faces).
    ClosestPointResult closest_point(const Vec3& query) const;

    /// Nearest hit of the ray origin + t*dir, t >= 0; nullopt if no face is hit.
    std::optional<RayHit> raycast(const Vec3& origin, const Vec3& dir) const;

    /// Closest mesh vertex to the query among vertices referenced by faces.
    ClosestPointResult closest_vertex(const Vec3& query) const;

    const TriangleMesh& mesh() const { return mesh_; }

private:
    struct Node {
        Vec3 lo, hi;
        int left = -1, right = -1; // children; -1 on leaves
        int first = 0, count = 0;  // leaf face range into face_order_
    };

    int build(int first, int count);
    void grow_leaf_box(Node& node) const;

    TriangleMesh mesh_; // owned copy; the index outlives caller mutations
    std::vector<int> face_order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Exact distance from a point to one triangle (exposed for oracle tests).
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

} // namespace cranio
