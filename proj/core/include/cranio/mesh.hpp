#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "cranio/errors.hpp"

namespace cranio {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using FaceIndices = std::array<int, 3>;

/// Indexed triangle surface. All coordinates are millimeters.
///
/// Per-vertex normals are optional; when present they are unit length
/// (exactly-zero vectors mark vertices whose normal is undefined, e.g.
/// isolated vertices).
struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<FaceIndices> faces;
    std::vector<Vec3> normals; // empty, or one per vertex

    bool has_normals() const { return !normals.empty(); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    /// Throws DataError if any structural invariant is violated: face index
    /// out of range, repeated vertex within a face, or a stored normal that
    /// is neither unit length (1e-9) nor exactly zero.
    void validate() const;

    Vec3 face_normal(int f) const;    // unit; zero for degenerate faces
    double face_area(int f) const;
    double mean_edge_length() const;  // average over unique undirected edges
    double surface_area() const;

    void bounding_box(Vec3& lo, Vec3& hi) const;
};

/// One scalar per vertex (e.g. mean curvature, 1/mm) plus a reliability flag
/// used to mark boundary vertices where the discrete operator is unreliable.
struct VertexScalarField {
    std::vector<double> values;
    std::vector<char> unreliable; // nonzero = flagged (boundary/isolated)

    int size() const { return static_cast<int>(values.size()); }
};

/// Arithmetic mean of vertex positions. Throws EmptyMesh for zero vertices.
Vec3 centroid(const TriangleMesh& mesh);

/// Area-weighted average of incident face normals, normalized. Isolated
/// vertices get an exactly-zero vector (the "invalid" marker).
std::vector<Vec3> vertex_normals(const TriangleMesh& mesh);

/// Unique undirected edges as (min,max) vertex pairs.
std::vector<std::array<int, 2>> unique_edges(const TriangleMesh& mesh);

} // namespace cranio
