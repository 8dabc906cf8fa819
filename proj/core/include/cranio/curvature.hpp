#pragma once

#include "cranio/mesh.hpp"

namespace cranio {

/// Discrete mean curvature magnitude |H| per vertex (1/mm), computed from the
/// cotangent Laplacian with mixed Voronoi areas: |H_i| = |Δx_i| / 2 where
/// Δx_i = (1 / 2A_i) Σ_j (cot α_ij + cot β_ij)(x_j − x_i).
///
/// Boundary (and isolated) vertices are flagged unreliable; their value is
/// still computed from the one-sided stencil but should not be trusted.
/// Throws NonManifold if any edge has more than two incident faces.
VertexScalarField mean_curvature(const TriangleMesh& mesh);

/// Per-vertex boundary flags: true where the vertex touches an edge with
/// exactly one incident face, or belongs to no face at all.
std::vector<char> boundary_vertex_flags(const TriangleMesh& mesh);

} // namespace cranio
