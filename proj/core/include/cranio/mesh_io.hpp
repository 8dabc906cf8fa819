#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cranio/mesh.hpp"

namespace cranio {

enum class MeshFormat {
    StlBinary,
    StlAscii,
    Ply,       // ASCII on write unless PlyBinary is requested
    PlyBinary, // binary_little_endian
    Auto,      // sniff on read, pick by extension on write
};

struct SaveOptions {
    bool write_normals = false;           // PLY only
    std::optional<std::vector<double>> quality; // PLY per-vertex "quality" scalar
};

/// Reads an STL (binary or ASCII) or PLY (ASCII or binary little-endian)
/// mesh. STL soups are indexed by merging duplicate vertices within 1e-6 mm.
/// Throws ParseError on malformed input and EmptyMesh when no face survives.
TriangleMesh load_mesh(const std::string& path, MeshFormat format = MeshFormat::Auto);

void save_mesh(const TriangleMesh& mesh, const std::string& path,
               MeshFormat format = MeshFormat::Auto, const SaveOptions& opts = {});

/// Merge vertices closer than `tol` (used for STL input; exposed for tests).
TriangleMesh merge_duplicate_vertices(const std::vector<Vec3>& tri_soup, double tol);

} // namespace cranio
