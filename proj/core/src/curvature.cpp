#include "cranio/curvature.hpp"

#include <cmath>
#include <map>

namespace cranio {

namespace {

std::map<std::array<int, 2>, int> edge_face_counts(const TriangleMesh& mesh) {
    std::map<std::array<int, 2>, int> counts;
    for (const auto& t : mesh.faces)
        for (int k = 0; k < 3; ++k) {
            const int a = t[k];
            const int b = t[(k + 1) % 3];
            ++counts[{std::min(a, b), std::max(a, b)}];
        }
    return counts;
}

double cotangent(const Vec3& a, const Vec3& b) {
    // cot of the angle between a and b
    const double cross = a.cross(b).norm();
    if (cross < 1e-300)
        return 0.0;
    return a.dot(b) / cross;
}

} // namespace

std::vector<char> boundary_vertex_flags(const TriangleMesh& mesh) {
    std::vector<char> flags(mesh.vertices.size(), 1); // isolated until seen in a face
    for (const auto& t : mesh.faces)
        for (int k = 0; k < 3; ++k)
            flags[t[k]] = 0;
    for (const auto& [edge, count] : edge_face_counts(mesh)) {
        if (count == 1) {
            flags[edge[0]] = 1;
            flags[edge[1]] = 1;
        }
    }
    return flags;
}

VertexScalarField mean_curvature(const TriangleMesh& mesh) {
    if (mesh.vertices.empty())
        throw EmptyMesh("mean_curvature: mesh has no vertices");
    for (const auto& [edge, count] : edge_face_counts(mesh))
        if (count > 2)
            throw NonManifold("mean_curvature: edge (" + std::to_string(edge[0]) + "," +
                              std::to_string(edge[1]) + ") has " + std::to_string(count) +
                              " incident faces");

    const size_t nv = mesh.vertices.size();
    std::vector<Vec3> lap(nv, Vec3::Zero()); // Σ (cot α + cot β)(x_j − x_i)
    std::vector<double> mixed_area(nv, 0.0);

    for (const auto& t : mesh.faces) {
        const Vec3& p0 = mesh.vertices[t[0]];
        const Vec3& p1 = mesh.vertices[t[1]];
        const Vec3& p2 = mesh.vertices[t[2]];

        const double cot0 = cotangent(p1 - p0, p2 - p0); // angle at vertex 0
        const double cot1 = cotangent(p0 - p1, p2 - p1);
        const double cot2 = cotangent(p0 - p2, p1 - p2);

        // the angle opposite an edge weights that edge
        lap[t[1]] += cot0 * (p2 - p1);
        lap[t[2]] += cot0 * (p1 - p2);
        lap[t[0]] += cot1 * (p2 - p0);
        lap[t[2]] += cot1 * (p0 - p2);
        lap[t[0]] += cot2 * (p1 - p0);
        lap[t[1]] += cot2 * (p0 - p1);

        // mixed Voronoi area
        const double area = 0.5 * (p1 - p0).cross(p2 - p0).norm();
        const bool obtuse0 = cot0 < 0.0;
        const bool obtuse1 = cot1 < 0.0;
        const bool obtuse2 = cot2 < 0.0;
        if (!obtuse0 && !obtuse1 && !obtuse2) {
            const double e01 = (p1 - p0).squaredNorm();
            const double e12 = (p2 - p1).squaredNorm();
            const double e20 = (p0 - p2).squaredNorm();
            mixed_area[t[0]] += (e20 * cot1 + e01 * cot2) / 8.0;
            mixed_area[t[1]] += (e01 * cot2 + e12 * cot0) / 8.0;
            mixed_area[t[2]] += (e12 * cot0 + e20 * cot1) / 8.0;
        } else {
            mixed_area[t[0]] += obtuse0 ? area / 2.0 : area / 4.0;
            mixed_area[t[1]] += obtuse1 ? area / 2.0 : area / 4.0;
            mixed_area[t[2]] += obtuse2 ? area / 2.0 : area / 4.0;
        }
    }

    VertexScalarField field;
    field.values.resize(nv, 0.0);
    field.unreliable = boundary_vertex_flags(mesh);
    for (size_t i = 0; i < nv; ++i) {
        if (mixed_area[i] > 1e-300)
            field.values[i] = (lap[i] / (2.0 * mixed_area[i])).norm() / 2.0;
        else
            field.unreliable[i] = 1;
    }
    return field;
}

} // namespace cranio
