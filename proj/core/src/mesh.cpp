#include "cranio/mesh.hpp"

#include <cmath>
#include <limits>
#include <set>

namespace cranio {

void TriangleMesh::validate() const {
    const int nv = vertex_count();
    for (size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (int k = 0; k < 3; ++k) {
            if (face[k] < 0 || face[k] >= nv)
                throw DataError("mesh: face " + std::to_string(f) + " references vertex " +
                                std::to_string(face[k]) + " outside [0," + std::to_string(nv) + ")");
        }
        if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2])
            throw DataError("mesh: face " + std::to_string(f) + " repeats a vertex");
    }
    if (!normals.empty()) {
        if (normals.size() != vertices.size())
            throw DataError("mesh: normal count does not match vertex count");
        for (size_t i = 0; i < normals.size(); ++i) {
            const double n = normals[i].norm();
            if (n != 0.0 && std::abs(n - 1.0) > 1e-9)
                throw DataError("mesh: stored normal " + std::to_string(i) + " is not unit length");
        }
    }
}

Vec3 TriangleMesh::face_normal(int f) const {
    const auto& t = faces[f];
    const Vec3 n = (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]);
    const double len = n.norm();
    if (len < std::numeric_limits<double>::min())
        return Vec3::Zero();
    return n / len;
}

double TriangleMesh::face_area(int f) const {
    const auto& t = faces[f];
    return 0.5 * (vertices[t[1]] - vertices[t[0]]).cross(vertices[t[2]] - vertices[t[0]]).norm();
}

double TriangleMesh::mean_edge_length() const {
    const auto edges = unique_edges(*this);
    if (edges.empty())
        return 0.0;
    double total = 0.0;
    for (const auto& e : edges)
        total += (vertices[e[0]] - vertices[e[1]]).norm();
    return total / static_cast<double>(edges.size());
}

double TriangleMesh::surface_area() const {
    double total = 0.0;
    for (int f = 0; f < face_count(); ++f)
        total += face_area(f);
    return total;
}

void TriangleMesh::bounding_box(Vec3& lo, Vec3& hi) const {
    lo = Vec3::Constant(std::numeric_limits<double>::max());
    hi = Vec3::Constant(std::numeric_limits<double>::lowest());
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
}

Vec3 centroid(const TriangleMesh& mesh) {
    if (mesh.vertices.empty())
        throw EmptyMesh("centroid: mesh has no vertices");
    Vec3 sum = Vec3::Zero();
    for (const auto& v : mesh.vertices)
        sum += v;
    return sum / static_cast<double>(mesh.vertices.size());
}

std::vector<Vec3> vertex_normals(const TriangleMesh& mesh) {
    if (mesh.vertices.empty())
        throw EmptyMesh("vertex_normals: mesh has no vertices");
    std::vector<Vec3> acc(mesh.vertices.size(), Vec3::Zero());
    for (const auto& t : mesh.faces) {
        // cross product length is twice the area, so summing raw cross
        // products gives the area weighting directly
        const Vec3 n = (mesh.vertices[t[1]] - mesh.vertices[t[0]])
                           .cross(mesh.vertices[t[2]] - mesh.vertices[t[0]]);
        acc[t[0]] += n;
        acc[t[1]] += n;
        acc[t[2]] += n;
    }
    for (auto& n : acc) {
        const double len = n.norm();
        if (len > 1e-300)
            n /= len;
        else
            n.setZero(); // isolated or fully degenerate vertex
    }
    return acc;
}

std::vector<std::array<int, 2>> unique_edges(const TriangleMesh& mesh) {
    std::set<std::array<int, 2>> edges;
    for (const auto& t : mesh.faces) {
        for (int k = 0; k < 3; ++k) {
            const int a = t[k];
            const int b = t[(k + 1) % 3];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return {edges.begin(), edges.end()};
}

} // namespace cranio
