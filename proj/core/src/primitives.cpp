#include "cranio/primitives.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace cranio {

namespace {
constexpr double kPi = std::numbers::pi;
}

TriangleMesh make_icosphere(int subdivisions, double radius, const Vec3& center) {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> verts = {
        {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
        {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
        {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1},
    };
    std::vector<FaceIndices> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };
    for (auto& v : verts)
        v.normalize();

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) -> int {
            const auto key = std::minmax(a, b);
            const auto it = midpoint.find(key);
            if (it != midpoint.end())
                return it->second;
            Vec3 m = (verts[a] + verts[b]).normalized();
            const int idx = static_cast<int>(verts.size());
            verts.push_back(m);
            midpoint.emplace(key, idx);
            return idx;
        };
        std::vector<FaceIndices> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const int ab = mid(f[0], f[1]);
            const int bc = mid(f[1], f[2]);
            const int ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }

    TriangleMesh mesh;
    mesh.vertices.reserve(verts.size());
    for (const auto& v : verts)
        mesh.vertices.push_back(center + radius * v);
    mesh.faces = std::move(faces);
    return mesh;
}

TriangleMesh make_grid(int nx, int ny, double size_x, double size_y) {
    TriangleMesh mesh;
    mesh.vertices.reserve(static_cast<size_t>(nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            mesh.vertices.emplace_back(size_x * i / nx, size_y * j / ny, 0.0);
    auto at = [nx](int i, int j) { return j * (nx + 1) + i; };
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            mesh.faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
            mesh.faces.push_back({at(i, j), at(i + 1, j + 1), at(i, j + 1)});
        }
    return mesh;
}

TriangleMesh make_cylinder(double radius, double height, int segments, int rings) {
    TriangleMesh mesh;
    for (int r = 0; r <= rings; ++r) {
        const double z = height * r / rings;
        for (int s = 0; s < segments; ++s) {
            const double a = 2.0 * kPi * s / segments;
            mesh.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
        }
    }
    auto at = [segments](int r, int s) { return r * segments + (s % segments); };
    for (int r = 0; r < rings; ++r)
        for (int s = 0; s < segments; ++s) {
            mesh.faces.push_back({at(r, s), at(r, s + 1), at(r + 1, s + 1)});
            mesh.faces.push_back({at(r, s), at(r + 1, s + 1), at(r + 1, s)});
        }
    return mesh;
}

TriangleMesh make_disk(double radius, int segments, int rings, double z_offset) {
    TriangleMesh mesh;
    mesh.vertices.emplace_back(0.0, 0.0, z_offset);
    for (int r = 1; r <= rings; ++r) {
        const double rho = radius * r / rings;
        for (int s = 0; s < segments; ++s) {
            const double a = 2.0 * kPi * s / segments;
            mesh.vertices.emplace_back(rho * std::cos(a), rho * std::sin(a), z_offset);
        }
    }
    auto at = [segments](int r, int s) { return 1 + (r - 1) * segments + (s % segments); };
    for (int s = 0; s < segments; ++s)
        mesh.faces.push_back({0, at(1, s), at(1, s + 1)});
    for (int r = 1; r < rings; ++r)
        for (int s = 0; s < segments; ++s) {
            mesh.faces.push_back({at(r, s), at(r + 1, s), at(r + 1, s + 1)});
            mesh.faces.push_back({at(r, s), at(r + 1, s + 1), at(r, s + 1)});
        }
    return mesh;
}

TriangleMesh make_annulus(double r_inner, double r_outer, int segments, int rings,
                          double z_offset) {
    TriangleMesh mesh;
    for (int r = 0; r <= rings; ++r) {
        const double rho = r_inner + (r_outer - r_inner) * r / rings;
        for (int s = 0; s < segments; ++s) {
            const double a = 2.0 * kPi * s / segments;
            mesh.vertices.emplace_back(rho * std::cos(a), rho * std::sin(a), z_offset);
        }
    }
    auto at = [segments](int r, int s) { return r * segments + (s % segments); };
    for (int r = 0; r < rings; ++r)
        for (int s = 0; s < segments; ++s) {
            mesh.faces.push_back({at(r, s), at(r + 1, s), at(r + 1, s + 1)});
            mesh.faces.push_back({at(r, s), at(r + 1, s + 1), at(r, s + 1)});
        }
    return mesh;
}

TriangleMesh make_box(const Vec3& lo, const Vec3& hi) {
    TriangleMesh mesh;
    for (int corner = 0; corner < 8; ++corner)
        mesh.vertices.emplace_back(corner & 1 ? hi.x() : lo.x(),
                                   corner & 2 ? hi.y() : lo.y(),
                                   corner & 4 ? hi.z() : lo.z());
    mesh.faces = {
        {0, 2, 3}, {0, 3, 1}, // z = lo (normal -z)
        {4, 5, 7}, {4, 7, 6}, // z = hi (+z)
        {0, 1, 5}, {0, 5, 4}, // y = lo (-y)
        {2, 6, 7}, {2, 7, 3}, // y = hi (+y)
        {0, 4, 6}, {0, 6, 2}, // x = lo (-x)
        {1, 3, 7}, {1, 7, 5}, // x = hi (+x)
    };
    return mesh;
}

TriangleMesh make_plate(double size_x, double size_y, double thickness, int nx, int ny) {
    TriangleMesh top = make_grid(nx, ny, size_x, size_y);
    TriangleMesh bottom = top;
    for (auto& v : bottom.vertices)
        v.z() -= thickness;
    for (auto& f : bottom.faces)
        std::swap(f[1], f[2]); // bottom sheet faces -z
    TriangleMesh plate = append_meshes(top, bottom);
    const Vec3 shift(-size_x / 2, -size_y / 2, 0.0);
    for (auto& v : plate.vertices)
        v += shift;
    return plate;
}

TriangleMesh append_meshes(const TriangleMesh& a, const TriangleMesh& b) {
    TriangleMesh out = a;
    const int offset = a.vertex_count();
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    for (const auto& f : b.faces)
        out.faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
    if (a.has_normals() && b.has_normals())
        out.normals.insert(out.normals.end(), b.normals.begin(), b.normals.end());
    else
        out.normals.clear();
    return out;
}

} // namespace cranio
