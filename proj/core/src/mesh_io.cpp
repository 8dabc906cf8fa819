#include "cranio/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace cranio {

namespace {

std::string lowercase_ext(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos)
        return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

std::vector<char> read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open file: " + path);
    std::vector<char> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return data;
}

bool looks_like_ascii_stl(const std::vector<char>& data) {
    // Binary STLs occasionally start with "solid" too; require a "facet"
    // token in the leading text to accept the ASCII route.
    std::string head(data.begin(), data.begin() + std::min<size_t>(data.size(), 512));
    size_t i = 0;
    while (i < head.size() && std::isspace(static_cast<unsigned char>(head[i])))
        ++i;
    if (head.compare(i, 5, "solid") != 0)
        return false;
    return head.find("facet") != std::string::npos;
}

struct QuantKey {
    int64_t x, y, z;
    bool operator==(const QuantKey& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct QuantKeyHash {
    size_t operator()(const QuantKey& k) const {
        size_t h = std::hash<int64_t>()(k.x);
        h = h * 1000003u ^ std::hash<int64_t>()(k.y);
        h = h * 1000003u ^ std::hash<int64_t>()(k.z);
        return h;
    }
};

} // namespace

TriangleMesh merge_duplicate_vertices(const std::vector<Vec3>& tri_soup, double tol) {
    if (tri_soup.size() % 3 != 0)
        throw ParseError("triangle soup size is not a multiple of 3");
    TriangleMesh mesh;
    std::unordered_map<QuantKey, int, QuantKeyHash> grid;
    const double inv = 1.0 / tol;

    auto find_or_insert = [&](const Vec3& p) -> int {
        const QuantKey base{static_cast<int64_t>(std::floor(p.x() * inv)),
                            static_cast<int64_t>(std::floor(p.y() * inv)),
                            static_cast<int64_t>(std::floor(p.z() * inv))};
        for (int64_t dx = -1; dx <= 1; ++dx)
            for (int64_t dy = -1; dy <= 1; ++dy)
                for (int64_t dz = -1; dz <= 1; ++dz) {
                    const auto it = grid.find({base.x + dx, base.y + dy, base.z + dz});
                    if (it != grid.end() && (mesh.vertices[it->second] - p).norm() <= tol)
                        return it->second;
                }
        const int idx = mesh.vertex_count();
        mesh.vertices.push_back(p);
        grid.emplace(base, idx);
        return idx;
    };

    for (size_t t = 0; t + 2 < tri_soup.size(); t += 3) {
        const int a = find_or_insert(tri_soup[t]);
        const int b = find_or_insert(tri_soup[t + 1]);
        const int c = find_or_insert(tri_soup[t + 2]);
        if (a == b || b == c || a == c)
            continue; // triangle collapsed under merging
        mesh.faces.push_back({a, b, c});
    }
    return mesh;
}

// ---------------------------------------------------------------------------
// STL
// ---------------------------------------------------------------------------

namespace {

constexpr double kStlMergeTol = 1e-6; // mm

TriangleMesh load_stl_binary(const std::vector<char>& data, const std::string& path) {
    if (data.size() < 84)
        throw ParseError("binary STL too short: " + path);
    uint32_t count = 0;
    std::memcpy(&count, data.data() + 80, 4);
    const size_t expected = 84 + static_cast<size_t>(count) * 50;
    if (data.size() < expected)
        throw ParseError("binary STL truncated: " + path);
    std::vector<Vec3> soup;
    soup.reserve(static_cast<size_t>(count) * 3);
    for (uint32_t t = 0; t < count; ++t) {
        const char* rec = data.data() + 84 + static_cast<size_t>(t) * 50;
        for (int v = 0; v < 3; ++v) {
            float xyz[3];
            std::memcpy(xyz, rec + 12 + v * 12, 12);
            soup.emplace_back(xyz[0], xyz[1], xyz[2]);
        }
    }
    TriangleMesh mesh = merge_duplicate_vertices(soup, kStlMergeTol);
    if (mesh.faces.empty())
        throw EmptyMesh("STL file has no faces: " + path);
    return mesh;
}

TriangleMesh load_stl_ascii(const std::vector<char>& data, const std::string& path) {
    std::istringstream in(std::string(data.begin(), data.end()));
    std::string tok;
    std::vector<Vec3> soup;
    int loop_verts = 0;
    bool in_loop = false;
    while (in >> tok) {
        if (tok == "outer") {
            in_loop = true;
            loop_verts = 0;
        } else if (tok == "vertex") {
            double x, y, z;
            if (!(in >> x >> y >> z))
                throw ParseError("ASCII STL: malformed vertex in " + path);
            if (!in_loop)
                throw ParseError("ASCII STL: vertex outside loop in " + path);
            soup.emplace_back(x, y, z);
            ++loop_verts;
        } else if (tok == "endloop") {
            if (loop_verts != 3)
                throw ParseError("ASCII STL: loop with " + std::to_string(loop_verts) +
                                 " vertices in " + path);
            in_loop = false;
        }
    }
    if (in_loop)
        throw ParseError("ASCII STL truncated: " + path);
    if (soup.empty())
        throw EmptyMesh("ASCII STL has no faces: " + path);
    return merge_duplicate_vertices(soup, kStlMergeTol);
}

void save_stl_binary(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    char header[80] = {};
    std::snprintf(header, sizeof(header), "craniocut binary STL");
    out.write(header, 80);
    const uint32_t count = static_cast<uint32_t>(mesh.face_count());
    out.write(reinterpret_cast<const char*>(&count), 4);
    for (int f = 0; f < mesh.face_count(); ++f) {
        float rec[12];
        const Vec3 n = mesh.face_normal(f);
        rec[0] = static_cast<float>(n.x());
        rec[1] = static_cast<float>(n.y());
        rec[2] = static_cast<float>(n.z());
        for (int v = 0; v < 3; ++v) {
            const Vec3& p = mesh.vertices[mesh.faces[f][v]];
            rec[3 + v * 3 + 0] = static_cast<float>(p.x());
            rec[3 + v * 3 + 1] = static_cast<float>(p.y());
            rec[3 + v * 3 + 2] = static_cast<float>(p.z());
        }
        out.write(reinterpret_cast<const char*>(rec), 48);
        const uint16_t attr = 0;
        out.write(reinterpret_cast<const char*>(&attr), 2);
    }
    if (!out)
        throw IoError("write failed: " + path);
}

void save_stl_ascii(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << "solid craniocut\n";
    char buf[256];
    for (int f = 0; f < mesh.face_count(); ++f) {
        const Vec3 n = mesh.face_normal(f);
        std::snprintf(buf, sizeof(buf), "  facet normal %.9g %.9g %.9g\n", n.x(), n.y(), n.z());
        out << buf << "    outer loop\n";
        for (int v = 0; v < 3; ++v) {
            const Vec3& p = mesh.vertices[mesh.faces[f][v]];
            std::snprintf(buf, sizeof(buf), "      vertex %.9g %.9g %.9g\n", p.x(), p.y(), p.z());
            out << buf;
        }
        out << "    endloop\n  endfacet\n";
    }
    out << "endsolid craniocut\n";
    if (!out)
        throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// PLY
// ---------------------------------------------------------------------------

enum class PlyType { Int8, UInt8, Int16, UInt16, Int32, UInt32, Float32, Float64 };

size_t ply_type_size(PlyType t) {
    switch (t) {
    case PlyType::Int8:
    case PlyType::UInt8: return 1;
    case PlyType::Int16:
    case PlyType::UInt16: return 2;
    case PlyType::Int32:
    case PlyType::UInt32:
    case PlyType::Float32: return 4;
    case PlyType::Float64: return 8;
    }
    return 0;
}

PlyType parse_ply_type(const std::string& s, const std::string& path) {
    if (s == "char" || s == "int8") return PlyType::Int8;
    if (s == "uchar" || s == "uint8") return PlyType::UInt8;
    if (s == "short" || s == "int16") return PlyType::Int16;
    if (s == "ushort" || s == "uint16") return PlyType::UInt16;
    if (s == "int" || s == "int32") return PlyType::Int32;
    if (s == "uint" || s == "uint32") return PlyType::UInt32;
    if (s == "float" || s == "float32") return PlyType::Float32;
    if (s == "double" || s == "float64") return PlyType::Float64;
    throw ParseError("PLY: unknown property type '" + s + "' in " + path);
}

double read_binary_scalar(const char*& p, const char* end, PlyType t, const std::string& path) {
    const size_t n = ply_type_size(t);
    if (p + n > end)
        throw ParseError("PLY: unexpected end of binary data in " + path);
    double v = 0;
    switch (t) {
    case PlyType::Int8: { int8_t x; std::memcpy(&x, p, 1); v = x; break; }
    case PlyType::UInt8: { uint8_t x; std::memcpy(&x, p, 1); v = x; break; }
    case PlyType::Int16: { int16_t x; std::memcpy(&x, p, 2); v = x; break; }
    case PlyType::UInt16: { uint16_t x; std::memcpy(&x, p, 2); v = x; break; }
    case PlyType::Int32: { int32_t x; std::memcpy(&x, p, 4); v = x; break; }
    case PlyType::UInt32: { uint32_t x; std::memcpy(&x, p, 4); v = x; break; }
    case PlyType::Float32: { float x; std::memcpy(&x, p, 4); v = x; break; }
    case PlyType::Float64: { double x; std::memcpy(&x, p, 8); v = x; break; }
    }
    p += n;
    return v;
}

struct PlyProperty {
    std::string name;
    PlyType type = PlyType::Float32;
    bool is_list = false;
    PlyType count_type = PlyType::UInt8;
};

struct PlyElement {
    std::string name;
    size_t count = 0;
    std::vector<PlyProperty> props;
};

TriangleMesh load_ply(const std::vector<char>& data, const std::string& path) {
    // header is always ASCII lines terminated by '\n'
    size_t pos = 0;
    auto next_line = [&]() -> std::string {
        const size_t nl = std::find(data.begin() + pos, data.end(), '\n') - data.begin();
        if (nl >= data.size() && pos >= data.size())
            throw ParseError("PLY: truncated header in " + path);
        std::string line(data.begin() + pos, data.begin() + std::min(nl, data.size()));
        pos = std::min(nl, data.size()) + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return line;
    };

    if (next_line() != "ply")
        throw ParseError("PLY: missing magic in " + path);
    bool binary = false;
    std::vector<PlyElement> elements;
    for (;;) {
        if (pos >= data.size())
            throw ParseError("PLY: header without end_header in " + path);
        const std::string line = next_line();
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "comment" || word == "obj_info" || word.empty())
            continue;
        if (word == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt == "ascii")
                binary = false;
            else if (fmt == "binary_little_endian")
                binary = true;
            else
                throw ParseError("PLY: unsupported format '" + fmt + "' in " + path);
        } else if (word == "element") {
            PlyElement el;
            ls >> el.name >> el.count;
            elements.push_back(el);
        } else if (word == "property") {
            if (elements.empty())
                throw ParseError("PLY: property before element in " + path);
            PlyProperty prop;
            std::string t;
            ls >> t;
            if (t == "list") {
                prop.is_list = true;
                std::string ct, vt;
                ls >> ct >> vt;
                prop.count_type = parse_ply_type(ct, path);
                prop.type = parse_ply_type(vt, path);
            } else {
                prop.type = parse_ply_type(t, path);
            }
            ls >> prop.name;
            elements.back().props.push_back(prop);
        } else if (word == "end_header") {
            break;
        } else {
            throw ParseError("PLY: unexpected header line '" + line + "' in " + path);
        }
    }

    TriangleMesh mesh;
    std::istringstream ascii_in(binary ? std::string()
                                       : std::string(data.begin() + pos, data.end()));
    const char* bp = data.data() + pos;
    const char* bend = data.data() + data.size();

    auto next_scalar = [&](PlyType t) -> double {
        if (binary)
            return read_binary_scalar(bp, bend, t, path);
        double v;
        if (!(ascii_in >> v))
            throw ParseError("PLY: unexpected end of ASCII data in " + path);
        return v;
    };

    bool has_normals = false;
    for (const auto& el : elements) {
        if (el.name == "vertex") {
            for (const auto& p : el.props)
                if (p.name == "nx")
                    has_normals = true;
            mesh.vertices.reserve(el.count);
            if (has_normals)
                mesh.normals.reserve(el.count);
            for (size_t i = 0; i < el.count; ++i) {
                Vec3 v = Vec3::Zero(), n = Vec3::Zero();
                for (const auto& prop : el.props) {
                    if (prop.is_list) {
                        const size_t cnt = static_cast<size_t>(next_scalar(prop.count_type));
                        for (size_t k = 0; k < cnt; ++k)
                            next_scalar(prop.type);
                        continue;
                    }
                    const double val = next_scalar(prop.type);
                    if (prop.name == "x") v.x() = val;
                    else if (prop.name == "y") v.y() = val;
                    else if (prop.name == "z") v.z() = val;
                    else if (prop.name == "nx") n.x() = val;
                    else if (prop.name == "ny") n.y() = val;
                    else if (prop.name == "nz") n.z() = val;
                }
                mesh.vertices.push_back(v);
                if (has_normals) {
                    const double len = n.norm();
                    mesh.normals.push_back(len > 0 ? Vec3(n / len) : Vec3::Zero());
                }
            }
        } else if (el.name == "face") {
            mesh.faces.reserve(el.count);
            for (size_t i = 0; i < el.count; ++i) {
                for (const auto& prop : el.props) {
                    if (!prop.is_list) {
                        next_scalar(prop.type);
                        continue;
                    }
                    const size_t cnt = static_cast<size_t>(next_scalar(prop.count_type));
                    std::vector<int> poly(cnt);
                    for (size_t k = 0; k < cnt; ++k)
                        poly[k] = static_cast<int>(next_scalar(prop.type));
                    if (prop.name == "vertex_indices" || prop.name == "vertex_index") {
                        if (cnt < 3)
                            throw ParseError("PLY: face with <3 vertices in " + path);
                        for (size_t k = 1; k + 1 < cnt; ++k)
                            mesh.faces.push_back({poly[0], poly[k], poly[k + 1]});
                    }
                }
            }
        } else {
            // skip unknown element payload
            for (size_t i = 0; i < el.count; ++i) {
                for (const auto& prop : el.props) {
                    if (prop.is_list) {
                        const size_t cnt = static_cast<size_t>(next_scalar(prop.count_type));
                        for (size_t k = 0; k < cnt; ++k)
                            next_scalar(prop.type);
                    } else {
                        next_scalar(prop.type);
                    }
                }
            }
        }
    }

    if (mesh.faces.empty())
        throw EmptyMesh("PLY file has no faces: " + path);
    mesh.validate();
    return mesh;
}

void save_ply(const TriangleMesh& mesh, const std::string& path, bool binary,
              const SaveOptions& opts) {
    const bool with_normals = opts.write_normals && mesh.has_normals();
    const bool with_quality = opts.quality.has_value();
    if (with_quality && opts.quality->size() != mesh.vertices.size())
        throw InvalidParams("save_mesh: quality field size does not match vertex count");

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open for writing: " + path);
    out << "ply\nformat " << (binary ? "binary_little_endian" : "ascii") << " 1.0\n";
    out << "comment craniocut export\n";
    out << "element vertex " << mesh.vertex_count() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    if (with_normals)
        out << "property double nx\nproperty double ny\nproperty double nz\n";
    if (with_quality)
        out << "property double quality\n";
    out << "element face " << mesh.face_count() << "\n";
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";

    if (binary) {
        auto put = [&](double v) { out.write(reinterpret_cast<const char*>(&v), 8); };
        for (int i = 0; i < mesh.vertex_count(); ++i) {
            put(mesh.vertices[i].x());
            put(mesh.vertices[i].y());
            put(mesh.vertices[i].z());
            if (with_normals) {
                put(mesh.normals[i].x());
                put(mesh.normals[i].y());
                put(mesh.normals[i].z());
            }
            if (with_quality)
                put((*opts.quality)[i]);
        }
        for (const auto& f : mesh.faces) {
            const uint8_t n = 3;
            out.write(reinterpret_cast<const char*>(&n), 1);
            const int32_t idx[3] = {f[0], f[1], f[2]};
            out.write(reinterpret_cast<const char*>(idx), 12);
        }
    } else {
        char buf[512];
        for (int i = 0; i < mesh.vertex_count(); ++i) {
            int len = std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g",
                                    mesh.vertices[i].x(), mesh.vertices[i].y(),
                                    mesh.vertices[i].z());
            out.write(buf, len);
            if (with_normals) {
                len = std::snprintf(buf, sizeof(buf), " %.17g %.17g %.17g",
                                    mesh.normals[i].x(), mesh.normals[i].y(),
                                    mesh.normals[i].z());
                out.write(buf, len);
            }
            if (with_quality) {
                len = std::snprintf(buf, sizeof(buf), " %.17g", (*opts.quality)[i]);
                out.write(buf, len);
            }
            out << "\n";
        }
        for (const auto& f : mesh.faces)
            out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
    }
    if (!out)
        throw IoError("write failed: " + path);
}

} // namespace

TriangleMesh load_mesh(const std::string& path, MeshFormat format) {
    const std::vector<char> data = read_all(path);
    if (format == MeshFormat::Auto) {
        const std::string ext = lowercase_ext(path);
        if (ext == "ply")
            format = MeshFormat::Ply;
        else if (ext == "stl")
            format = looks_like_ascii_stl(data) ? MeshFormat::StlAscii : MeshFormat::StlBinary;
        else if (data.size() >= 3 && std::memcmp(data.data(), "ply", 3) == 0)
            format = MeshFormat::Ply;
        else
            format = looks_like_ascii_stl(data) ? MeshFormat::StlAscii : MeshFormat::StlBinary;
    }
    TriangleMesh mesh;
    switch (format) {
    case MeshFormat::StlBinary: mesh = load_stl_binary(data, path); break;
    case MeshFormat::StlAscii: mesh = load_stl_ascii(data, path); break;
    case MeshFormat::Ply:
    case MeshFormat::PlyBinary: mesh = load_ply(data, path); break;
    case MeshFormat::Auto: break; // unreachable
    }
    if (mesh.faces.empty())
        throw EmptyMesh("mesh has no faces: " + path);
    mesh.validate();
    return mesh;
}

void save_mesh(const TriangleMesh& mesh, const std::string& path, MeshFormat format,
               const SaveOptions& opts) {
    mesh.validate();
    if (format == MeshFormat::Auto) {
        const std::string ext = lowercase_ext(path);
        format = (ext == "stl") ? MeshFormat::StlBinary : MeshFormat::Ply;
    }
    switch (format) {
    case MeshFormat::StlBinary: save_stl_binary(mesh, path); break;
    case MeshFormat::StlAscii: save_stl_ascii(mesh, path); break;
    case MeshFormat::Ply: save_ply(mesh, path, false, opts); break;
    case MeshFormat::PlyBinary: save_ply(mesh, path, true, opts); break;
    case MeshFormat::Auto: break; // unreachable
    }
}

} // namespace cranio
