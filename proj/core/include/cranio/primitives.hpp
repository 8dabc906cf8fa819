#pragma once

#include "cranio/mesh.hpp"

namespace cranio {

/// Subdivided icosahedron projected to `radius`, centered at `center`.
/// Subdivision 0 gives 12 vertices; each level quadruples the face count
/// (level 3: 642 vertices / 1280 faces, level 4: 2562 / 5120).
TriangleMesh make_icosphere(int subdivisions, double radius, const Vec3& center = Vec3::Zero());

/// Flat rectangular grid in the z=0 plane, (nx+1)*(ny+1) vertices,
/// faces wound counterclockwise about +z.
TriangleMesh make_grid(int nx, int ny, double size_x, double size_y);

/// Open cylinder tube of given radius/height about +z, rings stacked in z.
TriangleMesh make_cylinder(double radius, double height, int segments, int rings);

/// Planar disk of given radius at z = z_offset (fan-free polar grid).
TriangleMesh make_disk(double radius, int segments, int rings, double z_offset = 0.0);

/// Planar annulus between r_inner and r_outer at z = z_offset.
/// Faces are wound counterclockwise about +z.
TriangleMesh make_annulus(double r_inner, double r_outer, int segments, int rings,
                          double z_offset = 0.0);

/// Axis-aligned unit-cube style box mesh between lo and hi (12 faces).
TriangleMesh make_box(const Vec3& lo, const Vec3& hi);

/// Two-sided flat plate: top sheet at z=0 and bottom sheet at z=-thickness,
/// not sewn at the rim. Used to study beveled cuts through a slab.
TriangleMesh make_plate(double size_x, double size_y, double thickness, int nx, int ny);

/// Concatenate two meshes into one (indices of `b` are shifted).
TriangleMesh append_meshes(const TriangleMesh& a, const TriangleMesh& b);

} // namespace cranio
