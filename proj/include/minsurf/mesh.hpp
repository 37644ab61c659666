#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "minsurf/conditions.hpp"
#include "minsurf/family.hpp"

namespace minsurf {

/// Structured triangle mesh over an (s, t) grid. Vertex (i, j) lives at index
/// i + n_s * j (s fastest). Each quad cell yields the triangles
/// (v00, v10, v11) and (v00, v11, v01), counter-clockwise about x_s x x_t.
struct MeshGrid {
  int n_s = 0;
  int n_t = 0;
  std::vector<Vec3> vertices;
  std::vector<std::array<std::size_t, 3>> faces;  // 0-based
};

/// Throws the evaluation error with the failing node attached to the message.
MeshGrid mesh(const SurfaceFamily& family, const GridSpec& grid);

/// ASCII Wavefront OBJ: "v x y z" lines then 1-based "f i j k" lines, reals at
/// 17 significant digits, LF line endings. Throws UsageError for an empty mesh.
void write_obj(const MeshGrid& mesh, std::ostream& out);
void export_obj(const MeshGrid& mesh, const std::filesystem::path& path);

/// Reads the subset of OBJ that write_obj emits (v and triangular f records).
/// n_s and n_t are left at zero.
MeshGrid read_obj(std::istream& in);

}  // namespace minsurf
