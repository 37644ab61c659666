#include "minsurf/mesh.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "minsurf/errors.hpp"

namespace minsurf {

MeshGrid mesh(const SurfaceFamily& family, const GridSpec& grid) {
  grid.validate();
  MeshGrid m;
  m.n_s = grid.n_s;
  m.n_t = grid.n_t;
  m.vertices.reserve(static_cast<std::size_t>(grid.n_s) * static_cast<std::size_t>(grid.n_t));
  for (int j = 0; j < grid.n_t; ++j) {
    for (int i = 0; i < grid.n_s; ++i) {
      const double s = grid.s_at(i);
      const double t = grid.t_at(j);
      try {
        m.vertices.push_back(family.evaluate(s, t));
      } catch (const DomainError& e) {
        throw DomainError(fmt::format("node ({}, {}) s={:.17g} t={:.17g}: {}", i, j, s, t, e.what()));
      } catch (const Error& e) {
        throw Error(fmt::format("node ({}, {}) s={:.17g} t={:.17g}: {}", i, j, s, t, e.what()));
      }
    }
  }
  const auto ns = static_cast<std::size_t>(grid.n_s);
  m.faces.reserve(2 * (ns - 1) * static_cast<std::size_t>(grid.n_t - 1));
  for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(grid.n_t); ++j) {
    for (std::size_t i = 0; i + 1 < ns; ++i) {
      const std::size_t v00 = i + ns * j;
      const std::size_t v10 = v00 + 1;
      const std::size_t v01 = v00 + ns;
      const std::size_t v11 = v01 + 1;
      m.faces.push_back({v00, v10, v11});
      m.faces.push_back({v00, v11, v01});
    }
  }
  return m;
}

void write_obj(const MeshGrid& mesh, std::ostream& out) {
  if (mesh.vertices.empty() || mesh.faces.empty()) {
    throw UsageError("refusing to export an empty mesh");
  }
  std::string buf;
  for (const Vec3& v : mesh.vertices) {
    buf += fmt::format("v {:.17g} {:.17g} {:.17g}\n", v.x(), v.y(), v.z());
  }
  for (const auto& f : mesh.faces) {
    buf += fmt::format("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1);
  }
  out << buf;
}

void export_obj(const MeshGrid& mesh, const std::filesystem::path& path) {
  if (mesh.vertices.empty() || mesh.faces.empty()) {
    throw UsageError("refusing to export an empty mesh");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open {}: {}", path.string(), std::strerror(errno)));
  write_obj(mesh, out);
  out.flush();
  if (!out) throw Error(fmt::format("write failed for {}: {}", path.string(), std::strerror(errno)));
}

MeshGrid read_obj(std::istream& in) {
  MeshGrid m;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      std::string xs, ys, zs;
      if (!(ls >> xs >> ys >> zs)) throw UsageError(fmt::format("bad vertex on line {}", line_no));
      m.vertices.emplace_back(std::stod(xs), std::stod(ys), std::stod(zs));
    } else if (tag == "f") {
      std::array<std::size_t, 3> f{};
      for (auto& idx : f) {
        long long one_based = 0;
        if (!(ls >> one_based) || one_based < 1) {
          throw UsageError(fmt::format("bad face on line {}", line_no));
        }
        idx = static_cast<std::size_t>(one_based - 1);
      }
      m.faces.push_back(f);
    } else {
      throw UsageError(fmt::format("unsupported OBJ record '{}' on line {}", tag, line_no));
    }
  }
  return m;
}

}  // namespace minsurf
