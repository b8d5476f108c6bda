#ifndef POLYCON_MESH_IO_HPP
#define POLYCON_MESH_IO_HPP

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "polycon/error.hpp"
#include "polycon/mesh.hpp"

namespace polycon {

enum class MeshFormat { Obj, StlBinary };

namespace detail {

inline void putLittleEndian(std::ostream& out, std::uint32_t value) {
  const char bytes[4] = {static_cast<char>(value & 0xffu), static_cast<char>((value >> 8) & 0xffu),
                         static_cast<char>((value >> 16) & 0xffu),
                         static_cast<char>((value >> 24) & 0xffu)};
  out.write(bytes, 4);
}

inline void putFloat(std::ostream& out, float value) {
  std::uint32_t bits;
  std::memcpy(&bits, &value, sizeof bits);
  putLittleEndian(out, bits);
}

inline std::ofstream openForWrite(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace detail

/// OBJ text: "v x y z" lines (17 significant digits) then 1-based "f a b c".
inline std::string toObj(const TriangleMesh& mesh) {
  std::string text;
  char line[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v.x(), v.y(), v.z());
    text += line;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(line, sizeof line, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    text += line;
  }
  return text;
}

inline void exportMesh(const TriangleMesh& mesh, MeshFormat format, const std::filesystem::path& path) {
  if (mesh.empty() || mesh.vertices.empty()) {
    throw IntegrityError("refusing to export an empty mesh");
  }
  if (format == MeshFormat::Obj) {
    auto out = detail::openForWrite(path, false);
    out << toObj(mesh);
    if (!out) throw IoError("write failed for '" + path.string() + "'");
    return;
  }

  auto out = detail::openForWrite(path, true);
  std::array<char, 80> header{};
  const char banner[] = "polycon binary STL";
  std::memcpy(header.data(), banner, sizeof banner - 1);
  out.write(header.data(), header.size());
  detail::putLittleEndian(out, static_cast<std::uint32_t>(mesh.triangles.size()));
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& c = mesh.vertices[static_cast<std::size_t>(t[2])];
    Vec3 normal = (b - a).cross(c - a);
    const double len = normal.norm();
    if (len > 0.0) normal /= len;
    for (const Vec3* p : std::array<const Vec3*, 4>{&normal, &a, &b, &c}) {
      for (int k = 0; k < 3; ++k) detail::putFloat(out, static_cast<float>((*p)[k]));
    }
    const char attribute[2] = {0, 0};
    out.write(attribute, 2);
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

/// Reads the vertex and triangle subset of OBJ written by exportMesh.
inline TriangleMesh readObj(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  TriangleMesh mesh;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "v") {
      Vec3 v;
      fields >> v.x() >> v.y() >> v.z();
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      std::array<int, 3> t{};
      fields >> t[0] >> t[1] >> t[2];
      for (int& i : t) --i;
      mesh.triangles.push_back(t);
      mesh.pieceLabels.push_back(-1);
    }
    if (!fields && !(tag.empty() || tag[0] == '#')) {
      throw IoError("malformed OBJ line: " + line);
    }
  }
  mesh.vertexLabels.resize(mesh.vertices.size());
  return mesh;
}

}  // namespace polycon

#endif  // POLYCON_MESH_IO_HPP
