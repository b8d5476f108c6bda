#ifndef POLYCON_TESTS_SUPPORT_HPP
#define POLYCON_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include <unistd.h>

#include "polycon/core.hpp"

namespace testing_support {

using polycon::Vec3;

// Scratch directory under the build tree, wiped per test binary run.
inline std::filesystem::path scratchDir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("polycon_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Binary STL parsed straight from bytes, independent of the writer.
struct StlFile {
  std::uint32_t count = 0;
  std::vector<std::array<float, 12>> facets;  // normal, v0, v1, v2
  std::vector<std::uint16_t> attributes;
  std::size_t byteSize = 0;
};

inline StlFile parseStl(const std::string& bytes) {
  StlFile stl;
  stl.byteSize = bytes.size();
  if (bytes.size() < 84) return stl;
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  stl.count = static_cast<std::uint32_t>(p[80]) | (static_cast<std::uint32_t>(p[81]) << 8) |
              (static_cast<std::uint32_t>(p[82]) << 16) | (static_cast<std::uint32_t>(p[83]) << 24);
  std::size_t offset = 84;
  while (offset + 50 <= bytes.size()) {
    std::array<float, 12> f{};
    for (int k = 0; k < 12; ++k) {
      std::uint32_t bits = 0;
      for (int b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(p[offset + 4 * k + b]) << (8 * b);
      std::memcpy(&f[static_cast<std::size_t>(k)], &bits, 4);
    }
    stl.facets.push_back(f);
    stl.attributes.push_back(static_cast<std::uint16_t>(p[offset + 48] | (p[offset + 49] << 8)));
    offset += 50;
  }
  return stl;
}

// Spatial hash for "is there a point within tol of q" queries.
class PointIndex {
public:
  PointIndex(const std::vector<Vec3>& points, double cell) : points_(points), cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) buckets_[key(cellOf(points[i]))].push_back(i);
  }

  double nearest(const Vec3& q) const {
    double best = std::numeric_limits<double>::infinity();
    visit(q, [&](std::size_t i) { best = std::min(best, (points_[i] - q).norm()); });
    return best;
  }

  std::size_t countWithin(const Vec3& q, double tol) const {
    std::size_t count = 0;
    visit(q, [&](std::size_t i) { count += (points_[i] - q).norm() <= tol ? 1 : 0; });
    return count;
  }

private:
  template <class F>
  void visit(const Vec3& q, F&& f) const {
    const auto c = cellOf(q);
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        for (long dz = -1; dz <= 1; ++dz) {
          const auto it = buckets_.find(key({c[0] + dx, c[1] + dy, c[2] + dz}));
          if (it == buckets_.end()) continue;
          for (std::size_t i : it->second) f(i);
        }
      }
    }
  }

  std::array<long, 3> cellOf(const Vec3& p) const {
    return {static_cast<long>(std::floor(p.x() / cell_)), static_cast<long>(std::floor(p.y() / cell_)),
            static_cast<long>(std::floor(p.z() / cell_))};
  }
  static std::uint64_t key(const std::array<long, 3>& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (long v : c) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
    return h;
  }

  const std::vector<Vec3>& points_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Composite Simpson on [a, b] with `intervals` (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace testing_support

#endif  // POLYCON_TESTS_SUPPORT_HPP
