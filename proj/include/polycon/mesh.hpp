#ifndef POLYCON_MESH_HPP
#define POLYCON_MESH_HPP

// Watertight triangulation of the polycon surface.
//
// Each of the 2n half-cone pieces is sampled on an (azimuth, slant) grid:
// 2m azimuth intervals over [0, pi] (m per conic half-edge) and m slant
// intervals from the apex to the conic boundary. Vertices on conic edges,
// 2n-gon edges and at vertices of the solid are created once and indexed by
// every piece that touches them, so seams are welded by construction.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "polycon/core.hpp"
#include "polycon/error.hpp"

namespace polycon {

enum class CurveKind { Interior, TypeA, TypeB, ConicEdge, PolygonEdge };

/// Which feature curve of the solid a mesh vertex lies on.
struct VertexLabel {
  CurveKind kind = CurveKind::Interior;
  int id = -1;  ///< piece id, type-A index, type-B index, conic edge id or 2n-gon edge index
};

struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> pieceLabels;         ///< per triangle, piece id in [0, 2n) (or -1)
  std::vector<VertexLabel> vertexLabels;
  int resolution = 0;

  bool empty() const { return triangles.empty(); }
};

inline constexpr int kMinMeshResolution = 8;

/// Conic edge id: positive side k -> k, negative side k -> n + k.
inline int conicEdgeId(const PolyconSpec& spec, Side side, int index) {
  return side == Side::Positive ? index : spec.n() + index;
}

namespace detail {

inline double neumaierAdd(double& sum, double& compensation, double value) {
  const double t = sum + value;
  if (std::abs(sum) >= std::abs(value)) {
    compensation += (sum - t) + value;
  } else {
    compensation += (value - t) + sum;
  }
  sum = t;
  return sum;
}

class PolyconMeshBuilder {
public:
  PolyconMeshBuilder(const PolyconSpec& spec, int m) : spec_(spec), m_(m) {
    if (m < kMinMeshResolution) {
      throw DomainError("mesh resolution must be >= " + std::to_string(kMinMeshResolution));
    }
    mesh_.resolution = m;
  }

  void addPiece(Piece piece) {
    const int m = m_;
    const int cols = 2 * m + 1;
    std::vector<int> grid(static_cast<std::size_t>((m + 1) * cols), -1);
    auto at = [&](int i, int j) -> int& { return grid[static_cast<std::size_t>(i * cols + j)]; };

    const auto [phi0, phi1] = pieceAzimuthRange(piece.side);
    const double dphi = (phi1 - phi0) / (2.0 * m);
    const int id = pieceId(spec_, piece);

    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= 2 * m; ++j) {
        const Key key = boundaryKey(piece, i, j);
        int vid;
        if (std::get<0>(key) == CurveKind::Interior) {
          vid = create(key, piecePoint(spec_, piece, phi0 + dphi * j, static_cast<double>(i) / m));
        } else {
          vid = shared(key);
          const Vec3 own = piecePoint(spec_, piece, phi0 + dphi * j, static_cast<double>(i) / m);
          const double gap = (own - mesh_.vertices[static_cast<std::size_t>(vid)]).norm();
          if (gap > 1e-9 * spec_.radius()) {
            throw ConstructionError("seam gap " + std::to_string(gap) + " on piece " +
                                    std::to_string(id));
          }
        }
        at(i, j) = vid;
        if (i == 0) {
          std::fill(grid.begin(), grid.begin() + cols, vid);
          break;
        }
      }
    }

    auto pos = [&](int v) -> const Vec3& { return mesh_.vertices[static_cast<std::size_t>(v)]; };
    for (int j = 0; j < 2 * m; ++j) {
      emit(at(0, j), at(1, j), at(1, j + 1), id);
    }
    for (int i = 1; i < m; ++i) {
      for (int j = 0; j < 2 * m; ++j) {
        const int a = at(i, j), b = at(i, j + 1), c = at(i + 1, j), d = at(i + 1, j + 1);
        if ((pos(a) - pos(d)).squaredNorm() <= (pos(b) - pos(c)).squaredNorm()) {
          emit(a, b, d, id);
          emit(a, d, c, id);
        } else {
          emit(a, b, c, id);
          emit(b, d, c, id);
        }
      }
    }
  }

  TriangleMesh take() { return std::move(mesh_); }

private:
  using Key = std::tuple<CurveKind, int, int>;

  // Key of grid node (i, j) of a piece. Conic sample s of edge e sits at
  // |theta| = s * pi/(2m); 2n-gon edge sample s of edge j sits s/m of the way
  // from vertex j to vertex j+1.
  Key boundaryKey(Piece piece, int i, int j) const {
    const int m = m_;
    const int n = spec_.n();
    const int twoN = 2 * n;
    auto wrap = [&](int v, int mod) { return ((v % mod) + mod) % mod; };
    const int k = piece.index;
    if (i == 0) return {CurveKind::TypeB, pieceApexVertex(spec_, piece), 0};
    if (piece.side == Side::Positive) {
      if (i == m) {
        if (j <= m) return conicKey(conicEdgeId(spec_, Side::Positive, k), j);
        return conicKey(conicEdgeId(spec_, Side::Positive, wrap(k - 1, n)), 2 * m - j);
      }
      if (j == 0) return polygonKey(wrap(2 * k, twoN), i);
      if (j == 2 * m) return polygonKey(wrap(2 * k - 1, twoN), m - i);
    } else {
      if (i == m) {
        if (j <= m) return conicKey(conicEdgeId(spec_, Side::Negative, wrap(k - 1, n)), j);
        return conicKey(conicEdgeId(spec_, Side::Negative, k), 2 * m - j);
      }
      if (j == 0) return polygonKey(wrap(2 * k, twoN), m - i);
      if (j == 2 * m) return polygonKey(wrap(2 * k + 1, twoN), i);
    }
    return {CurveKind::Interior, pieceId(spec_, piece), i * (2 * m + 1) + j};
  }

  Key conicKey(int edgeId, int sample) const {
    const int n = spec_.n();
    const Side side = edgeId < n ? Side::Positive : Side::Negative;
    if (sample == 0) {
      return {CurveKind::TypeB, edgeTypeBVertex(spec_, conicEdge(spec_, side, edgeId % n)), 0};
    }
    if (sample == m_) return {CurveKind::TypeA, side == Side::Positive ? 0 : 1, 0};
    return {CurveKind::ConicEdge, edgeId, sample};
  }

  Key polygonKey(int edge, int sample) const {
    if (sample == 0) return {CurveKind::TypeB, edge, 0};
    if (sample == m_) return {CurveKind::TypeB, (edge + 1) % (2 * spec_.n()), 0};
    return {CurveKind::PolygonEdge, edge, sample};
  }

  Vec3 sharedPosition(const Key& key) const {
    const auto [kind, id, sample] = key;
    switch (kind) {
      case CurveKind::TypeA:
        return Vec3(0.0, id == 0 ? spec_.radius() : -spec_.radius(), 0.0);
      case CurveKind::TypeB:
        return typeBVertex(spec_, id);
      case CurveKind::ConicEdge: {
        const int n = spec_.n();
        const Side side = id < n ? Side::Positive : Side::Negative;
        const double theta = (side == Side::Positive ? 1.0 : -1.0) * kPi / 2.0 * sample / m_;
        return edgePoint(spec_, conicEdge(spec_, side, id % n), theta);
      }
      case CurveKind::PolygonEdge: {
        const double t = static_cast<double>(sample) / m_;
        return (1.0 - t) * typeBVertex(spec_, id) + t * typeBVertex(spec_, id + 1);
      }
      case CurveKind::Interior:
        break;
    }
    throw ConstructionError("interior vertex has no shared position");
  }

  int shared(const Key& key) {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    return create(key, sharedPosition(key));
  }

  int create(const Key& key, const Vec3& p) {
    const int vid = static_cast<int>(mesh_.vertices.size());
    mesh_.vertices.push_back(p);
    const auto [kind, id, sample] = key;
    (void)sample;
    mesh_.vertexLabels.push_back({kind, id});
    if (kind != CurveKind::Interior) index_.emplace(key, vid);
    return vid;
  }

  // Winding is chosen so that the normal points away from the origin, which
  // is interior to the convex solid.
  void emit(int a, int b, int c, int label) {
    const Vec3& pa = mesh_.vertices[static_cast<std::size_t>(a)];
    const Vec3& pb = mesh_.vertices[static_cast<std::size_t>(b)];
    const Vec3& pc = mesh_.vertices[static_cast<std::size_t>(c)];
    const Vec3 normal = (pb - pa).cross(pc - pa);
    if (normal.dot(pa + pb + pc) >= 0.0) {
      mesh_.triangles.push_back({a, b, c});
    } else {
      mesh_.triangles.push_back({a, c, b});
    }
    mesh_.pieceLabels.push_back(label);
  }

  const PolyconSpec& spec_;
  int m_;
  TriangleMesh mesh_;
  std::map<Key, int> index_;
};

}  // namespace detail

/// Mesh of a single half-cone piece; its boundary samples are exactly the
/// conic-edge, 2n-gon-edge and vertex samples used by assemblePolycon.
inline TriangleMesh buildPieceMesh(const PolyconSpec& spec, int id, int m) {
  const Piece piece = pieceFromId(spec, id);
  detail::PolyconMeshBuilder builder(spec, m);
  builder.addPiece(piece);
  return builder.take();
}

/// Full welded polycon surface: n pieces per side, the negative side twisted by pi/n.
inline TriangleMesh assemblePolycon(const PolyconSpec& spec, int m) {
  detail::PolyconMeshBuilder builder(spec, m);
  for (int id = 0; id < 2 * spec.n(); ++id) builder.addPiece(pieceFromId(spec, id));
  return builder.take();
}

struct MeshTopology {
  std::size_t vertexCount = 0;
  std::size_t edgeCount = 0;
  std::size_t faceCount = 0;
  bool watertight = false;             ///< every undirected edge used by exactly 2 triangles
  bool consistentlyOriented = false;   ///< every directed edge used at most once

  long eulerCharacteristic() const {
    return static_cast<long>(vertexCount) - static_cast<long>(edgeCount) +
           static_cast<long>(faceCount);
  }
};

inline MeshTopology topology(const TriangleMesh& mesh) {
  // Half-edges bucketed by their smaller endpoint (counting sort); each entry
  // stores the larger endpoint with the direction in the low bit.
  const std::size_t vertexCount = mesh.vertices.size();
  std::vector<std::uint32_t> offsets(vertexCount + 1, 0);
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) ++offsets[static_cast<std::size_t>(std::min(t[e], t[(e + 1) % 3])) + 1];
  }
  for (std::size_t v = 0; v < vertexCount; ++v) offsets[v + 1] += offsets[v];
  std::vector<std::uint64_t> buckets(offsets.back());
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = t[e], b = t[(e + 1) % 3];
      const auto lo = static_cast<std::size_t>(std::min(a, b));
      const auto hi = static_cast<std::uint64_t>(std::max(a, b));
      buckets[fill[lo]++] = (hi << 1) | (a < b ? 1u : 0u);
    }
  }

  MeshTopology topo;
  topo.vertexCount = vertexCount;
  topo.faceCount = mesh.triangles.size();
  topo.watertight = !buckets.empty();
  topo.consistentlyOriented = true;
  for (std::size_t v = 0; v < vertexCount; ++v) {
    const auto first = buckets.begin() + offsets[v];
    const auto last = buckets.begin() + offsets[v + 1];
    std::sort(first, last);
    for (auto i = first; i != last;) {
      auto j = i;
      int forward = 0, backward = 0;
      while (j != last && (*j >> 1) == (*i >> 1)) {
        (*j & 1u) ? ++forward : ++backward;
        ++j;
      }
      if (j - i != 2) topo.watertight = false;
      if (forward > 1 || backward > 1) topo.consistentlyOriented = false;
      ++topo.edgeCount;
      i = j;
    }
  }
  return topo;
}

struct MeshIntegrals {
  double volume = 0.0;
  double area = 0.0;
};

/// Divergence-theorem volume (signed tetrahedra against the origin) and
/// total area, accumulated in index order with Neumaier summation.
inline MeshIntegrals integrateMesh(const TriangleMesh& mesh) {
  if (!topology(mesh).watertight) {
    throw IntegrityError("mesh integration requires a watertight mesh");
  }
  double vol = 0.0, volComp = 0.0, area = 0.0, areaComp = 0.0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& c = mesh.vertices[static_cast<std::size_t>(t[2])];
    detail::neumaierAdd(vol, volComp, a.dot(b.cross(c)) / 6.0);
    detail::neumaierAdd(area, areaComp, 0.5 * (b - a).cross(c - a).norm());
  }
  return {vol + volComp, area + areaComp};
}

/// Area of an arbitrary (possibly open) triangle set.
inline double meshArea(const TriangleMesh& mesh) {
  double area = 0.0, comp = 0.0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[static_cast<std::size_t>(t[0])];
    const Vec3& b = mesh.vertices[static_cast<std::size_t>(t[1])];
    const Vec3& c = mesh.vertices[static_cast<std::size_t>(t[2])];
    detail::neumaierAdd(area, comp, 0.5 * (b - a).cross(c - a).norm());
  }
  return area + comp;
}

}  // namespace polycon

#endif  // POLYCON_MESH_HPP
