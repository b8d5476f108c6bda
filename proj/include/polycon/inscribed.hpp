#ifndef POLYCON_INSCRIBED_HPP
#define POLYCON_INSCRIBED_HPP

// Uniform antiprism whose 2n vertices sit on the conic edges, one per edge.
// The upper n-gon lies in y = height/2 on the positive-side edges, the lower
// n-gon is its image under the twist reflection.

#include <cmath>
#include <vector>

#include "polycon/core.hpp"
#include "polycon/mesh.hpp"

namespace polycon {

struct AntiprismSolid {
  int n = 0;
  double b = 0.0;           ///< circumradius of the n-gon faces
  double a = 0.0;           ///< n-gon side, equal to every lateral edge
  double height = 0.0;      ///< distance between the two n-gon faces
  double halfHeight = 0.0;  ///< height / 2; satisfies h^2 = (b^2/2)(cos(pi/n) - cos(2pi/n))
  double theta = 0.0;       ///< edge parameter of the upper vertices on the positive edges
  double cosTheta = 0.0;
  std::vector<Vec3> vertices;  ///< upper n-gon (k = 0..n-1) then lower n-gon

  const Vec3& upper(int k) const { return vertices[static_cast<std::size_t>(k % n)]; }
  const Vec3& lower(int k) const { return vertices[static_cast<std::size_t>(n + k % n)]; }
};

/// cos(theta) = 2 cos(pi/2n) / sqrt(3 + 4 cos(pi/n)).
inline double antiprismCosTheta(const PolyconSpec& spec) {
  return 2.0 * spec.cosHalfStep() / std::sqrt(3.0 + 4.0 * spec.cosStep());
}

/// Face circumradius b in closed form.
inline double antiprismCircumradius(const PolyconSpec& spec) {
  const double s = spec.sinHalfStep();
  return spec.radius() * s /
         (s * s * std::sqrt(3.0 + 4.0 * spec.cosStep()) + spec.cosStep() * spec.cosHalfStep());
}

/// Upper and lower vertex sets for the vertex at edge parameter theta on
/// positive edge 0, replicated by the polycon symmetries.
inline std::vector<Vec3> antiprismVertices(const PolyconSpec& spec, double theta) {
  const Vec3 seed = edgePoint(spec, conicEdge(spec, Side::Positive, 0), theta);
  std::vector<Vec3> out;
  out.reserve(2 * spec.n());
  for (int k = 0; k < spec.n(); ++k) out.push_back(rotationAboutLongAxis(2 * k, spec.n()) * seed);
  const Mat3 swap = twistReflection(spec);
  for (int k = 0; k < spec.n(); ++k) out.push_back(swap * out[static_cast<std::size_t>(k)]);
  return out;
}

inline AntiprismSolid inscribeAntiprism(const PolyconSpec& spec) {
  AntiprismSolid solid;
  solid.n = spec.n();
  solid.cosTheta = antiprismCosTheta(spec);
  solid.theta = std::acos(solid.cosTheta);
  solid.b = antiprismCircumradius(spec);
  solid.a = 2.0 * solid.b * spec.sinStep();
  solid.halfHeight = solid.b * std::sqrt(0.5 * (spec.cosStep() - detail::cosPi(2, spec.n())));
  solid.height = 2.0 * solid.halfHeight;
  solid.vertices = antiprismVertices(spec, solid.theta);
  return solid;
}

/// Lateral bands (U_k, L_k, U_k+1) and (L_k, U_k+1, L_k+1) plus fan-triangulated
/// n-gon faces; for n = 2 the faces collapse and the four lateral triangles
/// form the tetrahedron.
inline TriangleMesh antiprismMesh(const AntiprismSolid& solid) {
  TriangleMesh mesh;
  mesh.vertices = solid.vertices;
  mesh.vertexLabels.resize(mesh.vertices.size());
  const int n = solid.n;
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& v : mesh.vertices) centroid += v;
  centroid /= static_cast<double>(mesh.vertices.size());

  auto add = [&](int i, int j, int k) {
    const Vec3& a = mesh.vertices[static_cast<std::size_t>(i)];
    const Vec3& b = mesh.vertices[static_cast<std::size_t>(j)];
    const Vec3& c = mesh.vertices[static_cast<std::size_t>(k)];
    const Vec3 normal = (b - a).cross(c - a);
    if (normal.dot(a + b + c - 3.0 * centroid) >= 0.0) {
      mesh.triangles.push_back({i, j, k});
    } else {
      mesh.triangles.push_back({i, k, j});
    }
    mesh.pieceLabels.push_back(-1);
  };
  // Lower vertex k sits between upper k and k+1 in azimuth.
  for (int k = 0; k < n; ++k) {
    const int u0 = k, u1 = (k + 1) % n;
    const int l0 = n + k, l1 = n + (k + 1) % n;
    add(u0, l0, u1);
    add(l0, u1, l1);
  }
  if (n >= 3) {
    for (int k = 1; k + 1 < n; ++k) {
      add(0, k, k + 1);
      add(n, n + k, n + k + 1);
    }
  }
  return mesh;
}

/// Distance from p to the nearest point of any conic edge (full parameter
/// range), by sampling then golden-section refinement.
inline double distanceToConicEdges(const PolyconSpec& spec, const Vec3& p) {
  double best = std::numeric_limits<double>::infinity();
  constexpr int kSamples = 720;
  for (const ConicEdge& edge : conicEdges(spec)) {
    auto dist = [&](double t) { return (edgePoint(spec, edge, t) - p).norm(); };
    int bestIndex = 0;
    double bestValue = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kSamples; ++i) {
      const double t = -kPi / 2.0 + kPi * i / kSamples;
      const double d = dist(t);
      if (d < bestValue) {
        bestValue = d;
        bestIndex = i;
      }
    }
    double lo = -kPi / 2.0 + kPi * std::max(bestIndex - 1, 0) / kSamples;
    double hi = -kPi / 2.0 + kPi * std::min(bestIndex + 1, kSamples) / kSamples;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 100; ++it) {
      const double m1 = hi - ratio * (hi - lo);
      const double m2 = lo + ratio * (hi - lo);
      if (dist(m1) < dist(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    best = std::min({best, bestValue, dist(0.5 * (lo + hi))});
  }
  return best;
}

}  // namespace polycon

#endif  // POLYCON_INSCRIBED_HPP
