#ifndef POLYCON_DEVELOPMENT_HPP
#define POLYCON_DEVELOPMENT_HPP

// Isometric unrolling of the polycon surface into the plane.
//
// A cone point at azimuth phi and slant distance s from the apex develops to
// planar polar coordinates (s, -cos(pi/2n) * (phi - phi_start)) about the
// developed apex. The sign lays the surface outer face down, which is how it
// meets the ground when rolling, so a template and a rolling footprint are
// related by a proper rigid motion.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "polycon/core.hpp"
#include "polycon/error.hpp"
#include "polycon/metrics.hpp"
#include "polycon/planar.hpp"
#include "polycon/quadrature.hpp"

namespace polycon {

inline constexpr int kMinDevelopmentSamples = 32;

/// One unrolled half-cone piece. boundary[0] is the developed apex, followed
/// by the developed conic arc from the start generator to the end generator;
/// the polygon closes back to the apex.
struct DevelopedPatch {
  int pieceId = 0;
  int startEdge = 0;   ///< 2n-gon edge along the first straight side
  int attachEdge = 0;  ///< 2n-gon edge along the last straight side, shared with the next patch
  double azimuthStart = 0.0;
  double azimuthEnd = 0.0;
  double area = 0.0;       ///< area of the region bounded by the exact developed curve
  double arcLength = 0.0;  ///< length of the exact developed conic arc
  Polygon2 boundary;

  const Vec2& apex() const { return boundary.front(); }
  const Vec2& arcStart() const { return boundary[1]; }
  const Vec2& arcEnd() const { return boundary.back(); }
  Polygon2 arc() const { return Polygon2(boundary.begin() + 1, boundary.end()); }
};

/// Planar image of (phi, s) for a patch whose start generator lies along +x.
inline Vec2 developPoint(const PolyconSpec& spec, double azimuthStart, double phi, double slant) {
  const double angle = -spec.cosHalfStep() * (phi - azimuthStart);
  return {slant * std::cos(angle), slant * std::sin(angle)};
}

/// Phase (position in the rolling order) at which a piece is in contact.
inline int rollingPhaseOfPiece(const PolyconSpec& spec, int id) {
  for (int p = 0; p < 2 * spec.n(); ++p) {
    if (pieceId(spec, rollingPhase(spec, p).piece) == id) return p;
  }
  throw DomainError("piece id must lie in [0, 2n)");
}

/// Area enclosed by one developed patch, integral of s(phi)^2 cos(pi/2n) / 2
/// over the patch's azimuth range.
inline double developedPatchArea(const PolyconSpec& spec) {
  const double c = spec.cosHalfStep();
  auto sector = [&](double phi) {
    const double s = generatorLength(spec, phi);
    return 0.5 * c * s * s;
  };
  const double r2 = spec.radius() * spec.radius();
  return 2.0 * integrateAdaptive(sector, 0.0, kPi / 2.0, 1e-12 * r2).value;
}

/// Arc length of the developed conic boundary of one patch, by quadrature of
/// the planar speed |d/dphi (s(phi) e^{i c phi})| on each half-edge.
inline double developedArcLength(const PolyconSpec& spec) {
  const double c = spec.cosHalfStep();
  const double e = projectedEccentricity(spec);
  const double slant = spec.slantLength();
  auto speed = [&](double phi) {
    const double d = 1.0 + e * std::cos(phi);
    const double s = slant / d;
    const double ds = slant * e * std::sin(phi) / (d * d);
    return std::hypot(ds, c * s);
  };
  // Both halves are mirror images; integrate one.
  return 2.0 * integrateAdaptive(speed, 0.0, kPi / 2.0, 1e-10 * spec.radius()).value;
}

inline DevelopedPatch developPiece(const PolyconSpec& spec, int id, int samples) {
  if (samples < kMinDevelopmentSamples) {
    throw DomainError("development needs at least " + std::to_string(kMinDevelopmentSamples) +
                      " arc samples");
  }
  const PhaseInfo phase = rollingPhase(spec, rollingPhaseOfPiece(spec, id));
  DevelopedPatch patch;
  patch.pieceId = id;
  patch.startEdge = phase.startEdge;
  patch.attachEdge = phase.endEdge;
  patch.azimuthStart = phase.azimuthStart;
  patch.azimuthEnd = phase.azimuthEnd;
  patch.area = developedPatchArea(spec);
  patch.arcLength = developedArcLength(spec);
  patch.boundary.reserve(static_cast<std::size_t>(samples) + 2);
  patch.boundary.emplace_back(0.0, 0.0);
  for (int i = 0; i <= samples; ++i) {
    const double phi = phase.azimuthStart + (phase.azimuthEnd - phase.azimuthStart) * i / samples;
    patch.boundary.push_back(developPoint(spec, phase.azimuthStart, phi, generatorLength(spec, phi)));
  }
  return patch;
}

/// 3D arc length of a conic edge over its full parameter range [-pi/2, pi/2],
/// i.e. the conic through the edge's type-B vertex between both type-A vertices.
inline double conicArcLength(const PolyconSpec& spec) {
  auto speed = [&](double theta) { return canonicalEdgeTangent(spec, theta).norm(); };
  return 2.0 * integrateAdaptive(speed, 0.0, kPi / 2.0, 1e-10 * spec.radius()).value;
}

/// Patches placed in the plane. Patch k+1 is attached to patch k along the
/// shared 2n-gon edge, apex at the far end of patch k's last straight side.
struct DevelopedTemplate {
  std::vector<DevelopedPatch> patches;

  double area() const {
    double total = 0.0;
    for (const auto& patch : patches) total += patch.area;
    return total;
  }

  /// Shoelace area of the sampled boundaries.
  double polygonArea() const {
    double total = 0.0;
    for (const auto& patch : patches) total += polycon::area(patch.boundary);
    return total;
  }

  /// Length of the cut boundary: every developed conic arc. The two straight
  /// sides left open at the ends of the chain are one glued seam and are not
  /// included.
  double cutLength() const {
    double total = 0.0;
    for (const auto& patch : patches) total += patch.arcLength;
    return total;
  }

  /// cutLength() measured on the sampled polylines.
  double polylineCutLength() const {
    double total = 0.0;
    for (const auto& patch : patches) {
      for (std::size_t i = 1; i + 1 < patch.boundary.size(); ++i) {
        total += (patch.boundary[i + 1] - patch.boundary[i]).norm();
      }
    }
    return total;
  }

  std::vector<Polygon2> polygons() const {
    std::vector<Polygon2> out;
    out.reserve(patches.size());
    for (const auto& patch : patches) out.push_back(patch.boundary);
    return out;
  }
};

/// Lays the patches out in rolling order. A single patch is returned
/// unchanged; otherwise exactly the 2n patches of one polycon are required.
inline DevelopedTemplate layoutTemplate(const PolyconSpec& spec, const std::vector<DevelopedPatch>& patches) {
  if (patches.empty()) throw IntegrityError("template layout needs at least one patch");
  DevelopedTemplate result;
  if (patches.size() == 1) {
    result.patches = patches;
    return result;
  }
  const int count = 2 * spec.n();
  if (static_cast<int>(patches.size()) != count) {
    throw DomainError("template layout needs 1 or 2n patches");
  }
  std::map<int, const DevelopedPatch*> byId;
  for (const auto& patch : patches) {
    if (!byId.emplace(patch.pieceId, &patch).second) {
      throw DomainError("duplicate piece " + std::to_string(patch.pieceId) + " in template layout");
    }
  }

  for (int p = 0; p < count; ++p) {
    const int id = pieceId(spec, rollingPhase(spec, p).piece);
    const auto it = byId.find(id);
    if (it == byId.end()) throw DomainError("template layout is missing piece " + std::to_string(id));
    const DevelopedPatch& local = *it->second;
    DevelopedPatch placed = local;
    if (p > 0) {
      const DevelopedPatch& previous = result.patches.back();
      if (previous.attachEdge != local.startEdge) {
        throw LayoutError("patches " + std::to_string(previous.pieceId) + " and " +
                          std::to_string(local.pieceId) + " do not share a 2n-gon edge");
      }
      // New apex at the far end of the shared side, start side pointing back.
      const Rigid2 motion =
          alignSegments(local.apex(), local.arcStart(), previous.arcEnd(), previous.apex());
      placed.boundary = motion.apply(local.boundary);
    }
    result.patches.push_back(std::move(placed));
  }

  const double tolerance = 1e-9 * spec.radius();
  for (std::size_t i = 0; i < result.patches.size(); ++i) {
    for (std::size_t j = i + 1; j < result.patches.size(); ++j) {
      if (interiorsOverlap(result.patches[i].boundary, result.patches[j].boundary, tolerance)) {
        throw LayoutError("developed patches " + std::to_string(result.patches[i].pieceId) +
                          " and " + std::to_string(result.patches[j].pieceId) + " overlap");
      }
    }
  }
  return result;
}

/// Develops every piece and lays out the full template.
inline DevelopedTemplate developTemplate(const PolyconSpec& spec, int samples) {
  std::vector<DevelopedPatch> patches;
  patches.reserve(2 * spec.n());
  for (int id = 0; id < 2 * spec.n(); ++id) patches.push_back(developPiece(spec, id, samples));
  return layoutTemplate(spec, patches);
}

}  // namespace polycon

#endif  // POLYCON_DEVELOPMENT_HPP
