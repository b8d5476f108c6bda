#ifndef POLYCON_CORE_HPP
#define POLYCON_CORE_HPP

// Polycon parametrization, vertices, conic edges and cone pieces.
//
// Body frame: the central 2n-gon lies in the y = 0 plane with its center at
// the origin, the long axis is y. Type-B vertex j sits at angle j*pi/n from
// +z towards +x. The positive-y half carries the untwisted cone pieces; the
// negative-y half is rotated by +pi/n about +y.

#include <Eigen/Geometry>

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polycon/error.hpp"

namespace polycon {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Transform = Eigen::Isometry3d;

inline constexpr double kPi = std::numbers::pi;

namespace detail {

// sin(num*pi/den) and cos(num*pi/den), exact at multiples of pi/2 and
// evaluated in long double elsewhere.
inline double sinPi(long num, long den) {
  const long twice = 2 * num;
  if (twice % den == 0) {
    const long quarter = ((twice / den) % 4 + 4) % 4;
    constexpr double table[] = {0.0, 1.0, 0.0, -1.0};
    return table[quarter];
  }
  return static_cast<double>(std::sin(std::numbers::pi_v<long double> * num / den));
}

inline double cosPi(long num, long den) { return sinPi(2 * num + den, 2 * den); }

inline Mat3 rotationY(double c, double s) {
  Mat3 m;
  m << c, 0.0, s,
       0.0, 1.0, 0.0,
       -s, 0.0, c;
  return m;
}

}  // namespace detail

/// Right-handed rotation about the long (y) axis by num*pi/den.
inline Mat3 rotationAboutLongAxis(long num, long den) {
  return detail::rotationY(detail::cosPi(num, den), detail::sinPi(num, den));
}

/// The pair (n, R) that fixes a polycon, plus its derived lengths and angles.
class PolyconSpec {
public:
  PolyconSpec(int n, double radius) : n_(n), radius_(radius) {
    if (n < 2) {
      throw DomainError("polycon index must satisfy n >= 2 (got " + std::to_string(n) + ")");
    }
    if (!(radius > 0.0) || !std::isfinite(radius)) {
      throw DomainError("polycon radius must be a positive finite number");
    }
    halfSlopeSin_ = detail::sinPi(1, 2L * n);
    halfSlopeCos_ = detail::cosPi(1, 2L * n);
    cutSin_ = detail::sinPi(1, n);
    cutCos_ = detail::cosPi(1, n);
  }

  int n() const { return n_; }
  double radius() const { return radius_; }

  /// Angle of the cone's lateral surface with its base plane, pi/(2n).
  double slopeAngle() const { return kPi / (2.0 * n_); }
  /// Dihedral angle of each cutting plane with the base plane, pi/2 - pi/n.
  double cuttingAngle() const { return kPi / 2.0 - kPi / n_; }

  double sinHalfStep() const { return halfSlopeSin_; }  ///< sin(pi/(2n))
  double cosHalfStep() const { return halfSlopeCos_; }  ///< cos(pi/(2n))
  double sinStep() const { return cutSin_; }            ///< sin(pi/n)
  double cosStep() const { return cutCos_; }            ///< cos(pi/n)
  double cotStep() const { return cutCos_ / cutSin_; }  ///< cot(pi/n)

  /// Apex height of the generating cone; also the circumradius of the central 2n-gon.
  double coneHeight() const { return radius_ * halfSlopeSin_ / halfSlopeCos_; }
  /// Slant length of the generating cone, R sec(pi/(2n)).
  double slantLength() const { return radius_ / halfSlopeCos_; }
  /// Side length of the central 2n-gon.
  double polygonEdgeLength() const { return 2.0 * coneHeight() * halfSlopeSin_; }

private:
  int n_;
  double radius_;
  double halfSlopeSin_;
  double halfSlopeCos_;
  double cutSin_;
  double cutCos_;
};

/// Eccentricity of the conic edges, cos(pi/n)/sin(pi/(2n)).
inline double eccentricity(const PolyconSpec& spec) {
  if (spec.n() == 2) return 0.0;
  if (spec.n() == 3) return 1.0;
  return spec.cosStep() / spec.sinHalfStep();
}

/// Eccentricity of the edges' projection onto the cone base, cot(pi/n) cot(pi/(2n)).
inline double projectedEccentricity(const PolyconSpec& spec) {
  if (spec.n() == 2) return 0.0;
  if (spec.n() == 3) return 1.0;
  return spec.cotStep() * spec.cosHalfStep() / spec.sinHalfStep();
}

enum class ConicClass { Circle, Parabola, Hyperbola };

inline ConicClass classify(double eccentricityValue) {
  if (eccentricityValue == 0.0) return ConicClass::Circle;
  if (eccentricityValue == 1.0) return ConicClass::Parabola;
  return eccentricityValue > 1.0 ? ConicClass::Hyperbola : ConicClass::Circle;
}

enum class Side { Positive, Negative };

inline const char* toString(Side side) { return side == Side::Positive ? "+y" : "-y"; }

/// One of the 2n conic edges. The canonical curve lives in the cutting plane
/// z = x cot(pi/n); `frame` carries it into the body.
struct ConicEdge {
  Side side = Side::Positive;
  int index = 0;
  double eStar = 0.0;
  Transform frame = Transform::Identity();
};

/// Frame of the positive-side pieces is a rotation by 2k pi/n about y; the
/// negative side adds the pi/n twist.
inline Mat3 sideRotation(const PolyconSpec& spec, Side side, int index) {
  const long n = spec.n();
  const long k = ((index % n) + n) % n;
  return side == Side::Positive ? rotationAboutLongAxis(2 * k, n)
                                : rotationAboutLongAxis(2 * k + 1, n);
}

inline ConicEdge conicEdge(const PolyconSpec& spec, Side side, int index) {
  if (index < 0 || index >= spec.n()) {
    throw DomainError("conic edge index must lie in [0, n)");
  }
  ConicEdge edge;
  edge.side = side;
  edge.index = index;
  edge.eStar = projectedEccentricity(spec);
  edge.frame = Transform::Identity();
  edge.frame.linear() = sideRotation(spec, side, index);
  return edge;
}

/// All 2n edges: positive side first, then negative side.
inline std::vector<ConicEdge> conicEdges(const PolyconSpec& spec) {
  std::vector<ConicEdge> edges;
  edges.reserve(2 * spec.n());
  for (Side side : {Side::Positive, Side::Negative}) {
    for (int k = 0; k < spec.n(); ++k) edges.push_back(conicEdge(spec, side, k));
  }
  return edges;
}

/// Part of [-pi/2, pi/2] that is an actual edge of the solid after the twist.
inline std::array<double, 2> edgeParameterRange(Side side) {
  return side == Side::Positive ? std::array<double, 2>{0.0, kPi / 2.0}
                                : std::array<double, 2>{-kPi / 2.0, 0.0};
}

/// Focus-polar radius of the projected conic, R / (1 + e* |cos theta|).
/// |cos| makes the same formula serve both cutting planes of a piece.
inline double projectedConicRadius(const PolyconSpec& spec, double theta) {
  return spec.radius() / (1.0 + projectedEccentricity(spec) * std::abs(std::cos(theta)));
}

/// Point of the canonical conic at parameter theta in [-pi/2, pi/2].
inline Vec3 canonicalEdgePoint(const PolyconSpec& spec, double theta) {
  const double rho = projectedConicRadius(spec, theta);
  const double c = std::cos(theta);
  return {rho * c, rho * std::sin(theta), rho * c * spec.cotStep()};
}

inline void checkEdgeParameter(double theta) {
  if (!(theta >= -kPi / 2.0 && theta <= kPi / 2.0)) {
    throw DomainError("edge parameter must lie in [-pi/2, pi/2]");
  }
}

/// Body-frame point of `edge` at parameter theta. The full range traces the
/// whole cutting-plane conic from (0,-R,0) to (0,R,0);
/// edgeParameterRange(edge.side) is the half that bounds the solid.
inline Vec3 edgePoint(const PolyconSpec& spec, const ConicEdge& edge, double theta) {
  checkEdgeParameter(theta);
  return edge.frame * canonicalEdgePoint(spec, theta);
}

/// d/dtheta of the canonical conic point, valid on [-pi/2, pi/2].
inline Vec3 canonicalEdgeTangent(const PolyconSpec& spec, double theta) {
  const double e = projectedEccentricity(spec);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double denom = 1.0 + e * c;
  const double rho = spec.radius() / denom;
  const double drho = spec.radius() * e * s / (denom * denom);
  return {drho * c - rho * s, drho * s + rho * c, (drho * c - rho * s) * spec.cotStep()};
}

struct VertexSet {
  std::array<Vec3, 2> typeA;  ///< (0, R, 0) then (0, -R, 0)
  std::vector<Vec3> typeB;    ///< 2n-gon corners, index j at angle j*pi/n
};

inline Vec3 typeBVertex(const PolyconSpec& spec, int j) {
  const long twoN = 2L * spec.n();
  const long jj = ((j % twoN) + twoN) % twoN;
  const double h = spec.coneHeight();
  return {h * detail::sinPi(jj, spec.n()), 0.0, h * detail::cosPi(jj, spec.n())};
}

inline VertexSet vertices(const PolyconSpec& spec) {
  VertexSet set;
  set.typeA = {Vec3(0.0, spec.radius(), 0.0), Vec3(0.0, -spec.radius(), 0.0)};
  set.typeB.reserve(2 * spec.n());
  for (int j = 0; j < 2 * spec.n(); ++j) set.typeB.push_back(typeBVertex(spec, j));
  return set;
}

/// Type-B vertex the edge passes through (its theta = 0 point).
inline int edgeTypeBVertex(const PolyconSpec& spec, const ConicEdge& edge) {
  return edge.side == Side::Positive ? 2 * edge.index + 1 : (2 * edge.index + 2) % (2 * spec.n());
}

// ---------------------------------------------------------------------------
// Cone pieces. After the twist the surface is 2n half-cone patches. Patch
// (side, k) is the canonical cone (apex (0,0,H), base circle of radius R in
// z = 0) restricted to azimuth [0, pi] (positive side) or [pi, 2pi]
// (negative side), clipped by both cutting planes, then rotated by
// sideRotation(side, k).

struct Piece {
  Side side = Side::Positive;
  int index = 0;
};

inline int pieceId(const PolyconSpec& spec, Piece piece) {
  return piece.side == Side::Positive ? piece.index : spec.n() + piece.index;
}

inline Piece pieceFromId(const PolyconSpec& spec, int id) {
  if (id < 0 || id >= 2 * spec.n()) throw DomainError("piece id must lie in [0, 2n)");
  return id < spec.n() ? Piece{Side::Positive, id} : Piece{Side::Negative, id - spec.n()};
}

inline std::array<double, 2> pieceAzimuthRange(Side side) {
  return side == Side::Positive ? std::array<double, 2>{0.0, kPi}
                                : std::array<double, 2>{kPi, 2.0 * kPi};
}

/// Index of the type-B vertex that is the apex of this piece's cone.
inline int pieceApexVertex(const PolyconSpec& spec, Piece piece) {
  (void)spec;
  return piece.side == Side::Positive ? 2 * piece.index : 2 * piece.index + 1;
}

/// Slant distance from the apex to the conic boundary along the generator at azimuth phi.
inline double generatorLength(const PolyconSpec& spec, double phi) {
  return spec.slantLength() * projectedConicRadius(spec, phi) / spec.radius();
}

/// Canonical-cone point at azimuth phi and slant fraction t in [0, 1] of the
/// way from the apex to the conic boundary.
inline Vec3 canonicalPiecePoint(const PolyconSpec& spec, double phi, double t) {
  const double rho = t * projectedConicRadius(spec, phi);
  return {rho * std::cos(phi), rho * std::sin(phi),
          spec.coneHeight() * (1.0 - rho / spec.radius())};
}

inline Vec3 piecePoint(const PolyconSpec& spec, Piece piece, double phi, double t) {
  return sideRotation(spec, piece.side, piece.index) * canonicalPiecePoint(spec, phi, t);
}

/// Unit generator direction from the canonical apex towards azimuth phi.
inline Vec3 canonicalGenerator(const PolyconSpec& spec, double phi) {
  return Vec3(spec.radius() * std::cos(phi), spec.radius() * std::sin(phi), -spec.coneHeight()) /
         spec.slantLength();
}

/// Outward unit normal of the canonical cone along the generator at azimuth phi.
inline Vec3 canonicalOutwardNormal(const PolyconSpec& spec, double phi) {
  return Vec3(spec.sinHalfStep() * std::cos(phi), spec.sinHalfStep() * std::sin(phi),
              spec.cosHalfStep());
}

/// Signed distance to the cone sheet of the sector containing p (negative
/// inside). Exact near the surface; an indicator elsewhere.
inline double signedDistance(const PolyconSpec& spec, const Vec3& p) {
  const Side side = p.y() >= 0.0 ? Side::Positive : Side::Negative;
  const double sector = 2.0 * kPi / spec.n();
  const double offset = side == Side::Positive ? 0.0 : kPi / spec.n();
  const double angle = std::atan2(p.x(), p.z()) - offset;
  const int k = static_cast<int>(std::lround(angle / sector));
  const Vec3 local = sideRotation(spec, side, k).transpose() * p;
  const double r = std::hypot(local.x(), local.y());
  return local.z() * spec.cosHalfStep() + r * spec.sinHalfStep() - spec.coneHeight() * spec.cosHalfStep();
}

// ---------------------------------------------------------------------------
// Symmetry.

/// Rotation by 2pi/n about the long axis.
inline Mat3 axialSymmetry(const PolyconSpec& spec) { return rotationAboutLongAxis(2, spec.n()); }

/// Improper symmetry swapping the halves: mirror in y = 0, then the pi/n twist.
inline Mat3 twistReflection(const PolyconSpec& spec) {
  Mat3 mirror = Mat3::Identity();
  mirror(1, 1) = -1.0;
  return rotationAboutLongAxis(1, spec.n()) * mirror;
}

// ---------------------------------------------------------------------------
// Rolling order. The 2n-gon edge j joins type-B vertices j and j+1. Rolling
// starts on edge 0 pivoting about vertex 0 and visits the apexes in
// decreasing order.

struct PhaseInfo {
  Piece piece;
  double azimuthStart = 0.0;  ///< generator azimuth in contact when the phase begins
  double azimuthEnd = 0.0;
  int apexVertex = 0;
  int startEdge = 0;  ///< 2n-gon edge in contact at the start
  int endEdge = 0;
};

inline PhaseInfo rollingPhase(const PolyconSpec& spec, long phase) {
  const long n = spec.n();
  const long twoN = 2 * n;
  const long p = ((phase % twoN) + twoN) % twoN;
  PhaseInfo info;
  if (p % 2 == 0) {
    info.piece = {Side::Positive, static_cast<int>(((-p / 2) % n + n) % n)};
    info.azimuthStart = 0.0;
    info.azimuthEnd = kPi;
  } else {
    info.piece = {Side::Negative, static_cast<int>(((-(p + 1) / 2) % n + n) % n)};
    info.azimuthStart = 2.0 * kPi;
    info.azimuthEnd = kPi;
  }
  info.apexVertex = static_cast<int>((twoN - p) % twoN);
  info.startEdge = info.apexVertex;
  info.endEdge = static_cast<int>((twoN - p - 1) % twoN);
  return info;
}

}  // namespace polycon

#endif  // POLYCON_CORE_HPP
