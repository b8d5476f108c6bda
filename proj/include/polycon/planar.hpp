#ifndef POLYCON_PLANAR_HPP
#define POLYCON_PLANAR_HPP

// Small 2D toolkit for developed templates and rolling footprints: polygon
// area, point/polyline distance, overlap test, Hausdorff distance and
// two-point rigid alignment.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "polycon/core.hpp"

namespace polycon {

using Polygon2 = std::vector<Vec2>;

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Signed shoelace area (positive when counterclockwise).
inline double signedArea(const Polygon2& polygon) {
  double sum = 0.0;
  const std::size_t count = polygon.size();
  for (std::size_t i = 0; i < count; ++i) sum += cross2(polygon[i], polygon[(i + 1) % count]);
  return 0.5 * sum;
}

inline double area(const Polygon2& polygon) { return std::abs(signedArea(polygon)); }

inline double pointSegmentDistance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * ab)).norm();
}

/// Distance from p to the closed boundary of `polygon`.
inline double boundaryDistance(const Vec2& p, const Polygon2& polygon) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    best = std::min(best, pointSegmentDistance(p, polygon[i], polygon[(i + 1) % polygon.size()]));
  }
  return best;
}

/// Winding number of the closed polygon around p (non-zero means inside).
inline int windingNumber(const Vec2& p, const Polygon2& polygon) {
  int winding = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Vec2& a = polygon[i];
    const Vec2& b = polygon[(i + 1) % polygon.size()];
    const double side = cross2(b - a, p - a);
    if (a.y() <= p.y()) {
      if (b.y() > p.y() && side > 0.0) ++winding;
    } else if (b.y() <= p.y() && side < 0.0) {
      --winding;
    }
  }
  return winding;
}

struct Box2 {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  void extend(const Vec2& p) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  bool overlaps(const Box2& other, double margin) const {
    return lo.x() <= other.hi.x() + margin && other.lo.x() <= hi.x() + margin &&
           lo.y() <= other.hi.y() + margin && other.lo.y() <= hi.y() + margin;
  }
};

inline Box2 bounds(const Polygon2& polygon) {
  Box2 box;
  for (const Vec2& p : polygon) box.extend(p);
  return box;
}

/// True when the interiors of two simple polygons intersect by more than
/// `tolerance`. Shared boundary segments and touching vertices do not count.
inline bool interiorsOverlap(const Polygon2& first, const Polygon2& second, double tolerance) {
  if (!bounds(first).overlaps(bounds(second), tolerance)) return false;

  auto strictlyInside = [tolerance](const Vec2& p, const Polygon2& polygon) {
    return windingNumber(p, polygon) != 0 && boundaryDistance(p, polygon) > tolerance;
  };
  for (const Vec2& p : first) {
    if (strictlyInside(p, second)) return true;
  }
  for (const Vec2& p : second) {
    if (strictlyInside(p, first)) return true;
  }

  // Proper crossings of boundary segments.
  const std::size_t nf = first.size(), ns = second.size();
  for (std::size_t i = 0; i < nf; ++i) {
    const Vec2& a = first[i];
    const Vec2& b = first[(i + 1) % nf];
    Box2 segBox;
    segBox.extend(a);
    segBox.extend(b);
    const double lenAB = (b - a).norm();
    for (std::size_t j = 0; j < ns; ++j) {
      const Vec2& c = second[j];
      const Vec2& d = second[(j + 1) % ns];
      Box2 other;
      other.extend(c);
      other.extend(d);
      if (!segBox.overlaps(other, 0.0)) continue;
      const double lenCD = (d - c).norm();
      // Signed distances of each endpoint to the other segment's line.
      const double dc = lenAB > 0.0 ? cross2(b - a, c - a) / lenAB : 0.0;
      const double dd = lenAB > 0.0 ? cross2(b - a, d - a) / lenAB : 0.0;
      const double da = lenCD > 0.0 ? cross2(d - c, a - c) / lenCD : 0.0;
      const double db = lenCD > 0.0 ? cross2(d - c, b - c) / lenCD : 0.0;
      const bool straddleCD = (dc > tolerance && dd < -tolerance) || (dc < -tolerance && dd > tolerance);
      const bool straddleAB = (da > tolerance && db < -tolerance) || (da < -tolerance && db > tolerance);
      if (straddleCD && straddleAB) return true;
    }
  }
  return false;
}

/// Symmetric Hausdorff distance between two sets of closed polylines,
/// measured from every vertex of one set to the segments of the other.
inline double hausdorffDistance(const std::vector<Polygon2>& first, const std::vector<Polygon2>& second) {
  auto oneSided = [](const std::vector<Polygon2>& from, const std::vector<Polygon2>& to) {
    std::vector<Box2> boxes;
    boxes.reserve(to.size());
    for (const auto& polygon : to) boxes.push_back(bounds(polygon));
    double worst = 0.0;
    for (const auto& polygon : from) {
      for (const Vec2& p : polygon) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < to.size(); ++k) {
          const Box2& box = boxes[k];
          const Vec2 clamped = p.cwiseMax(box.lo).cwiseMin(box.hi);
          if ((p - clamped).norm() >= best) continue;
          best = std::min(best, boundaryDistance(p, to[k]));
        }
        worst = std::max(worst, best);
      }
    }
    return worst;
  };
  return std::max(oneSided(first, second), oneSided(second, first));
}

/// Planar rigid motion x -> rotation * x + translation.
struct Rigid2 {
  Eigen::Matrix2d rotation = Eigen::Matrix2d::Identity();
  Vec2 translation = Vec2::Zero();

  Vec2 operator()(const Vec2& p) const { return rotation * p + translation; }

  Polygon2 apply(const Polygon2& polygon) const {
    Polygon2 out;
    out.reserve(polygon.size());
    for (const Vec2& p : polygon) out.push_back((*this)(p));
    return out;
  }
};

/// Proper rigid motion carrying segment (fromA, fromB) onto the line of
/// (toA, toB) with fromA -> toA.
inline Rigid2 alignSegments(const Vec2& fromA, const Vec2& fromB, const Vec2& toA, const Vec2& toB) {
  const double angle = std::atan2((toB - toA).y(), (toB - toA).x()) -
                       std::atan2((fromB - fromA).y(), (fromB - fromA).x());
  Rigid2 motion;
  motion.rotation << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  motion.translation = toA - motion.rotation * fromA;
  return motion;
}

}  // namespace polycon

#endif  // POLYCON_PLANAR_HPP
