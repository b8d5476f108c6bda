#ifndef POLYCON_ROLLING_HPP
#define POLYCON_ROLLING_HPP

// Quasi-static no-slip rolling on the plane z = 0.
//
// During a phase one cone piece is in contact: its apex (a type-B vertex) is
// a fixed pivot P on the plane and the generator at azimuth phi lies on the
// plane along w(psi) = (cos psi, sin psi, 0). The pose maps the body frame
// [g, n, g x n] (generator, outward normal) onto the world frame
// [w, -z, w x -z]. Rolling without slip lays generators down the way the
// development does, so psi advances by cos(pi/2n) per unit of phi, and the
// body turns about the contact line by sin(pi/2n) per unit of phi.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "polycon/core.hpp"
#include "polycon/error.hpp"
#include "polycon/mesh.hpp"
#include "polycon/planar.hpp"

namespace polycon {

struct RollSample {
  Transform pose = Transform::Identity();  ///< body to world
  Vec3 contactStart = Vec3::Zero();        ///< pivot (active type-B vertex)
  Vec3 contactEnd = Vec3::Zero();
  Vec3 com = Vec3::Zero();
  double topHeight = 0.0;
  int phaseIndex = 0;
  long phaseNumber = 0;  ///< phases completed before this sample
  double azimuth = 0.0;  ///< contact generator azimuth on the active piece

  double contactLength() const { return (contactEnd - contactStart).norm(); }
};

struct RollTrace {
  std::vector<RollSample> samples;
  double stepAngle = 0.0;         ///< requested rotation per sample
  double appliedStepAngle = 0.0;  ///< actual rotation per sample, <= stepAngle
  long stepsPerPhase = 0;
  int n = 0;
  double radius = 0.0;
  double revolutions = 0.0;
};

/// Rotation of the body about the contact line over one phase.
inline double phaseRotationAngle(const PolyconSpec& spec) { return kPi * spec.sinHalfStep(); }

/// Shortest and longest contact segment over a revolution.
inline std::pair<double, double> contactExtents(const PolyconSpec& spec) {
  if (spec.n() == 2) return {spec.slantLength(), spec.slantLength()};
  return {spec.polygonEdgeLength(), spec.slantLength()};
}

namespace detail {

// Highest point of the body along body-frame direction d. The maximum of a
// linear function sits on a type-B vertex or on a conic edge (generators
// are straight), and along a conic edge the critical points solve
// gamma cos(theta) - alpha sin(theta) = -gamma e*.
inline double supportHeight(const PolyconSpec& spec, const std::vector<ConicEdge>& edges, const Vec3& d) {
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < 2 * spec.n(); ++j) best = std::max(best, d.dot(typeBVertex(spec, j)));
  const double e = projectedEccentricity(spec);
  for (const ConicEdge& edge : edges) {
    const Vec3 dc = edge.frame.linear().transpose() * d;
    const double alpha = dc.x() + dc.z() * spec.cotStep();
    const double gamma = dc.y();
    const auto range = edgeParameterRange(edge.side);
    auto value = [&](double theta) {
      return projectedConicRadius(spec, theta) * (alpha * std::cos(theta) + gamma * std::sin(theta));
    };
    best = std::max({best, value(range[0]), value(range[1])});
    const double amplitude = std::hypot(alpha, gamma);
    if (amplitude == 0.0) continue;
    const double ratio = -gamma * e / amplitude;
    if (std::abs(ratio) > 1.0) continue;
    const double delta = std::atan2(alpha, gamma);
    const double spread = std::acos(ratio);
    for (double theta0 : {-delta + spread, -delta - spread}) {
      for (int wrap = -2; wrap <= 2; ++wrap) {
        const double theta = theta0 + 2.0 * kPi * wrap;
        if (theta >= range[0] && theta <= range[1]) best = std::max(best, value(theta));
      }
    }
  }
  return best;
}

inline Mat3 contactFrameBody(const PolyconSpec& spec, Piece piece, double phi) {
  const Mat3 s = sideRotation(spec, piece.side, piece.index);
  const Vec3 g = s * canonicalGenerator(spec, phi);
  const Vec3 normal = s * canonicalOutwardNormal(spec, phi);
  Mat3 frame;
  frame.col(0) = g;
  frame.col(1) = normal;
  frame.col(2) = g.cross(normal);
  return frame;
}

inline Mat3 contactFrameWorld(double psi) {
  const Vec3 w(std::cos(psi), std::sin(psi), 0.0);
  const Vec3 down(0.0, 0.0, -1.0);
  Mat3 frame;
  frame.col(0) = w;
  frame.col(1) = down;
  frame.col(2) = w.cross(down);
  return frame;
}

struct RollState {
  Vec2 pivot = Vec2::Zero();
  double psiStart = 0.0;  ///< contact line heading when the phase begins
};

// Heading of the contact line at azimuth phi of a phase that began with
// heading psiStart. The sign is what makes the contact line instantaneously
// at rest.
inline double contactHeading(const PolyconSpec& spec, const PhaseInfo& phase, double psiStart, double phi) {
  return psiStart - spec.cosHalfStep() * (phi - phase.azimuthStart);
}

inline Transform contactPose(const PolyconSpec& spec, const PhaseInfo& phase, const RollState& state,
                             double phi) {
  const double psi = contactHeading(spec, phase, state.psiStart, phi);
  Transform pose = Transform::Identity();
  pose.linear() = contactFrameWorld(psi) * contactFrameBody(spec, phase.piece, phi).transpose();
  const Vec3 pivot(state.pivot.x(), state.pivot.y(), 0.0);
  pose.translation() = pivot - pose.linear() * typeBVertex(spec, phase.apexVertex);
  return pose;
}

// State after the phase ends: the far end of the final contact segment (the
// next type-B vertex) becomes the pivot and the same segment is read back.
inline RollState nextState(const PolyconSpec& spec, const PhaseInfo& phase, const RollState& state) {
  const double psi = contactHeading(spec, phase, state.psiStart, phase.azimuthEnd);
  RollState next;
  next.pivot = state.pivot + spec.polygonEdgeLength() * Vec2(std::cos(psi), std::sin(psi));
  next.psiStart = psi + kPi;
  return next;
}

// Initial state with 2n-gon edge 0 on the ground, the center of mass above
// the origin and heading psi0 for the contact line.
inline RollState initialState(const PolyconSpec& spec, double psi0) {
  RollState state;
  state.psiStart = psi0;
  state.pivot = -0.5 * spec.polygonEdgeLength() * Vec2(std::cos(psi0), std::sin(psi0));
  return state;
}

// Start heading that makes the net displacement over a revolution point
// along +x.
inline double headingForPlusX(const PolyconSpec& spec) {
  RollState state = initialState(spec, 0.0);
  const Vec2 start = state.pivot;
  for (int p = 0; p < 2 * spec.n(); ++p) state = nextState(spec, rollingPhase(spec, p), state);
  const Vec2 shift = state.pivot - start;
  return -std::atan2(shift.y(), shift.x());
}

}  // namespace detail

/// Rolls the body through `revolutions` full cycles of 2n phases. The step
/// is rounded down so that each phase holds an even number of equal steps.
inline RollTrace simulateRoll(const PolyconSpec& spec, double stepAngle, double revolutions) {
  if (!(stepAngle > 0.0) || stepAngle > kPi / 720.0) {
    throw DomainError("step angle must lie in (0, pi/720]");
  }
  if (!(revolutions > 0.0) || !std::isfinite(revolutions)) {
    throw DomainError("revolutions must be positive");
  }
  const int twoN = 2 * spec.n();
  const double perPhase = phaseRotationAngle(spec);
  long steps = static_cast<long>(std::ceil(perPhase / stepAngle - 1e-9));
  if (steps % 2 != 0) ++steps;
  const long totalSteps = std::max(1L, std::lround(revolutions * twoN * steps));

  RollTrace trace;
  trace.stepAngle = stepAngle;
  trace.appliedStepAngle = perPhase / static_cast<double>(steps);
  trace.stepsPerPhase = steps;
  trace.n = spec.n();
  trace.radius = spec.radius();
  trace.revolutions = revolutions;
  trace.samples.reserve(static_cast<std::size_t>(totalSteps) + 1);

  const auto edges = conicEdges(spec);
  const TriangleMesh probe = assemblePolycon(spec, kMinMeshResolution);
  const double penetrationTolerance = 1e-6 * spec.radius();

  detail::RollState state = detail::initialState(spec, detail::headingForPlusX(spec));
  long phaseNumber = 0;
  for (long step = 0; step <= totalSteps; ++step) {
    long local = step - phaseNumber * steps;
    if (local == steps && step < totalSteps) {
      state = detail::nextState(spec, rollingPhase(spec, phaseNumber), state);
      ++phaseNumber;
      local = 0;
    }
    const PhaseInfo phase = rollingPhase(spec, phaseNumber);
    const double phi = phase.azimuthStart +
                       (phase.azimuthEnd - phase.azimuthStart) * static_cast<double>(local) / steps;
    RollSample sample;
    sample.pose = detail::contactPose(spec, phase, state, phi);
    sample.phaseIndex = static_cast<int>(phaseNumber % twoN);
    sample.phaseNumber = phaseNumber;
    sample.azimuth = phi;
    sample.contactStart = Vec3(state.pivot.x(), state.pivot.y(), 0.0);
    const double psi = detail::contactHeading(spec, phase, state.psiStart, phi);
    sample.contactEnd =
        sample.contactStart + generatorLength(spec, phi) * Vec3(std::cos(psi), std::sin(psi), 0.0);
    sample.com = sample.pose.translation();
    const Vec3 up = sample.pose.linear().row(2).transpose();
    sample.topHeight = detail::supportHeight(spec, edges, up) + sample.pose.translation().z();

    double lowest = std::numeric_limits<double>::infinity();
    for (const Vec3& v : probe.vertices) lowest = std::min(lowest, up.dot(v));
    lowest += sample.pose.translation().z();
    if (lowest < -penetrationTolerance) {
      throw IntegrityError("body penetrates the plane by " + std::to_string(-lowest) + " at sample " +
                           std::to_string(step));
    }
    trace.samples.push_back(sample);
  }
  return trace;
}

struct ComArc {
  int phaseIndex = 0;
  Vec2 center = Vec2::Zero();
  double radius = 0.0;
  double angularExtent = 0.0;  ///< signed, counterclockwise positive
  double residual = 0.0;       ///< largest |distance - radius| over the fitted points
};

/// Algebraic (Kasa) circle fit through the horizontal COM positions of each
/// phase run.
inline std::vector<ComArc> comPath(const RollTrace& trace) {
  if (trace.samples.empty()) throw DomainError("COM path needs a non-empty trace");
  std::vector<ComArc> arcs;
  const double tolerance = 1e-5 * trace.radius;
  std::size_t begin = 0;
  while (begin < trace.samples.size()) {
    std::size_t end = begin;
    while (end < trace.samples.size() && trace.samples[end].phaseNumber == trace.samples[begin].phaseNumber) {
      ++end;
    }
    // Close the run with the first sample of the next phase: the pose there
    // is the end pose of this phase.
    const std::size_t last = std::min(end, trace.samples.size() - 1);
    std::vector<Vec2> points;
    for (std::size_t i = begin; i <= last; ++i) points.emplace_back(trace.samples[i].com.x(), trace.samples[i].com.y());
    if (points.size() < 3) {
      // Partial tail of a fractional revolution.
      begin = end;
      continue;
    }

    Vec2 mean = Vec2::Zero();
    for (const Vec2& p : points) mean += p;
    mean /= static_cast<double>(points.size());
    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    for (const Vec2& p : points) {
      const Vec2 q = p - mean;
      const Eigen::Vector3d row(q.x(), q.y(), 1.0);
      normal += row * row.transpose();
      rhs += row * q.squaredNorm();
    }
    const Eigen::Vector3d solution = normal.ldlt().solve(rhs);
    ComArc arc;
    arc.phaseIndex = trace.samples[begin].phaseIndex;
    arc.center = mean + 0.5 * Vec2(solution.x(), solution.y());
    arc.radius = std::sqrt(solution.z() + 0.25 * solution.head<2>().squaredNorm());
    double swept = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      arc.residual = std::max(arc.residual, std::abs((points[i] - arc.center).norm() - arc.radius));
      if (i > 0) {
        const Vec2 a = points[i - 1] - arc.center;
        const Vec2 b = points[i] - arc.center;
        swept += std::atan2(cross2(a, b), a.dot(b));
      }
    }
    arc.angularExtent = swept;
    if (!std::isfinite(arc.radius) || arc.residual > tolerance) {
      throw ModelMismatchError("COM arc of phase " + std::to_string(arc.phaseIndex) +
                               " deviates from a circle by " + std::to_string(arc.residual));
    }
    arcs.push_back(arc);
    begin = end;
  }
  return arcs;
}

/// Region swept by the contact segments: one fan per phase, from the pivot
/// across the sampled far ends to the next pivot.
struct Footprint {
  std::vector<Polygon2> fans;
  double area() const {
    double total = 0.0;
    for (const auto& fan : fans) total += polycon::area(fan);
    return total;
  }
};

inline Footprint footprint(const RollTrace& trace) {
  Footprint result;
  const auto& samples = trace.samples;
  std::size_t begin = 0;
  while (begin < samples.size()) {
    std::size_t end = begin;
    while (end < samples.size() && samples[end].phaseNumber == samples[begin].phaseNumber) ++end;
    Polygon2 fan;
    fan.emplace_back(samples[begin].contactStart.x(), samples[begin].contactStart.y());
    for (std::size_t i = begin; i < end; ++i) fan.emplace_back(samples[i].contactEnd.x(), samples[i].contactEnd.y());
    if (end < samples.size()) fan.emplace_back(samples[end].contactStart.x(), samples[end].contactStart.y());
    if (fan.size() >= 3) result.fans.push_back(std::move(fan));
    begin = end;
  }
  return result;
}

struct TraceSummary {
  std::size_t sampleCount = 0;
  long phaseCount = 0;
  double comHeightMin = 0.0;
  double comHeightMax = 0.0;
  double topHeightMin = 0.0;
  double topHeightMax = 0.0;
  double contactMin = 0.0;
  double contactMax = 0.0;
  Vec3 displacement = Vec3::Zero();  ///< final COM minus initial COM

  double comHeightSpread() const { return comHeightMax - comHeightMin; }
  double topHeightSpread() const { return topHeightMax - topHeightMin; }
};

inline TraceSummary summarize(const RollTrace& trace) {
  if (trace.samples.empty()) throw DomainError("cannot summarize an empty trace");
  TraceSummary out;
  const auto inf = std::numeric_limits<double>::infinity();
  out.sampleCount = trace.samples.size();
  out.phaseCount = trace.samples.back().phaseNumber + 1;
  out.comHeightMin = out.topHeightMin = out.contactMin = inf;
  out.comHeightMax = out.topHeightMax = out.contactMax = -inf;
  for (const RollSample& s : trace.samples) {
    out.comHeightMin = std::min(out.comHeightMin, s.com.z());
    out.comHeightMax = std::max(out.comHeightMax, s.com.z());
    out.topHeightMin = std::min(out.topHeightMin, s.topHeight);
    out.topHeightMax = std::max(out.topHeightMax, s.topHeight);
    out.contactMin = std::min(out.contactMin, s.contactLength());
    out.contactMax = std::max(out.contactMax, s.contactLength());
  }
  out.displacement = trace.samples.back().com - trace.samples.front().com;
  return out;
}

}  // namespace polycon

#endif  // POLYCON_ROLLING_HPP
