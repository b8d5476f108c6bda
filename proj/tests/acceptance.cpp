// Acceptance suite: one PASS/FAIL line per criterion, with the measured
// worst-case figure and wall time. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "polycon/development.hpp"
#include "polycon/inscribed.hpp"
#include "polycon/mesh.hpp"
#include "polycon/metrics.hpp"
#include "polycon/rolling.hpp"

using namespace polycon;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [fail: " << what << "]";
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double relative(double value, double reference) { return std::abs(value / reference - 1.0); }

int failures = 0;

void criterion(const char* id, const char* title, double budgetSeconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail << " [exception: " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.require(seconds < budgetSeconds, "runtime over " + std::to_string(budgetSeconds) + " s");
  std::printf("%s %s  %s  (%.2f s)%s\n", id, check.ok ? "PASS" : "FAIL", title, seconds, check.detail.str().c_str());
  std::fflush(stdout);
  if (!check.ok) ++failures;
}

void specialValues(Check& c) {
  const PolyconSpec two(2, 1.0), three(3, 1.0);
  const double i2 = std::abs(integralIn(two, IntegralMethod::Quadrature) - kPi);
  const double i3 = std::abs(integralIn(three, IntegralMethod::Quadrature) - 4.0 / 3.0);
  c.require(i2 <= 1e-12, "I_2 quadrature");
  c.require(i3 <= 1e-12, "I_3 quadrature");
  const double worst = std::max({relative(volume(two), 2 * kPi / 3), relative(volume(three), 4 / (3 * std::sqrt(3.0))),
                                 relative(surfaceArea(two), 2 * std::sqrt(2.0) * kPi),
                                 relative(surfaceArea(three), 8 / std::sqrt(3.0))});
  c.require(worst <= 1e-12, "volume/area relative error");
  c.detail << " |I2-pi|=" << sci(i2) << " |I3-4/3|=" << sci(i3) << " worst rel=" << sci(worst);
}

void closedFormIntegral(Check& c) {
  double worst = 0.0;
  for (int n = 4; n <= 32; ++n) {
    const PolyconSpec spec(n, 1.0);
    const double gap =
        std::abs(integralIn(spec, IntegralMethod::ClosedForm) - integralIn(spec, IntegralMethod::Quadrature));
    c.require(gap <= 1e-10, "n=" + std::to_string(n));
    worst = std::max(worst, gap);
  }
  c.detail << " max |closed-quadrature|=" << sci(worst);
}

void meshOracle(Check& c) {
  for (int n : {2, 3, 4, 6}) {
    const PolyconSpec spec(n, 1.0);
    std::vector<double> volErr, areaErr;
    for (int m : {64, 128, 256}) {
      const MeshIntegrals integrals = integrateMesh(assemblePolycon(spec, m));
      volErr.push_back(std::abs(integrals.volume - volume(spec)));
      areaErr.push_back(std::abs(integrals.area - surfaceArea(spec)));
    }
    const double relVol = volErr.back() / volume(spec);
    const double relArea = areaErr.back() / surfaceArea(spec);
    const double orderVol = std::min(std::log2(volErr[0] / volErr[1]), std::log2(volErr[1] / volErr[2]));
    const double orderArea = std::min(std::log2(areaErr[0] / areaErr[1]), std::log2(areaErr[1] / areaErr[2]));
    c.require(relVol < 5e-3 && relArea < 5e-3, "n=" + std::to_string(n) + " accuracy");
    c.require(orderVol >= 1.9 && orderArea >= 1.9, "n=" + std::to_string(n) + " order");
    c.detail << " n=" << n << ":vol " << sci(relVol) << "/p" << std::fixed << std::setprecision(2) << orderVol << " area "
             << sci(relArea) << "/p" << orderArea;
  }
}

void rollingInvariants(Check& c) {
  const double step = kPi / 7200.0;
  double comWorst = 0.0, oddWorst = 0.0, evenLeast = 1e9, extentWorst = 0.0, sphericonWorst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const PolyconSpec spec(n, 1.0);
    const RollTrace trace = simulateRoll(spec, step, 1.0);
    const TraceSummary s = summarize(trace);
    comWorst = std::max(comWorst, s.comHeightSpread());
    c.require(s.comHeightSpread() < 1e-7, "COM spread n=" + std::to_string(n));
    if (n % 2 == 1) {
      oddWorst = std::max(oddWorst, s.topHeightSpread());
      c.require(s.topHeightSpread() < 1e-6, "top spread n=" + std::to_string(n));
    } else if (n == 4 || n == 6) {
      evenLeast = std::min(evenLeast, s.topHeightSpread());
      c.require(s.topHeightSpread() > 1e-3, "top spread n=" + std::to_string(n));
    }
    const double sec = 1.0 / std::cos(kPi / (2 * n));
    const double sin = std::sin(kPi / (2 * n));
    const double lo = 2.0 * sec * sin * sin, hi = sec;
    const double ext = std::max(std::abs(s.contactMin - lo), std::abs(s.contactMax - hi));
    extentWorst = std::max(extentWorst, ext);
    c.require(ext < 1e-4, "contact extents n=" + std::to_string(n));
    if (n == 2) {
      sphericonWorst = std::max(std::abs(s.contactMin - std::sqrt(2.0)), std::abs(s.contactMax - std::sqrt(2.0)));
      c.require(sphericonWorst < 1e-6, "n=2 contact constant");
    }
  }
  c.detail << " COM spread " << sci(comWorst) << ", odd top spread " << sci(oddWorst) << ", n=4/6 top spread >= "
           << sci(evenLeast) << ", extents " << sci(extentWorst) << ", n=2 contact " << sci(sphericonWorst);
}

void footprintCrossCheck(Check& c) {
  for (int n : {2, 3}) {
    const PolyconSpec spec(n, 1.0);
    const RollTrace trace = simulateRoll(spec, kPi / 7200.0, 1.0);
    const Footprint fp = footprint(trace);
    const DevelopedTemplate layout = developTemplate(spec, 512);
    const Rigid2 motion =
        alignSegments(layout.patches[0].apex(), layout.patches[0].arcStart(), fp.fans[0][0], fp.fans[0][1]);
    std::vector<Polygon2> placed;
    for (const auto& patch : layout.patches) placed.push_back(motion.apply(patch.boundary));
    const double h = hausdorffDistance(placed, fp.fans);
    const double areaGap = relative(fp.area(), surfaceArea(spec));
    c.require(h < 1e-2, "Hausdorff n=" + std::to_string(n));
    c.require(areaGap < 5e-3, "area n=" + std::to_string(n));
    c.detail << " n=" << n << ": Hausdorff " << sci(h) << " area rel " << sci(areaGap);
  }
}

void inscribedSolids(Check& c) {
  const double tet = relative(inscribeAntiprism(PolyconSpec(2, 1.0)).a, 2 * std::sqrt(2.0) / std::sqrt(3.0));
  const double oct = relative(inscribeAntiprism(PolyconSpec(3, 1.0)).a, std::sqrt(15.0) - 3.0);
  c.require(tet < 1e-12, "tetrahedron edge");
  c.require(oct < 1e-12, "octahedron edge");
  double onEdge = 0.0, equilateral = 0.0, search = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const PolyconSpec spec(n, 1.0);
    const AntiprismSolid s = inscribeAntiprism(spec);
    for (const Vec3& v : s.vertices) onEdge = std::max(onEdge, distanceToConicEdges(spec, v));
    for (int k = 0; k < n; ++k) {
      for (double len : {(s.upper(k) - s.lower(k)).norm(), (s.lower(k) - s.upper(k + 1)).norm()}) {
        equilateral = std::max(equilateral, std::abs(len - s.a));
      }
      if (n > 2) equilateral = std::max(equilateral, std::abs((s.upper(k + 1) - s.upper(k)).norm() - s.a));
    }
    // Independent search: bisect lateral minus side over theta.
    auto gap = [&](double theta) {
      const auto v = antiprismVertices(spec, theta);
      return (v[static_cast<std::size_t>(n)] - v[0]).norm() - (v[1] - v[0]).norm();
    };
    double lo = 1e-6, hi = kPi / 2 - 1e-6;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      ((gap(mid) > 0) == (gap(lo) > 0) ? lo : hi) = mid;
    }
    search = std::max(search, std::abs(std::cos(0.5 * (lo + hi)) - s.cosTheta));
  }
  c.require(onEdge < 1e-9, "vertices on edges");
  c.require(equilateral < 1e-9, "equilateral faces");
  c.require(search < 1e-8, "brute-force theta");
  c.detail << " tet " << sci(tet) << " oct " << sci(oct) << " on-edge " << sci(onEdge) << " equilateral "
           << sci(equilateral) << " search " << sci(search);
}

void propertySuites(Check& c) {
  c.require(classify(eccentricity(PolyconSpec(2, 1.0))) == ConicClass::Circle, "n=2 circle");
  c.require(classify(eccentricity(PolyconSpec(3, 1.0))) == ConicClass::Parabola, "n=3 parabola");
  for (int n = 4; n <= 64; ++n) {
    const PolyconSpec spec(n, 1.0);
    c.require(eccentricity(spec) > 1.0 && projectedEccentricity(spec) > 1.0, "n>3 hyperbola");
  }
  double scaling = 0.0;
  for (double lambda : {0.5, 2.0, 10.0}) {
    for (int n = 2; n <= 8; ++n) {
      scaling = std::max(scaling, relative(volume(PolyconSpec(n, lambda)), std::pow(lambda, 3) * volume(PolyconSpec(n, 1.0))));
      scaling = std::max(scaling, relative(surfaceArea(PolyconSpec(n, lambda)), lambda * lambda * surfaceArea(PolyconSpec(n, 1.0))));
    }
  }
  c.require(scaling < 1e-12, "scaling");
  for (int n = 2; n <= 12; ++n) {
    for (int m : {16, 64}) {
      const MeshTopology t = topology(assemblePolycon(PolyconSpec(n, 1.0), m));
      c.require(t.watertight && t.consistentlyOriented && t.eulerCharacteristic() == 2,
                "mesh topology n=" + std::to_string(n));
    }
  }
  double plane = 0.0;
  for (int n = 2; n <= 12; ++n) {
    const PolyconSpec spec(n, 1.0);
    for (const ConicEdge& edge : conicEdges(spec)) {
      for (int i = 0; i < 1000; ++i) {
        const Vec3 p = edge.frame.linear().transpose() * edgePoint(spec, edge, -kPi / 2 + kPi * (i + 0.5) / 1000);
        plane = std::max(plane, std::abs(p.z() - p.x() * spec.cotStep()));
      }
    }
  }
  c.require(plane < 1e-12, "edge on cutting plane");
  c.detail << " scaling rel " << sci(scaling) << " plane residual " << sci(plane);
}

}  // namespace

int main() {
  criterion("AC1", "special exact values", 1.0, specialValues);
  criterion("AC2", "closed-form integral vs quadrature, n=4..32", 5.0, closedFormIntegral);
  criterion("AC3", "mesh volume/area oracle and convergence order", 30.0, meshOracle);
  criterion("AC4", "rolling invariants over one revolution", 60.0, rollingInvariants);
  criterion("AC5", "footprint vs developed template", 30.0, footprintCrossCheck);
  criterion("AC6", "inscribed antiprisms", 5.0, inscribedSolids);
  criterion("AC7", "property suites", 180.0, propertySuites);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures;
}
