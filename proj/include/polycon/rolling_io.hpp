#ifndef POLYCON_ROLLING_IO_HPP
#define POLYCON_ROLLING_IO_HPP

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "polycon/error.hpp"
#include "polycon/rolling.hpp"

namespace polycon {

enum class TraceFormat { Csv, Json };

inline constexpr int kTraceSchemaVersion = 1;

/// Pose as 12 numbers, the 3x4 matrix [R | t] in row-major order.
inline std::array<double, 12> poseRowMajor(const Transform& pose) {
  std::array<double, 12> out{};
  const auto m = pose.matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(4 * r + c)] = m(r, c);
  }
  return out;
}

inline std::string traceCsvHeader() {
  std::string header = "sampleIndex,phaseIndex,comX,comY,comZ,topHeight,contactLen";
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) header += ",m" + std::to_string(r) + std::to_string(c);
  }
  return header;
}

inline std::string toCsv(const RollTrace& trace) {
  std::string csv = traceCsvHeader() + "\n";
  char buf[64];
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const RollSample& s = trace.samples[i];
    csv += std::to_string(i) + "," + std::to_string(s.phaseIndex);
    for (double v : {s.com.x(), s.com.y(), s.com.z(), s.topHeight, s.contactLength()}) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      csv += buf;
    }
    for (double v : poseRowMajor(s.pose)) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      csv += buf;
    }
    csv += "\n";
  }
  return csv;
}

inline nlohmann::json toJson(const RollTrace& trace) {
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    const RollSample& s = trace.samples[i];
    samples.push_back({{"sampleIndex", i},
                       {"phaseIndex", s.phaseIndex},
                       {"comX", s.com.x()},
                       {"comY", s.com.y()},
                       {"comZ", s.com.z()},
                       {"topHeight", s.topHeight},
                       {"contactLen", s.contactLength()},
                       {"pose", poseRowMajor(s.pose)}});
  }
  return {{"schemaVersion", kTraceSchemaVersion},
          {"n", trace.n},
          {"radius", trace.radius},
          {"revolutions", trace.revolutions},
          {"stepAngle", trace.stepAngle},
          {"appliedStepAngle", trace.appliedStepAngle},
          {"stepsPerPhase", trace.stepsPerPhase},
          {"samples", std::move(samples)}};
}

inline void exportTrace(const RollTrace& trace, TraceFormat format, const std::filesystem::path& path) {
  if (trace.samples.empty()) throw IntegrityError("refusing to export an empty trace");
  const std::string text = format == TraceFormat::Csv ? toCsv(trace) : toJson(trace).dump(1) + "\n";
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace polycon

#endif  // POLYCON_ROLLING_IO_HPP
