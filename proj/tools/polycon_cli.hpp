#ifndef POLYCON_TOOLS_CLI_HPP
#define POLYCON_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "polycon/core.hpp"
#include "polycon/development.hpp"
#include "polycon/development_io.hpp"
#include "polycon/error.hpp"
#include "polycon/inscribed.hpp"
#include "polycon/mesh.hpp"
#include "polycon/mesh_io.hpp"
#include "polycon/metrics.hpp"
#include "polycon/rolling.hpp"
#include "polycon/rolling_io.hpp"

namespace polycon::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2, kInternal = 3 };

struct CliConfig {
  std::string command;
  int n = 0;
  double radius = 1.0;
  int resolution = 64;
  double stepAngle = kPi / 1800.0;
  double revolutions = 1.0;
  std::string format;
  std::string output;
  bool json = false;
};

namespace detail {

// Diagnostics go to stderr; POLYCON_LOG picks error (default), info or debug.
inline std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto log = std::make_shared<spdlog::logger>("polycon", std::make_shared<spdlog::sinks::stderr_sink_st>());
    log->set_pattern("polycon: [%l] %v");
    const char* env = std::getenv("POLYCON_LOG");
    const std::string level = env ? env : "error";
    log->set_level(level == "debug" ? spdlog::level::debug
                   : level == "info" ? spdlog::level::info
                                     : spdlog::level::err);
    return log;
  }();
  return instance;
}

inline std::string fmt15(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

class Table {
public:
  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  void add(const std::string& key, double value) { add(key, fmt15(value)); }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& row : rows_) width = std::max(width, row.first.size());
    for (const auto& row : rows_) {
      out << row.first << std::string(width - row.first.size() + 2, ' ') << row.second << "\n";
    }
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

inline void emit(std::ostream& out, const CliConfig& cfg, nlohmann::json report, const Table& table) {
  if (cfg.json) {
    report["schemaVersion"] = kTraceSchemaVersion;
    report["command"] = cfg.command;
    out << report.dump(2) << "\n";
  } else {
    table.print(out);
  }
}

inline void requireOutput(const CliConfig& cfg) {
  if (cfg.output.empty()) throw DomainError(cfg.command + " requires --output");
}

inline int runProps(const CliConfig& cfg, std::ostream& out) {
  const PolyconSpec spec(cfg.n, cfg.radius);
  const MetricReport m = metricReport(spec);
  const auto [cmin, cmax] = contactExtents(spec);
  const double e = eccentricity(spec);
  const char* conic[] = {"circle", "parabola", "hyperbola"};
  const std::string kind = conic[static_cast<int>(classify(e))];

  Table t;
  t.add("n", std::to_string(spec.n()));
  t.add("radius", spec.radius());
  t.add("eccentricity", e);
  t.add("projected_eccentricity", projectedEccentricity(spec));
  t.add("conic", kind);
  t.add("integral_closed_form", *m.integralClosed);
  t.add("integral_quadrature", m.integralQuadrature);
  t.add("integral_discrepancy", *m.discrepancy());
  t.add("volume", m.volume);
  t.add("surface_area", m.surfaceArea);
  t.add("generalized_cone_height", m.generalizedConeHeight);
  t.add("contact_length_min", cmin);
  t.add("contact_length_max", cmax);

  nlohmann::json j = {{"n", spec.n()},
                      {"radius", spec.radius()},
                      {"eccentricity", e},
                      {"projectedEccentricity", projectedEccentricity(spec)},
                      {"conic", kind},
                      {"integral", {{"closedForm", *m.integralClosed},
                                    {"quadrature", m.integralQuadrature},
                                    {"discrepancy", *m.discrepancy()}}},
                      {"volume", m.volume},
                      {"surfaceArea", m.surfaceArea},
                      {"generalizedConeHeight", m.generalizedConeHeight},
                      {"contactLength", {{"min", cmin}, {"max", cmax}}}};
  emit(out, cfg, j, t);
  return kOk;
}

inline MeshFormat meshFormat(const std::string& name) {
  if (name.empty() || name == "obj") return MeshFormat::Obj;
  if (name == "stl") return MeshFormat::StlBinary;
  throw DomainError("mesh format must be obj or stl");
}

inline int runMesh(const CliConfig& cfg, std::ostream& out) {
  const PolyconSpec spec(cfg.n, cfg.radius);
  const MeshFormat format = meshFormat(cfg.format);
  requireOutput(cfg);
  logger()->info("meshing n={} at resolution {}", cfg.n, cfg.resolution);
  const TriangleMesh mesh = assemblePolycon(spec, cfg.resolution);
  const MeshTopology topo = topology(mesh);
  const MeshIntegrals integrals = integrateMesh(mesh);
  exportMesh(mesh, format, cfg.output);
  logger()->info("wrote {}", cfg.output);

  Table t;
  t.add("vertices", std::to_string(mesh.vertices.size()));
  t.add("triangles", std::to_string(mesh.triangles.size()));
  t.add("euler_characteristic", std::to_string(topo.eulerCharacteristic()));
  t.add("watertight", topo.watertight ? "true" : "false");
  t.add("mesh_volume", integrals.volume);
  t.add("mesh_area", integrals.area);
  t.add("output", cfg.output);
  nlohmann::json j = {{"vertices", mesh.vertices.size()},
                      {"triangles", mesh.triangles.size()},
                      {"eulerCharacteristic", topo.eulerCharacteristic()},
                      {"watertight", topo.watertight},
                      {"meshVolume", integrals.volume},
                      {"meshArea", integrals.area},
                      {"output", cfg.output}};
  emit(out, cfg, j, t);
  return kOk;
}

inline int runUnroll(const CliConfig& cfg, std::ostream& out) {
  const PolyconSpec spec(cfg.n, cfg.radius);
  TemplateFormat format = TemplateFormat::Svg;
  if (cfg.format == "csv") {
    format = TemplateFormat::Csv;
  } else if (!cfg.format.empty() && cfg.format != "svg") {
    throw DomainError("unroll format must be svg or csv");
  }
  requireOutput(cfg);
  const DevelopedTemplate layout = developTemplate(spec, cfg.resolution);
  exportTemplate(layout, format, cfg.output);

  Table t;
  t.add("patches", std::to_string(layout.patches.size()));
  t.add("template_area", layout.area());
  t.add("cut_length", layout.cutLength());
  t.add("output", cfg.output);
  nlohmann::json j = {{"patches", layout.patches.size()},
                      {"templateArea", layout.area()},
                      {"cutLength", layout.cutLength()},
                      {"output", cfg.output}};
  emit(out, cfg, j, t);
  return kOk;
}

inline int runRoll(const CliConfig& cfg, std::ostream& out) {
  const PolyconSpec spec(cfg.n, cfg.radius);
  TraceFormat format = TraceFormat::Csv;
  if (cfg.format == "json") {
    format = TraceFormat::Json;
  } else if (!cfg.format.empty() && cfg.format != "csv") {
    throw DomainError("roll format must be csv or json");
  }
  logger()->info("rolling n={} step {} for {} revolutions", cfg.n, cfg.stepAngle, cfg.revolutions);
  const RollTrace trace = simulateRoll(spec, cfg.stepAngle, cfg.revolutions);
  const TraceSummary s = summarize(trace);
  if (!cfg.output.empty()) exportTrace(trace, format, cfg.output);

  Table t;
  t.add("samples", std::to_string(s.sampleCount));
  t.add("phases", std::to_string(s.phaseCount));
  t.add("steps_per_phase", std::to_string(trace.stepsPerPhase));
  t.add("applied_step_angle", trace.appliedStepAngle);
  t.add("com_height_min", s.comHeightMin);
  t.add("com_height_max", s.comHeightMax);
  t.add("top_height_min", s.topHeightMin);
  t.add("top_height_max", s.topHeightMax);
  t.add("contact_length_min", s.contactMin);
  t.add("contact_length_max", s.contactMax);
  t.add("displacement_x", s.displacement.x());
  t.add("displacement_y", s.displacement.y());
  if (!cfg.output.empty()) t.add("output", cfg.output);
  nlohmann::json j = {{"samples", s.sampleCount},
                      {"phases", s.phaseCount},
                      {"stepsPerPhase", trace.stepsPerPhase},
                      {"appliedStepAngle", trace.appliedStepAngle},
                      {"comHeight", {{"min", s.comHeightMin}, {"max", s.comHeightMax}}},
                      {"topHeight", {{"min", s.topHeightMin}, {"max", s.topHeightMax}}},
                      {"contactLength", {{"min", s.contactMin}, {"max", s.contactMax}}},
                      {"displacement", {s.displacement.x(), s.displacement.y()}}};
  if (!cfg.output.empty()) j["output"] = cfg.output;
  emit(out, cfg, j, t);
  return kOk;
}

inline int runInscribe(const CliConfig& cfg, std::ostream& out) {
  const PolyconSpec spec(cfg.n, cfg.radius);
  const AntiprismSolid solid = inscribeAntiprism(spec);
  if (!cfg.output.empty()) exportMesh(antiprismMesh(solid), meshFormat(cfg.format), cfg.output);

  Table t;
  t.add("n", std::to_string(solid.n));
  t.add("cos_theta", solid.cosTheta);
  t.add("theta", solid.theta);
  t.add("face_circumradius", solid.b);
  t.add("edge_length", solid.a);
  t.add("face_separation", solid.height);
  if (!cfg.output.empty()) t.add("output", cfg.output);
  nlohmann::json vertices = nlohmann::json::array();
  for (const Vec3& v : solid.vertices) vertices.push_back({v.x(), v.y(), v.z()});
  nlohmann::json j = {{"n", solid.n},
                      {"cosTheta", solid.cosTheta},
                      {"theta", solid.theta},
                      {"faceCircumradius", solid.b},
                      {"edgeLength", solid.a},
                      {"faceSeparation", solid.height},
                      {"vertices", vertices}};
  if (!cfg.output.empty()) j["output"] = cfg.output;
  emit(out, cfg, j, t);
  return kOk;
}

}  // namespace detail

/// Parses args (program name excluded) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Polycon geometry: properties, meshes, templates, rolling, inscribed antiprisms", "polycon"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    bool mesh, roll, output, format;
  };
  const Command commands[] = {
      {"props", "metric properties", false, false, false, false},
      {"mesh", "triangle mesh export (obj, stl)", true, false, true, true},
      {"unroll", "developed surface template (svg, csv)", true, false, true, true},
      {"roll", "no-slip rolling trace (csv, json)", false, true, true, true},
      {"inscribe", "inscribed uniform antiprism (obj, stl)", false, false, true, true},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--n", cfg.n, "polycon index, n >= 2")->required();
    sub->add_option("--radius", cfg.radius, "cone base radius")->capture_default_str();
    if (c.mesh) {
      sub->add_option("--resolution", cfg.resolution, "mesh resolution / arc samples")->capture_default_str();
    }
    if (c.roll) {
      sub->add_option("--step-angle", cfg.stepAngle, "rotation per sample, radians")->capture_default_str();
      sub->add_option("--revolutions", cfg.revolutions, "revolutions to roll")->capture_default_str();
    }
    if (c.format) sub->add_option("--format", cfg.format, "output format");
    if (c.output) sub->add_option("--output", cfg.output, "output path");
    sub->add_flag("--json", cfg.json, "print the report as JSON");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kValidation;
  }
  for (const CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    if (cfg.command == "props") return detail::runProps(cfg, out);
    if (cfg.command == "mesh") return detail::runMesh(cfg, out);
    if (cfg.command == "unroll") return detail::runUnroll(cfg, out);
    if (cfg.command == "roll") return detail::runRoll(cfg, out);
    return detail::runInscribe(cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const UnsupportedMethodError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    detail::logger()->error("invariant violated: {}", e.what());
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace polycon::cli

#endif  // POLYCON_TOOLS_CLI_HPP
