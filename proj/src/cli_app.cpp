#include "superteich/cli_app.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superteich/io.hpp"

namespace superteich {

using nlohmann::json;

namespace {

struct SessionConfig {
  std::string surface_path;
  std::string coords_path;
  double tolerance = 1e-9;
  long seed = 0;  // reserved for randomized property runs; no hidden entropy
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, SessionConfig& cfg, bool coords_required = true) {
  cmd->add_option("--surface", cfg.surface_path, "surface JSON file")->required();
  auto* c = cmd->add_option("--coords", cfg.coords_path, "coordinates JSON file");
  if (coords_required) c->required();
  cmd->add_option("--tolerance", cfg.tolerance, "comparison tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for randomized runs");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", cfg.out_path, "output file path");
}

int cmd_validate(const SessionConfig& cfg, std::ostream& out) {
  SurfaceData sd = load_surface(cfg.surface_path);
  ValidationReport rep = validate(sd.triangulation);
  json j;
  j["ok"] = rep.ok;
  j["edges"] = rep.edge_count;
  j["triangles"] = rep.triangle_count;
  j["fan_lengths"] = rep.fan_lengths;
  j["problems"] = rep.problems;
  double worst_chi = 0.0;
  if (rep.ok && !cfg.coords_path.empty()) {
    DecoratedCoords coords = load_coords(cfg.coords_path, sd.triangulation);
    json residuals;
    for (int p = 0; p < sd.triangulation.punctures(); ++p) {
      FanData fd = fan_data(sd.triangulation, coords, puncture_fan(sd.triangulation, p),
                            sd.orientation);
      double res = max_abs_diff(cross_ratio_product(fd),
                                GrassmannNumber::scalar(coords.num_generators, 1.0));
      residuals[std::to_string(p)] = res;
      worst_chi = std::max(worst_chi, res);
    }
    j["cross_ratio_product_residuals"] = residuals;
    if (worst_chi > cfg.tolerance) {
      j["ok"] = false;
      j["problems"].push_back("cross-ratio product residual above tolerance");
    }
  }
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << (j["ok"].get<bool>() ? "ok" : "INVALID") << ": " << rep.edge_count << " edges, "
        << rep.triangle_count << " triangles";
    out << ", fans:";
    for (int len : rep.fan_lengths) out << " " << len;
    if (!cfg.coords_path.empty()) out << ", worst cross-ratio residual " << worst_chi;
    out << "\n";
    for (const auto& p : rep.problems) out << "problem: " << p << "\n";
  }
  return j["ok"].get<bool>() ? 0 : 1;
}

int cmd_flip(const SessionConfig& cfg, const std::vector<int>& edges, std::ostream& out) {
  SurfaceData sd = load_surface(cfg.surface_path);
  DecoratedCoords coords = load_coords(cfg.coords_path, sd.triangulation);
  Triangulation tri = sd.triangulation;
  Orientation o = sd.orientation;
  json log = json::array();
  for (int e : edges) {
    DecoratedFlipResult r = flip_decorated(tri, o, coords, e);
    json entry;
    entry["edge"] = e;
    entry["f"] = r.delta.f.str();
    entry["mu"] = r.delta.mu.str();
    entry["nu"] = r.delta.nu.str();
    log.push_back(entry);
    tri = std::move(r.triangulation);
    o = std::move(r.orientation);
    coords = std::move(r.coords);
  }
  json doc;
  doc["version"] = kFileVersion;
  doc["surface"] = surface_to_json(tri, o);
  doc["coords"] = coords_to_json(coords);
  doc["log"] = log;
  if (!cfg.out_path.empty())
    write_file_atomic(cfg.out_path, doc.dump(2) + "\n");
  if (cfg.format == "json")
    out << log.dump(2) << "\n";
  else
    for (const auto& entry : log)
      out << "flip " << entry["edge"] << ": f = " << entry["f"].get<std::string>()
          << ", mu = " << entry["mu"].get<std::string>()
          << ", nu = " << entry["nu"].get<std::string>() << "\n";
  return 0;
}

int cmd_monodromy(const SessionConfig& cfg, const std::string& selector, std::ostream& out) {
  SurfaceData sd = load_surface(cfg.surface_path);
  DecoratedCoords coords = load_coords(cfg.coords_path, sd.triangulation);
  std::vector<int> punctures;
  if (selector == "all") {
    for (int p = 0; p < sd.triangulation.punctures(); ++p) punctures.push_back(p);
  } else {
    int p = std::stoi(selector);
    if (p < 0 || p >= sd.triangulation.punctures())
      throw std::domain_error("no such puncture: " + selector);
    punctures.push_back(p);
  }
  json reports = json::array();
  bool agree = true;
  for (int p : punctures) {
    MonodromyReport r = puncture_monodromy(sd.triangulation, coords, sd.orientation, p,
                                           cfg.tolerance);
    json rj = monodromy_report_to_json(r);
    FanData fd = fan_data(sd.triangulation, coords, puncture_fan(sd.triangulation, p),
                          sd.orientation);
    rj["constraint_equation"] = constraint_equation_text(fd);
    reports.push_back(rj);
    if (r.closed_vs_product_residual > cfg.tolerance) agree = false;
  }
  json doc;
  doc["version"] = kFileVersion;
  doc["punctures"] = reports;
  if (!cfg.out_path.empty()) write_file_atomic(cfg.out_path, doc.dump(2) + "\n");
  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& rj : reports)
      out << "puncture " << rj["puncture"] << ": " << rj["type"].get<std::string>()
          << ", n = " << rj["n"] << ", star0 = " << rj["star0"]
          << ", constraint residual = " << rj["constraint_residual"]
          << ", closed-vs-product = " << rj["closed_vs_product_residual"] << "\n";
  }
  if (!agree) throw std::domain_error("closed form and matrix product disagree above tolerance");
  return 0;
}

int cmd_constrain(const SessionConfig& cfg, std::ostream& out) {
  SurfaceData sd = load_surface(cfg.surface_path);
  DecoratedCoords coords = load_coords(cfg.coords_path, sd.triangulation);
  ImposeResult r = impose_constraints(sd.triangulation, coords, sd.orientation, cfg.tolerance);
  json rep = constraint_report_to_json(r.report);
  if (!cfg.out_path.empty())
    write_file_atomic(cfg.out_path, coords_to_json(r.coords).dump(2) + "\n");
  if (cfg.format == "json") {
    out << rep.dump(2) << "\n";
  } else {
    out << "rank " << r.report.rank << ", n_R = " << r.report.n_ramond
        << ", n_NS = " << r.report.n_ns << ", free odd dims = " << r.report.free_odd_dims
        << " (4g-4+2n_NS+n_R = " << r.report.expected_odd_dims << ")\n";
    for (const auto& note : r.report.notes) out << "note: " << note << "\n";
  }
  if (!r.report.ok) throw std::domain_error("constraint imposition failed; see notes");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"decorated super Teichmueller space toolkit"};
  app.require_subcommand(1);

  SessionConfig cfg;
  std::vector<int> flip_edges;
  std::string selector = "all";

  CLI::App* validate_cmd = app.add_subcommand("validate", "check surface and coordinate invariants");
  add_common(validate_cmd, cfg, false);
  CLI::App* flip_cmd = app.add_subcommand("flip", "apply a sequence of generic flips");
  add_common(flip_cmd, cfg);
  flip_cmd->add_option("--edges", flip_edges, "edge ids to flip, in order")->required();
  CLI::App* mono_cmd = app.add_subcommand("monodromy", "puncture monodromy reports");
  add_common(mono_cmd, cfg);
  mono_cmd->add_option("--puncture", selector, "puncture id or 'all'");
  CLI::App* constrain_cmd = app.add_subcommand("constrain", "impose the Ramond constraints");
  add_common(constrain_cmd, cfg);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, out);
    if (flip_cmd->parsed()) return cmd_flip(cfg, flip_edges, out);
    if (mono_cmd->parsed()) return cmd_monodromy(cfg, selector, out);
    if (constrain_cmd->parsed()) return cmd_constrain(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;  // I/O or parse failure
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;  // domain or invariant failure
  }
  return 2;
}

}  // namespace superteich
