#include "sigma/report.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "sigma/bb.hpp"
#include "sigma/character.hpp"
#include "sigma/errors.hpp"
#include "sigma/graph.hpp"
#include "sigma/homology.hpp"
#include "sigma/polyhedron.hpp"
#include "sigma/suites.hpp"

namespace sigma {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(ParseError::Kind::malformed, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string parse_kind_to_string(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::malformed: return "malformed";
    case ParseError::Kind::duplicate_vertex: return "duplicate-vertex";
    case ParseError::Kind::unknown_vertex: return "unknown-vertex";
    case ParseError::Kind::self_loop: return "self-loop";
    case ParseError::Kind::duplicate_edge: return "duplicate-edge";
    case ParseError::Kind::bad_rational: return "bad-rational";
    case ParseError::Kind::missing_weight: return "missing-weight";
  }
  return "malformed";
}

json graph_json(const Graph& g) {
  json vertices = json::array();
  for (const auto& name : g.names()) vertices.push_back(name);
  json edges = json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back(json::array({g.name(u), g.name(v)}));
  return json{{"vertices", vertices}, {"edges", edges}};
}

json limits_json(const Limits& limits) {
  return json{{"max_simplices", limits.max_simplices},
              {"tietze_budget", limits.tietze_budget},
              {"bad_set_vertex_cap", limits.bad_set_vertex_cap}};
}

json homology_json(const HomologyGroup& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  return json{{"free_rank", h.free_rank},
              {"torsion", torsion},
              {"pretty", homology_to_string(h)}};
}

void merge_verdict(json& report, const Verdict& v, const Graph& g) {
  report["verdict"] = tri_to_string(v.value);
  if (!v.reason.empty()) report["reason"] = v.reason;
  if (!v.notes.empty()) report["notes"] = v.notes;
  if (v.witness) {
    json w;
    json names = json::array();
    for (const int u : v.witness->sigma.verts) names.push_back(g.name(u));
    w["dead_simplex"] = names;
    w["required_level"] = v.witness->required_level;
    w["failing_degree"] = v.witness->failing_index;
    if (!v.witness->reason.empty()) w["reason"] = v.witness->reason;
    if (v.witness->homology) w["homology"] = homology_json(*v.witness->homology);
    if (v.critical_t) w["critical_t"] = format_rational(*v.critical_t);
    report["witness"] = w;
  } else if (v.critical_t) {
    report["critical_t"] = format_rational(*v.critical_t);
  }
}

// Runs fill under the exit-code contract; fill returns the success exit
// code (selftest uses 1 to flag suite failures without an error document).
CommandOutcome run_command(const std::string& command,
                           const std::function<int(json&)>& fill) {
  const auto start = Clock::now();
  CommandOutcome out;
  out.report["command"] = command;
  try {
    out.exit_code = fill(out.report);
  } catch (const ParseError& e) {
    out.report["error"] = {{"type", "parse"},
                           {"kind", parse_kind_to_string(e.kind())},
                           {"message", e.what()}};
    out.exit_code = kExitInvalid;
  } catch (const ValidationError& e) {
    out.report["error"] = {{"type", "validation"}, {"message", e.what()}};
    out.exit_code = kExitInvalid;
  } catch (const PreconditionError& e) {
    out.report["error"] = {{"type", "precondition"}, {"message", e.what()}};
    out.exit_code = kExitPrecondition;
  } catch (const ResourceCapError& e) {
    out.report["error"] = {{"type", "resource-cap"}, {"message", e.what()}};
    out.exit_code = kExitResourceCap;
  } catch (const std::exception& e) {
    out.report["error"] = {{"type", "internal"}, {"message", e.what()}};
    out.exit_code = 1;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out.report["timing_ms"] = std::llround(ms);
  return out;
}

}  // namespace

CommandOutcome run_fpn(const std::string& graph_path, int n, Variant variant,
                       const Limits& limits) {
  return run_command("fpn", [&](json& report) {
    const Graph g = parse_graph(read_file(graph_path));
    report["inputs"] = {{"graph_file", graph_path},
                        {"graph", graph_json(g)},
                        {"n", n},
                        {"variant", variant_to_string(variant)},
                        {"limits", limits_json(limits)}};
    const TriState fin = bb_finiteness(g, n, variant, limits);
    report["property"] = (variant == Variant::homological ? "FP_" : "F_") +
                         std::to_string(n);
    report["verdict"] = tri_to_string(fin.value);
    if (!fin.reason.empty()) report["reason"] = fin.reason;
    return kExitOk;
  });
}

CommandOutcome run_raag(const std::string& graph_path,
                        const std::string& char_path, int n, Variant variant,
                        const Limits& limits) {
  return run_command("raag", [&](json& report) {
    const Graph g = parse_graph(read_file(graph_path));
    const RaagCharacter mu = parse_raag_character(g, read_file(char_path));
    json weights;
    for (int v = 0; v < g.vertex_count(); ++v)
      weights[g.name(v)] = format_rational(mu.weight(v));
    report["inputs"] = {{"graph_file", graph_path},
                        {"char_file", char_path},
                        {"graph", graph_json(g)},
                        {"character", weights},
                        {"n", n},
                        {"variant", variant_to_string(variant)},
                        {"limits", limits_json(limits)}};
    merge_verdict(report, raag_sigma(g, mu, n, variant, limits), g);
    return kExitOk;
  });
}

CommandOutcome run_bb(const std::string& graph_path,
                      const std::string& char_path, int n, Variant variant,
                      const Limits& limits) {
  return run_command("bb", [&](json& report) {
    const Graph g = parse_graph(read_file(graph_path));
    const BBCharacter chi = parse_bb_character(g, read_file(char_path));
    json weights;
    for (int v = 0; v < g.vertex_count(); ++v)
      weights[g.name(v)] = format_rational(chi.weight(v));
    report["inputs"] = {{"graph_file", graph_path},
                        {"char_file", char_path},
                        {"graph", graph_json(g)},
                        {"character_canonical", weights},
                        {"n", n},
                        {"variant", variant_to_string(variant)},
                        {"limits", limits_json(limits)}};
    merge_verdict(report, bb_sigma(g, chi, n, variant, limits), g);
    return kExitOk;
  });
}

CommandOutcome run_poly(const std::string& graph_path, const Limits& limits) {
  return run_command("poly", [&](json& report) {
    const Graph g = parse_graph(read_file(graph_path));
    report["inputs"] = {{"graph_file", graph_path},
                        {"graph", graph_json(g)},
                        {"limits", limits_json(limits)}};
    const SpherePolyhedron p = sigma1_complement(g, limits);
    json result = polyhedron_to_json(p, g);
    result["system_count"] = p.systems.size();
    report["result"] = result;
    return kExitOk;
  });
}

CommandOutcome run_wreath(int n, int support_count) {
  return run_command("wreath", [&](json& report) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (support_count < 0)
      throw ValidationError("support count must be nonnegative");
    report["inputs"] = {{"n", n}, {"support_count", support_count}};
    const bool sufficient = wreath_sufficient(n, support_count);
    report["result"] = {
        {"sufficient", sufficient},
        {"value", sufficient ? "yes" : "unknown"},
        {"reason",
         sufficient
             ? "the character is nonzero on at least n+1 coordinate subgroups"
             : "the sufficient condition does not apply; no conclusion"}};
    if (support_count == 0)
      report["result"]["note"] =
          "empty support is the complementary regime; this test never "
          "certifies it";
    return kExitOk;
  });
}

CommandOutcome run_selftest(std::uint64_t seed, bool quick, bool inject_fault) {
  return run_command("selftest", [&](json& report) {
    report["inputs"] = {{"seed", seed}, {"quick", quick}};
    const auto suites = run_selftest_suites(seed, quick, inject_fault);
    json rows = json::array();
    long long checks = 0, failures = 0;
    for (const auto& s : suites) {
      json row = {{"name", s.name},
                  {"checks", s.checks},
                  {"failures", s.failures},
                  {"passed", s.passed()}};
      if (!s.first_failure.empty()) row["first_failure"] = s.first_failure;
      rows.push_back(row);
      checks += s.checks;
      failures += s.failures;
    }
    report["result"] = {{"suites", rows},
                        {"checks", checks},
                        {"failures", failures},
                        {"passed", failures == 0}};
    return failures == 0 ? kExitOk : 1;
  });
}

std::string report_to_string(const nlohmann::json& report) {
  return report.dump(2) + "\n";
}

}  // namespace sigma
