#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "sigma/limits.hpp"
#include "sigma/raag.hpp"

namespace sigma {

// Exit code contract: 0 computed answer (including No and Unknown),
// 2 parse/validation failure, 3 precondition violation, 4 resource cap.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitResourceCap = 4;

struct CommandOutcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

// Each runner loads its inputs, computes, and returns the full JSON report
// (echoed inputs, verdict or payload, witness, timing) plus the exit code.
// Failures are reported as {"error": {...}} documents with the matching
// exit code; nothing throws across this boundary.
CommandOutcome run_fpn(const std::string& graph_path, int n, Variant variant,
                       const Limits& limits);
CommandOutcome run_raag(const std::string& graph_path,
                        const std::string& char_path, int n, Variant variant,
                        const Limits& limits);
CommandOutcome run_bb(const std::string& graph_path,
                      const std::string& char_path, int n, Variant variant,
                      const Limits& limits);
CommandOutcome run_poly(const std::string& graph_path, const Limits& limits);
CommandOutcome run_wreath(int n, int support_count);
CommandOutcome run_selftest(std::uint64_t seed, bool quick, bool inject_fault);

// Serializes with sorted keys, two-space indent and a trailing newline.
std::string report_to_string(const nlohmann::json& report);

}  // namespace sigma
