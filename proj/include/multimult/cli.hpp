#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "multimult/error.hpp"
#include "multimult/input.hpp"

namespace multimult {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "multimult/1";

struct CommandFlags {
  std::optional<MultiDegree> type;
  /// delta, filter, chi, symbol or all.
  std::string method = "all";
  std::optional<std::string> sequence;
  std::optional<MultiDegree> degree;
  bool stabilize = false;
  std::optional<int> k0;
  bool verify = false;
  /// Overrides the document's seed.
  std::optional<std::uint64_t> seed;
};

struct CommandOutcome {
  int exit_code = 0;
  Json report;
};

/// 0 success, 1 computation error, 2 NOT_DEFINED or empty result, 3 MISMATCH.
int exit_code_for(ErrorCode code);

/// Runs one of hilbert, mixed, koszul, sequence-check, ideal, verify. Errors
/// are caught and reported in `diagnostics`; nothing is thrown for them.
CommandOutcome run_command(const std::string& command, const InputDocument& doc, const CommandFlags& flags);

/// Report for a failure before any command ran (unreadable or bad input).
CommandOutcome error_outcome(const std::string& command, const Error& error);

/// Plain text rendering of a report.
std::string render_text(const Json& report);

}  // namespace multimult
