#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "sfs/classifier.hpp"
#include "sfs/pretzel.hpp"

namespace sfs {

using Json = nlohmann::ordered_json;

Json to_json(const StandardForm& s);
Json to_json(const AbelianGroup& g);
/// Fiber indices are reported 1-based.
Json to_json(const Partition& p);
Json to_json(const Certificate& c);
Json to_json(const Verdict& v);

struct CommandOptions {
  std::uint64_t node_budget = 20'000'000;
  std::size_t max_k = 14;
  std::size_t max_results = 0;
  std::size_t ambient = 0;
  bool structure = true;
};

enum class ExitCode { Ok = 0, UsageError = 1, BudgetExceeded = 2 };

struct CommandResult {
  Json json;
  ExitCode code = ExitCode::Ok;
};

/// One input line through one subcommand. Parse errors and unsupported
/// inputs come back as {"input", "error"} with UsageError.
CommandResult run_command(const std::string& command, const std::string& line, const CommandOptions& opts);

bool is_command(const std::string& command);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json& j);

}  // namespace sfs
