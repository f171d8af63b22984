#pragma once

// Job runner behind the rbmod executable. Each command is a thin adapter
// from JSON input to a library call and back to a JSON report.

#include "rbmod/error.hpp"
#include "rbmod/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbmod::cli {

using json::Json;

enum class Command { Verify, Classify, SolveBlock, Analyze, Catalog, OracleCompare, RbCheck, Batch };

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUndecided = 3;

int exit_code_for(ErrorKind kind);

struct JobSpec {
  Command command = Command::Verify;
  std::string input;  // path, or inline JSON when it starts with '{' or '['
  std::optional<Flavor> flavor;
  std::optional<KxVariant> variant;
  std::optional<unsigned> truncation;
  std::optional<std::string> output_path;
  Json params = Json::object();  // fields overriding the input document
};

struct JobResult {
  int exit_code = kOk;
  Json report;
};

/// RBMOD_TRUNCATION when set to a positive integer, else 12.
unsigned default_truncation();

/// Never throws; errors become a report with an "error" object.
JobResult execute(const JobSpec& job);

/// Runs the jobs concurrently; results keep input order.
std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs);

/// {"command": "...", <fields>} -> JobSpec. Throws ParseError.
JobSpec job_from_json(const Json& j);

/// execute() plus writing the report to job.output_path or `out`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace rbmod::cli
