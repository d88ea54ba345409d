#pragma once

#include <optional>
#include <string>

#include "betajacobi/config.hpp"

namespace betajacobi::app {

enum class Format { json, csv, text };

struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::string alpha = "0";
  std::string beta = "0";
  std::optional<std::string> x;
  std::optional<std::string> z;
  std::string method;
  int kmax = 5;
  int terms = 3;
  int digits = kDefaultWorkingDigits;
  Format format = Format::json;
  bool compare_oracle = false;
  std::string argument_scaling = "beta";
  std::optional<std::string> table;  // reproduce: all tables when empty
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

std::optional<Format> parse_format(const std::string& text);

// Each returns the rendered report. Invalid input throws std::exception
// subclasses; main() turns those into a message and exit code 2.
RunResult run_eval(const RunConfig& config);
RunResult run_zeros(const RunConfig& config);
RunResult run_laguerre_zeros(const RunConfig& config);
RunResult run_oracle(const RunConfig& config);
RunResult run_reproduce_tables(const RunConfig& config);

RunResult dispatch(const RunConfig& config);

}  // namespace betajacobi::app
