#ifndef CIRCFOREST_RUNNER_HPP
#define CIRCFOREST_RUNNER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "circforest/precision.hpp"

namespace circforest {

/// One parsed CLI invocation.  Which of the order fields applies depends
/// on the command: n for count/by-size/structure/mahler, n_from/n_to for
/// count-range, n_to for asymptotics (largest tabulated order).
struct RunRequest {
  std::string command;
  std::vector<unsigned long> steps;
  bool half_step = false;
  unsigned long n = 0;
  unsigned long n_from = 0;
  unsigned long n_to = 0;
  std::string method = "all";  // det | resultant | chebyshev | all
  unsigned precision_bits = PrecisionBudget::kDefaultBits;
  std::string format = "json";  // json | csv
  double quad_tol = 1e-10;
};

/// Outcome of a run: the request echo, per-record results, and the error
/// classification when status != "ok".  Big integers are decimal strings.
struct RunResult {
  RunRequest request;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  std::string status = "ok";
  std::string error_kind;
  std::string error_detail;
  int exit_code = 0;
};

/// Dispatches the request to the library.  Never throws: failures are
/// encoded in status/error_kind and the matching exit code (2 bad input,
/// 3 numeric failure, 4 internal inconsistency).
RunResult run(const RunRequest& req);

/// Deterministic byte rendering of a result in the request's format.
std::string emit(const RunResult& result);

}  // namespace circforest

#endif
