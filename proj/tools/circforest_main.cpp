// Command-line front end: parses flags into a RunRequest, hands it to the
// library runner, prints the rendered result to stdout and diagnostics to
// stderr.  Exit codes: 0 ok, 2 bad input, 3 numeric failure, 4 internal.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "circforest/runner.hpp"

namespace {

void add_output_flags(CLI::App* cmd, circforest::RunRequest& req) {
  cmd->add_option("--precision-bits", req.precision_bits,
                  "working precision in bits (default 256)")
      ->check(CLI::Range(64u, 65536u));
  cmd->add_option("--format", req.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_graph_flags(CLI::App* cmd, circforest::RunRequest& req) {
  cmd->add_option("--steps", req.steps,
                  "step set s_1,...,s_k (strictly increasing)")
      ->required()
      ->delimiter(',');
  cmd->add_flag("--half-step", req.half_step,
                "select the odd-valency family C_{2n}(s_1..s_k, n)");
  add_output_flags(cmd, req);
}

void add_method_flag(CLI::App* cmd, circforest::RunRequest& req) {
  cmd->add_option("--method", req.method, "counting method (default all)")
      ->check(CLI::IsMember(
          {"det", "determinant", "resultant", "chebyshev", "all"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rooted spanning forest counts of circulant graphs"};
  app.require_subcommand(1);
  circforest::RunRequest req;

  CLI::App* count = app.add_subcommand("count", "forest count of one graph");
  add_graph_flags(count, req);
  count->add_option("--n", req.n, "order parameter")->required();
  add_method_flag(count, req);

  CLI::App* range =
      app.add_subcommand("count-range", "forest counts over a range of orders");
  add_graph_flags(range, req);
  range->add_option("--n-from", req.n_from, "first order")->required();
  range->add_option("--n-to", req.n_to, "last order")->required();
  add_method_flag(range, req);

  CLI::App* by_size = app.add_subcommand(
      "by-size", "rooted forest counts split by number of trees");
  add_graph_flags(by_size, req);
  by_size->add_option("--n", req.n, "order parameter")->required();

  CLI::App* structure = app.add_subcommand(
      "structure", "multiplier-times-square decomposition of the count");
  add_graph_flags(structure, req);
  structure->add_option("--n", req.n, "order parameter")->required();

  CLI::App* mahler = app.add_subcommand(
      "mahler", "growth constant by root product and by quadrature");
  add_graph_flags(mahler, req);
  mahler->add_option("--n", req.n,
                     "order parameter (defaults to the smallest valid order; "
                     "the constant does not depend on it)");
  mahler->add_option("--quad-tol", req.quad_tol,
                     "quadrature agreement tolerance (default 1e-10)");

  CLI::App* asym = app.add_subcommand(
      "asymptotics", "exact counts against the asymptotic prediction");
  add_graph_flags(asym, req);
  asym->add_option("--n-max,--n-to", req.n_to, "largest tabulated order")
      ->required();

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full invariant grid");
  add_output_flags(selftest, req);
  selftest->add_option("--quad-tol", req.quad_tol,
                       "quadrature agreement tolerance (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message to stderr
    return 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  const circforest::RunResult result = circforest::run(req);
  std::cout << circforest::emit(result);
  if (result.status != "ok")
    std::cerr << result.error_kind << ": " << result.error_detail << "\n";
  return result.exit_code;
}
