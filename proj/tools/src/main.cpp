#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "app.hpp"

namespace {

using betajacobi::app::RunConfig;

void add_parameter_options(CLI::App* sub, RunConfig& c, std::string& format) {
  sub->add_option("--n", c.n, "Degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--alpha", c.alpha, "alpha as p/q");
  sub->add_option("--digits", c.digits, "Decimal digits of working precision and output")->check(CLI::Range(16, 100000));
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_argument_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--beta", c.beta, "beta as p/q");
  sub->add_option("--x", c.x, "Laguerre-scale argument x as p/q");
  sub->add_option("--z", c.z, "Jacobi argument z as p/q");
  sub->add_option("--argument-scaling", c.argument_scaling, "z = 1 - 2x/beta or z = 1 - 2x/b")
      ->check(CLI::IsMember({"beta", "b"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Large-beta expansions of Jacobi polynomials and their zeros"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "json";

  auto* eval = app.add_subcommand("eval", "Evaluate P_n^(alpha,beta) by an expansion or the exact oracle");
  add_parameter_options(eval, c, format);
  add_argument_options(eval, c);
  eval->add_option("--method", c.method, "beta, b, finite or oracle")
      ->check(CLI::IsMember({"beta", "b", "finite", "oracle"}));
  eval->add_option("--kmax", c.kmax, "Truncation order")->check(CLI::NonNegativeNumber);
  eval->add_flag("--compare-oracle", c.compare_oracle, "Report the exact value and relative error");

  auto* zeros = app.add_subcommand("zeros", "Approximate the zeros of P_n^(alpha,beta)");
  add_parameter_options(zeros, c, format);
  add_argument_options(zeros, c);
  zeros->add_option("--method", c.method, "epsilon, delta or oracle")
      ->check(CLI::IsMember({"epsilon", "delta", "oracle"}));
  zeros->add_option("--terms", c.terms, "Number of shift coefficients")->check(CLI::NonNegativeNumber);
  zeros->add_flag("--compare-oracle", c.compare_oracle, "Report certified zeros and relative errors");

  auto* lag = app.add_subcommand("laguerre-zeros", "Zeros of L_n^(alpha)");
  add_parameter_options(lag, c, format);

  auto* oracle = app.add_subcommand("oracle", "Exact rational value of P_n^(alpha,beta)(z)");
  add_parameter_options(oracle, c, format);
  add_argument_options(oracle, c);

  auto* reproduce = app.add_subcommand("reproduce", "Recompute the published error tables");
  reproduce->add_option("--digits", c.digits, "Working digits")->check(CLI::Range(16, 100000));
  reproduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  reproduce->add_option("--table", c.table, "Table id; all tables if omitted")
      ->check(CLI::IsMember({"T1", "T2", "T3", "T4", "R2", "R3", "S31"}));

  CLI11_PARSE(app, argc, argv);

  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = *betajacobi::app::parse_format(format);
  try {
    const auto result = betajacobi::app::dispatch(c);
    std::cout << result.output;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
