#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cartan235/cli/commands.hpp"
#include "cartan235/cli/spec_parser.hpp"
#include "cartan235/error.hpp"

using namespace cartan235;

int main(int argc, char** argv) {
  CLI::App app{"cartan235: (2,3,5) distributions, their conformal metric and Cartan quartic"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false, json = false, timings = false;
  app.add_flag("--text", text, "plain key: value output");
  app.add_flag("--json", json, "JSON output (default)");
  app.add_flag("--timings", timings, "include wall-clock timings");

  std::string pipeline = "fq", spec, which;
  bool raw = false;

  auto* quartic = app.add_subcommand("quartic", "Cartan quartic coefficients A1..A5 of a specification");
  quartic->add_option("--pipeline", pipeline, "fq or theta")->check(CLI::IsMember({"fq", "theta"}));
  quartic->add_option("spec", spec, "f(q) or Theta(x5) specification, or jet")->required();

  auto* verify = app.add_subcommand("verify", "exact verification gates");
  verify->add_option("check", which, "structure, proposition, pairing, goursat or dictionary")
      ->required()
      ->check(CLI::IsMember({"structure", "proposition", "pairing", "goursat", "dictionary"}));
  verify->add_option("--pipeline", pipeline, "fq or theta")->check(CLI::IsMember({"fq", "theta"}));
  verify->add_option("--f,--theta,--spec", spec, "specification (defaults to symbolic jets)");
  verify->add_flag("--raw", raw, "structure: use the coordinate coframe");

  cli::OdeOptions ode_opts;
  std::string monomial, init;
  auto* ode = app.add_subcommand("ode", "integrate the 7th- or 8th-order equation");
  ode->set_help_flag("--help", "print this help and exit");
  ode->add_option("--order", ode_opts.order, "7 or 8")->check(CLI::IsMember({7, 8}));
  auto* mono_opt = ode->add_option("--monomial", monomial, "start on the exact solution x^a");
  auto* init_opt = ode->add_option("--init", init, "comma-separated y, y', ...");
  mono_opt->excludes(init_opt);
  ode->add_option("--from", ode_opts.from, "start point");
  ode->add_option("--to", ode_opts.to, "end point");
  ode->add_option("--h", ode_opts.h, "step");
  ode->add_option("--study-h", ode_opts.study_h, "step of the step-halving study (0 skips it)");
  ode->add_option("--emit-csv", ode_opts.csv_path, "write the trajectory as CSV");

  auto* bracket = app.add_subcommand("bracket", "bracket frame and genericity of a Monge f(q)");
  bracket->add_option("spec", spec, "f(q) specification or jet")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  try {
    cli::Report report;
    if (*quartic) {
      report = cli::cmd_quartic(spec, cli::parse_pipeline(pipeline));
    } else if (*verify) {
      report = cli::cmd_verify(which, cli::parse_pipeline(pipeline), spec, raw);
    } else if (*ode) {
      if (!monomial.empty()) {
        const auto p = cli::parse_spec(monomial);
        if (p.kind != cli::ParsedSpec::Kind::Sum || !p.variable.empty() || p.sum.terms().size() > 1) {
          throw Error(ErrorCode::InvalidArgument, "--monomial takes one rational exponent");
        }
        ode_opts.monomial = p.sum.is_zero() ? symcore::Rational(0) : p.sum.terms()[0].coefficient;
      }
      if (!init.empty()) ode_opts.init = cli::parse_init(init);
      report = cli::cmd_ode(ode_opts);
    } else if (*bracket) {
      report = cli::cmd_bracket(spec);
    }
    std::cout << (text && !json ? report.text(timings) : report.json_text(timings));
    return report.exit_code;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument) return cli::kExitUsage;
    return cli::kExitVerifyFailed;
  }
}
