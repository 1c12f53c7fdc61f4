// entnet: entanglement dynamics of DM-coupled Bell-pair networks.
//
//   entnet figure --fig fig2 --out fig2.csv
//   entnet sweep --axis x --strength 0.2 --pairs 1-2,1-3 --measure concurrence
//   entnet replay fig2.csv --out again.csv
//
// Exit codes: 0 success, 2 argument error, 3 numerical invariant violation,
// 1 anything else (I/O).

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "entnet/error.hpp"
#include "entnet/runner.hpp"

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitNumerical = 3;

void write(const entnet::SweepResult& result, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << entnet::runner::format_csv(result);
  } else {
    entnet::runner::emit_csv(result, out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace entnet;

  CLI::App app{"Entanglement and teleportation in DM-coupled Bell-pair networks"};
  app.require_subcommand(1);

  // Shared options. Each subcommand gets its own copy bound to the same
  // variables; only one subcommand runs.
  std::string fig;
  std::string axis = "z";
  double strength = 0.2;
  double tmax = 20.0;
  double dt = 0.05;
  std::string pairs;
  std::string measure = "concurrence";
  std::string method = "oracle";
  std::string corrections = "on";
  std::string out;
  double input_alpha2 = 0.7;
  bool input_average = false;
  std::string dvec;
  std::string replay_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--strength", strength, "DM strength D (default 0.2)");
    cmd->add_option("--tmax", tmax, "Final time (default 20)");
    cmd->add_option("--dt", dt, "Time step (default 0.05)");
    cmd->add_option("--method", method, "analytic | oracle (default oracle)")
        ->check(CLI::IsMember({"analytic", "oracle"}));
    cmd->add_option("--corrections", corrections, "Receiver Pauli corrections: on | off")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--input-alpha2", input_alpha2, "|alpha|^2 of the teleported input (default 0.7)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_flag("--input-average", input_average,
                  "Average teleportation fidelity over all pure inputs");
    cmd->add_option("--out", out, "Output CSV path (stdout if omitted)");
  };

  auto* figure = app.add_subcommand("figure", "Reproduce a figure preset");
  figure->add_option("--fig", fig, "fig2 | fig3 | fig4 | fig5 | fig7 | fig8")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig7", "fig8"}));
  add_common(figure);

  auto* sweep = app.add_subcommand("sweep", "Explicit parameter sweep on the 4-node network");
  sweep->add_option("--axis", axis, "DM axis x | y | z (default z)")
      ->check(CLI::IsMember({"x", "y", "z"}));
  sweep->add_option("--dvec", dvec, "General DM vector Dx,Dy,Dz (oracle only; overrides --axis)");
  sweep->add_option("--pairs", pairs, "Node pairs or routes, e.g. 1-2,1-3");
  sweep->add_option("--measure", measure, "concurrence | min | fidelity")
      ->check(CLI::IsMember({"concurrence", "min", "fidelity"}));
  add_common(sweep);

  auto* replay = app.add_subcommand("replay", "Regenerate a CSV from its manifest");
  replay->add_option("csv", replay_path, "CSV written by figure or sweep")->required();
  replay->add_option("--out", out, "Output CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgument;
  }

  try {
    if (*figure) {
      runner::Overrides overrides{{"method", method},
                                  {"corrections", corrections},
                                  {"input-average", input_average ? "on" : "off"}};
      // numeric overrides travel as the user's text so manifests echo it exactly
      for (const char* key : {"strength", "tmax", "dt", "input-alpha2"}) {
        const std::string flag = std::string("--") + key;
        if (figure->count(flag)) overrides[key] = figure->get_option(flag)->as<std::string>();
      }
      write(runner::run_figure(runner::parse_preset(fig), overrides), out);
    } else if (*sweep) {
      runner::SweepConfig config;
      if (!dvec.empty()) {
        config.axis.reset();
        const auto parsed = CLI::detail::split(dvec, ',');
        if (parsed.size() != 3) throw ArgumentError("--dvec needs three comma-separated values");
        double d[3];
        for (int k = 0; k < 3; ++k) {
          if (!CLI::detail::lexical_cast(parsed[k], d[k])) {
            throw ArgumentError("malformed --dvec component '" + parsed[k] + "'");
          }
        }
        config.dvec = {d[0], d[1], d[2]};
      } else {
        config.axis = qstate::parse_axis(axis);
      }
      config.strength = strength;
      config.t_max = tmax;
      config.dt = dt;
      config.pairs = runner::parse_pairs(pairs);
      config.measure = runner::parse_measure(measure);
      config.method = dmnet::parse_method(method);
      config.corrections = corrections == "on" ? teleport::Corrections::on : teleport::Corrections::off;
      config.input_alpha2 = input_alpha2;
      config.input_average = input_average;
      write(runner::run_sweep(config), out);
    } else if (*replay) {
      write(runner::replay(runner::read_csv(replay_path).manifest()), out);
    }
  } catch (const ArgumentError& e) {
    std::cerr << "entnet: " << e.what() << "\n";
    return kExitArgument;
  } catch (const DimensionError& e) {
    std::cerr << "entnet: " << e.what() << "\n";
    return kExitArgument;
  } catch (const InvariantViolation& e) {
    std::cerr << "entnet: numerical invariant violated: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    std::cerr << "entnet: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "entnet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
