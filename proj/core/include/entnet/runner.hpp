#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entnet/dmnet.hpp"
#include "entnet/entmeas.hpp"
#include "entnet/sweep.hpp"
#include "entnet/teleport.hpp"

namespace entnet::runner {

enum class Measure { concurrence, min_concurrence, fidelity };
enum class Preset { fig2, fig3, fig4, fig5, fig7, fig8 };

std::string_view to_string(Measure m);
std::string_view to_string(Preset p);
Measure parse_measure(std::string_view text);
Preset parse_preset(std::string_view text);

/// "1-2,1-3" -> {{1,2},{1,3}}
std::vector<entmeas::NodePair> parse_pairs(std::string_view text);
std::string format_pairs(const std::vector<entmeas::NodePair>& pairs);

/// Explicit parameter set for one sweep over the two-pair network
/// phi+ ⊗ phi+ coupled on `coupling`.
struct SweepConfig {
  /// Single-axis coupling when set; otherwise `dvec` is used as a general
  /// DM vector (oracle only).
  std::optional<qstate::Axis> axis = qstate::Axis::z;
  double strength = 0.2;
  dmnet::DMVector dvec{};
  double t_max = 20.0;
  double dt = 0.05;
  /// Node pairs (concurrence) or sender-receiver routes (fidelity). Empty
  /// means every pair for concurrence and 1-2 for fidelity.
  std::vector<entmeas::NodePair> pairs;
  Measure measure = Measure::concurrence;
  dmnet::Method method = dmnet::Method::oracle;
  teleport::Corrections corrections = teleport::Corrections::on;
  double input_alpha2 = 0.7;
  bool input_average = false;
  entmeas::NodePair coupling{2, 3};
};

/// t_k = k * dt for k = 0 .. floor(t_max / dt).
std::vector<double> make_grid(double t_max, double dt);

dmnet::DMCoupling coupling_for(const SweepConfig& config);

SweepResult run_sweep(const SweepConfig& config);

/// Keys: strength, tmax, dt, method, corrections, input-alpha2,
/// input-average. Anything else is a malformed override.
using Overrides = std::map<std::string, std::string>;

SweepResult run_figure(Preset preset, const Overrides& overrides = {});

/// CSV text: "# key=value" manifest lines, header, one row per t with 12
/// significant digits.
std::string format_csv(const SweepResult& result);
/// Writes format_csv(result). Throws ArgumentError for an empty table
/// (no file is created) and IoError when the file cannot be written.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);
SweepResult parse_csv(std::string_view text);
SweepResult read_csv(const std::filesystem::path& path);

/// Recompute a table from its manifest alone.
SweepResult replay(const Manifest& manifest);

}  // namespace entnet::runner
