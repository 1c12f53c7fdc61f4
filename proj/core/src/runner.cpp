#include "entnet/runner.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entnet/error.hpp"

namespace entnet::runner {

namespace {

using entmeas::NodePair;
using qstate::Axis;

constexpr std::string_view kUnits = "dimensionless (hbar=1)";

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
    throw ArgumentError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

bool parse_switch(std::string_view text, std::string_view what) {
  if (text == "on" || text == "true" || text == "1") return true;
  if (text == "off" || text == "false" || text == "0") return false;
  throw ArgumentError("malformed " + std::string(what) + " '" + std::string(text) + "'");
}

std::string format_cell(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

dmnet::NetworkState two_pair_network() {
  const qstate::BellKind pairs[] = {qstate::BellKind::phi_plus, qstate::BellKind::phi_plus};
  return dmnet::initial_network(pairs);
}

/// Side-by-side union of tables sharing one time column.
SweepResult merge_columns(const std::vector<SweepResult>& parts) {
  std::vector<std::string> names;
  for (const auto& part : parts) {
    names.insert(names.end(), part.columns().begin() + 1, part.columns().end());
  }
  SweepResult merged(std::move(names));
  const std::size_t rows = parts.front().row_count();
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<double> values;
    for (const auto& part : parts) {
      const auto& row = part.rows()[r];
      values.insert(values.end(), row.begin() + 1, row.end());
    }
    merged.add_row(parts.front().rows()[r].front(), std::move(values));
  }
  return merged;
}

std::vector<NodePair> effective_pairs(const SweepConfig& config) {
  if (!config.pairs.empty()) return config.pairs;
  if (config.measure == Measure::fidelity) return {{1, 2}};
  return {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
}

std::string dvec_text(const dmnet::DMVector& d) {
  return format_number(d.x) + "," + format_number(d.y) + "," + format_number(d.z);
}

Manifest manifest_for(const SweepConfig& config, std::string_view preset) {
  const auto c = coupling_for(config);
  Manifest m;
  m.emplace_back("tool", "entnet");
  m.emplace_back("preset", std::string(preset));
  m.emplace_back("network", "phi_plus,phi_plus");
  m.emplace_back("coupling", format_pairs({config.coupling}));
  m.emplace_back("axis", config.axis ? std::string(qstate::to_string(*config.axis)) : "general");
  m.emplace_back("strength", format_number(config.strength));
  m.emplace_back("dvec", dvec_text(c.strength()));
  m.emplace_back("tmax", format_number(config.t_max));
  m.emplace_back("dt", format_number(config.dt));
  m.emplace_back("measure", std::string(to_string(config.measure)));
  m.emplace_back("pairs", config.measure == Measure::min_concurrence
                              ? std::string()
                              : format_pairs(effective_pairs(config)));
  m.emplace_back("method", std::string(dmnet::to_string(config.method)));
  m.emplace_back("corrections", config.corrections == teleport::Corrections::on ? "on" : "off");
  m.emplace_back("input_alpha2", format_number(config.input_alpha2));
  m.emplace_back("input_average", config.input_average ? "on" : "off");
  m.emplace_back("seed", "none");
  m.emplace_back("units", std::string(kUnits));
  return m;
}

void apply_overrides(SweepConfig& config, const Overrides& overrides) {
  for (const auto& [key, value] : overrides) {
    if (key == "strength") {
      config.strength = parse_number(value, "strength");
    } else if (key == "tmax") {
      config.t_max = parse_number(value, "tmax");
    } else if (key == "dt") {
      config.dt = parse_number(value, "dt");
    } else if (key == "method") {
      config.method = dmnet::parse_method(value);
    } else if (key == "corrections") {
      config.corrections =
          parse_switch(value, "corrections") ? teleport::Corrections::on : teleport::Corrections::off;
    } else if (key == "input-alpha2") {
      config.input_alpha2 = parse_number(value, "input-alpha2");
    } else if (key == "input-average") {
      config.input_average = parse_switch(value, "input-average");
    } else {
      throw ArgumentError("malformed override: unknown key '" + key + "'");
    }
  }
}

SweepResult six_node_series(const SweepConfig& config) {
  const auto grid = make_grid(config.t_max, config.dt);
  const auto inner = dmnet::DMCoupling::along(Axis::z, config.strength, 2, 3);
  const auto outer = dmnet::DMCoupling::along(Axis::z, config.strength, 4, 5);
  const dmnet::CouplingPropagator u4(inner, 4, config.method);
  const dmnet::CouplingPropagator u6(outer, 6, config.method);
  const auto net0 = two_pair_network();
  // C_13 rides along as the four-node reference
  const NodePair pairs[] = {{1, 3}, {1, 5}, {1, 6}};
  std::vector<std::string> names;
  for (const auto& p : pairs) names.push_back(entmeas::pair_label("C", p, outer));
  SweepResult result(std::move(names));
  for (const double t : grid) {
    const auto net4 = dmnet::evolve(net0, u4, t);
    const auto net6 = dmnet::grow(net4, qstate::BellKind::phi_plus, u6, t);
    std::vector<double> row;
    for (const auto& [i, j] : pairs) row.push_back(entmeas::concurrence(dmnet::reduced(net6, {i, j})));
    result.add_row(t, std::move(row));
  }
  return result;
}

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::concurrence: return "concurrence";
    case Measure::min_concurrence: return "min";
    case Measure::fidelity: return "fidelity";
  }
  return "?";
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::fig4: return "fig4";
    case Preset::fig5: return "fig5";
    case Preset::fig7: return "fig7";
    case Preset::fig8: return "fig8";
  }
  return "?";
}

Measure parse_measure(std::string_view text) {
  if (text == "concurrence") return Measure::concurrence;
  if (text == "min") return Measure::min_concurrence;
  if (text == "fidelity") return Measure::fidelity;
  throw ArgumentError("unknown measure '" + std::string(text) + "'");
}

Preset parse_preset(std::string_view text) {
  for (auto p : {Preset::fig2, Preset::fig3, Preset::fig4, Preset::fig5, Preset::fig7,
                 Preset::fig8}) {
    if (text == to_string(p)) return p;
  }
  throw ArgumentError("unknown figure preset '" + std::string(text) + "'");
}

std::vector<NodePair> parse_pairs(std::string_view text) {
  std::vector<NodePair> pairs;
  if (text.empty()) return pairs;
  for (const auto item : split(text, ',')) {
    const auto ends = split(item, '-');
    if (ends.size() != 2) {
      throw ArgumentError("malformed pair '" + std::string(item) + "', expected i-j");
    }
    int ij[2] = {0, 0};
    for (int k = 0; k < 2; ++k) {
      const auto* end = ends[k].data() + ends[k].size();
      const auto res = std::from_chars(ends[k].data(), end, ij[k]);
      if (res.ec != std::errc() || res.ptr != end || ij[k] < 1) {
        throw ArgumentError("malformed pair '" + std::string(item) + "'");
      }
    }
    if (ij[0] == ij[1]) {
      throw ArgumentError("pair '" + std::string(item) + "' repeats a node");
    }
    pairs.emplace_back(ij[0], ij[1]);
  }
  return pairs;
}

std::string format_pairs(const std::vector<NodePair>& pairs) {
  std::string out;
  for (const auto& [i, j] : pairs) {
    if (!out.empty()) out += ',';
    out += std::to_string(i) + "-" + std::to_string(j);
  }
  return out;
}

std::vector<double> make_grid(double t_max, double dt) {
  if (!std::isfinite(t_max) || !std::isfinite(dt) || !(dt > 0.0) || !(t_max > 0.0)) {
    throw ArgumentError("time grid needs dt > 0 and tmax > 0");
  }
  const double steps = std::floor(t_max / dt + 1e-9);
  if (steps > 1e7) {
    throw ArgumentError("time grid too large");
  }
  const auto n = static_cast<std::size_t>(steps);
  std::vector<double> grid(n + 1);
  for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) * dt;
  return grid;
}

dmnet::DMCoupling coupling_for(const SweepConfig& config) {
  const auto [i, j] = config.coupling;
  if (i < 1 || j < 1 || i > 4 || j > 4 || i == j) {
    throw ArgumentError("coupling must join two distinct nodes of the 4-node network");
  }
  if (config.axis) return dmnet::DMCoupling::along(*config.axis, config.strength, i, j);
  return dmnet::DMCoupling(config.dvec, i, j);
}

SweepResult run_sweep(const SweepConfig& config) {
  const auto grid = make_grid(config.t_max, config.dt);
  const auto c = coupling_for(config);
  if (config.method == dmnet::Method::analytic && !c.single_axis()) {
    throw ArgumentError("analytic method needs a single-axis coupling");
  }
  if (!(config.input_alpha2 >= 0.0 && config.input_alpha2 <= 1.0)) {
    throw ArgumentError("input-alpha2 must lie in [0, 1]");
  }
  const auto net0 = two_pair_network();
  const auto pairs = effective_pairs(config);

  SweepResult result = [&] {
    switch (config.measure) {
      case Measure::concurrence:
        return entmeas::concurrence_series(net0, c, grid, pairs, config.method);
      case Measure::min_concurrence:
        return entmeas::min_concurrence_series(net0, c, grid, config.method);
      case Measure::fidelity: {
        const auto input = teleport::UnknownQubit::from_alpha2(config.input_alpha2);
        std::vector<SweepResult> parts;
        for (const auto& route : pairs) {
          parts.push_back(teleport::fidelity_series(net0, c, grid, route, input, config.method,
                                                    {config.corrections, config.input_average}));
        }
        return merge_columns(parts);
      }
    }
    throw ArgumentError("unknown measure");
  }();
  result.manifest() = manifest_for(config, "sweep");
  return result;
}

SweepResult run_figure(Preset preset, const Overrides& overrides) {
  SweepConfig config;
  apply_overrides(config, overrides);
  const auto preset_name = std::string(to_string(preset));

  SweepResult result({"placeholder"});
  switch (preset) {
    case Preset::fig2:
      config.axis = Axis::z;
      config.pairs = {{1, 2}, {1, 3}, {1, 4}};
      result = run_sweep(config);
      break;
    case Preset::fig3:
      config.axis = Axis::z;
      config.pairs = {{3, 4}, {2, 3}, {2, 4}};
      result = run_sweep(config);
      break;
    case Preset::fig4:
      config.axis = Axis::x;
      config.pairs = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
      result = run_sweep(config);
      break;
    case Preset::fig5: {
      config.measure = Measure::min_concurrence;
      config.axis = Axis::z;
      auto z = run_sweep(config);
      config.axis = Axis::x;
      auto x = run_sweep(config);
      result = merge_columns({z, x});
      result.manifest() = manifest_for(config, preset_name);
      result.set_manifest("axis", "z,x");
      result.set_manifest("dvec", "per-axis");
      break;
    }
    case Preset::fig7:
      config.axis = Axis::z;
      config.pairs = {{1, 3}, {1, 5}, {1, 6}};
      result = six_node_series(config);
      result.manifest() = manifest_for(config, preset_name);
      result.set_manifest("network", "phi_plus,phi_plus,phi_plus");
      result.set_manifest("growth", "phi_plus appended, z-axis coupling 4-5 for the same t");
      break;
    case Preset::fig8:
      config.axis = Axis::x;
      config.measure = Measure::fidelity;
      config.pairs = {{1, 2}, {1, 4}, {2, 3}};
      result = run_sweep(config);
      break;
  }
  result.set_manifest("preset", preset_name);
  return result;
}

std::string format_csv(const SweepResult& result) {
  std::string out;
  for (const auto& [key, value] : result.manifest()) {
    out += "# " + key + "=" + value + "\n";
  }
  for (std::size_t k = 0; k < result.columns().size(); ++k) {
    if (k) out += ',';
    out += result.columns()[k];
  }
  out += '\n';
  for (const auto& row : result.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += format_cell(row[k]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
  if (result.row_count() == 0) {
    throw ArgumentError("refusing to write an empty table");
  }
  const std::string text = format_csv(result);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  file.flush();
  if (!file) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

SweepResult parse_csv(std::string_view text) {
  Manifest manifest;
  std::optional<SweepResult> result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      const std::size_t eq = body.find('=');
      if (eq != std::string_view::npos) {
        manifest.emplace_back(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
      }
      continue;
    }
    const auto cells = split(line, ',');
    if (!result) {
      if (cells.front() != "t") {
        throw ArgumentError("CSV header must start with 't'");
      }
      std::vector<std::string> names(cells.begin() + 1, cells.end());
      result.emplace(std::vector<std::string>(names.begin(), names.end()));
      continue;
    }
    if (cells.size() != result->columns().size()) {
      throw ArgumentError("CSV row width does not match header");
    }
    std::vector<double> values;
    for (std::size_t k = 1; k < cells.size(); ++k) values.push_back(parse_number(cells[k], "cell"));
    result->add_row(parse_number(cells[0], "time"), std::move(values));
  }
  if (!result) {
    throw ArgumentError("CSV has no header");
  }
  result->manifest() = std::move(manifest);
  return std::move(*result);
}

SweepResult read_csv(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_csv(buffer.str());
}

SweepResult replay(const Manifest& manifest) {
  const auto get = [&](std::string_view key) {
    for (const auto& [k, v] : manifest) {
      if (k == key) return v;
    }
    throw ArgumentError("manifest lacks '" + std::string(key) + "'");
  };
  const std::string preset = get("preset");
  if (preset != "sweep") {
    Overrides overrides{{"strength", get("strength")},
                        {"tmax", get("tmax")},
                        {"dt", get("dt")},
                        {"method", get("method")},
                        {"corrections", get("corrections")},
                        {"input-alpha2", get("input_alpha2")},
                        {"input-average", get("input_average")}};
    return run_figure(parse_preset(preset), overrides);
  }

  SweepConfig config;
  const std::string axis = get("axis");
  if (axis == "general") {
    config.axis.reset();
    const auto parts = split(get("dvec"), ',');
    if (parts.size() != 3) {
      throw ArgumentError("malformed dvec in manifest");
    }
    config.dvec = {parse_number(parts[0], "dvec"), parse_number(parts[1], "dvec"),
                   parse_number(parts[2], "dvec")};
  } else {
    config.axis = qstate::parse_axis(axis);
  }
  config.strength = parse_number(get("strength"), "strength");
  config.t_max = parse_number(get("tmax"), "tmax");
  config.dt = parse_number(get("dt"), "dt");
  config.measure = parse_measure(get("measure"));
  config.pairs = parse_pairs(get("pairs"));
  config.method = dmnet::parse_method(get("method"));
  config.corrections = parse_switch(get("corrections"), "corrections") ? teleport::Corrections::on
                                                                       : teleport::Corrections::off;
  config.input_alpha2 = parse_number(get("input_alpha2"), "input_alpha2");
  config.input_average = parse_switch(get("input_average"), "input_average");
  const auto coupling = parse_pairs(get("coupling"));
  if (coupling.size() != 1) {
    throw ArgumentError("malformed coupling in manifest");
  }
  config.coupling = coupling.front();
  return run_sweep(config);
}

}  // namespace entnet::runner
