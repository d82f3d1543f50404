// Command-line front end: state dumps, witness evaluation, scenario runs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "boundent/csv.hpp"
#include "boundent/presets.hpp"
#include "boundent/scenario.hpp"
#include "boundent/states.hpp"
#include "boundent/witnesses.hpp"

namespace {

using namespace boundent;

int cmd_state(const std::string& which, double a) {
  if (which == "horodecki")
    write_matrix_csv(std::cout, horodecki_state(a).matrix());
  else if (which == "upb")
    write_matrix_csv(std::cout, upb_state().matrix());
  else
    throw ConfigError("state must be 'horodecki' or 'upb'");
  return 0;
}

int cmd_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  const DensityMatrix rho = DensityMatrix::validated(read_matrix_csv(in));
  const WitnessPair w = witnesses(rho);
  std::cout << "negativity = " << format_number(w.negativity) << '\n'
            << "realignment = " << format_number(w.realignment) << '\n'
            << "class = " << to_string(w.classify()) << '\n';
  return 0;
}

int run_and_emit(ScenarioConfig cfg, const std::optional<std::string>& out) {
  if (out) cfg.output_path = *out;
  const ResultSet results = run_scenario(cfg);
  emit_csv(results, cfg, cfg.output_path);
  if (cfg.output_path != "-")
    std::cerr << "wrote " << results.rows.size() << " rows to " << cfg.output_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qutrit bound entanglement under collective dephasing"};
  app.require_subcommand(1);

  std::string state_name;
  double a = 4.0;
  auto* state = app.add_subcommand("state", "Print an initial state as a 9x18 CSV (re, im interleaved)");
  state->add_option("which", state_name, "horodecki or upb")->required();
  state->add_option("--a", a, "Horodecki parameter, 2 <= a <= 5")->capture_default_str();

  std::string rho_path;
  auto* witness = app.add_subcommand("witness", "Negativity, realignment witness and class of a state CSV");
  witness->add_option("rho", rho_path, "9x18 (or 9x9 real) CSV density matrix")->required();

  std::string config_path;
  std::optional<std::string> out;
  auto* run = app.add_subcommand("run", "Run a scenario config file");
  run->add_option("config", config_path, "key = value scenario file")->required();
  run->add_option("--out", out, "Override the output path ('-' for stdout)");

  std::string preset_name;
  std::uint64_t seed = kDefaultPresetSeed;
  auto* preset = app.add_subcommand("preset", "Run a figure preset (fig1 ... fig8, with panels like fig4c)");
  preset->add_option("name", preset_name, "Preset name")->required();
  preset->add_option("--seed", seed, "Frequency sampling seed")->capture_default_str();
  preset->add_option("--out", out, "Output path ('-' for stdout); default <name>.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*state) return cmd_state(state_name, a);
    if (*witness) return cmd_witness(rho_path);
    if (*run) return run_and_emit(load_config(config_path), out);
    if (*preset) return run_and_emit(figure_preset(preset_name, seed), out);
  } catch (const boundent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
