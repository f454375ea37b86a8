#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "bakerlab/experiments.hpp"
#include "bakerlab/version.hpp"

namespace {

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled baker-map experiments; results land as CSV/JSON plus a run manifest"};
  app.set_version_flag("--version", std::string(bakerlab::kVersion));
  app.require_subcommand(1);

  bakerlab::ExperimentConfig cfg;
  std::string gate_text = "cnot";
  std::string format_text = "csv";

  const struct {
    const char* name;
    const char* help;
  } kCommands[] = {
      {"classical", "Dump a coupled classical trajectory"},
      {"matrix-dump", "Dump the factor and coupled propagators entry by entry"},
      {"spectrum", "Eigenphase spacing histogram with Poisson/GOE/GUE references"},
      {"entropy", "Ensemble entanglement traces for Haar product states"},
      {"markov", "Entropy trace of the stacking-average channel"},
      {"compare", "Mixed-control unitary traces against the channel trace"},
      {"superop-eigs", "Spectrum of the channel superoperator"},
  };
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--dc", cfg.d_c, "Control dimension (even)")->capture_default_str();
    sub->add_option("--dt", cfg.d_t, "Target dimension (even)")->capture_default_str();
    sub->add_option("--gate", gate_text, "Coupling gate")
        ->check(CLI::IsMember({"identity", "xx", "swap", "cnot"}))
        ->capture_default_str();
    sub->add_option("--steps", cfg.steps, "Map iterations")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Ensemble size")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--out", cfg.output_path,
                    "Output directory (BAKERLAB_OUT_DIR overrides)")
        ->capture_default_str();
    sub->add_option("--format", format_text, "Table format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    if (std::string(c.name) == "spectrum") {
      sub->add_flag("--desymmetrize", cfg.desymmetrize,
                    "Split into reflection-parity sectors before the spacing analysis");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::fprintf(stderr, "error: config: %s\n", one_line(e.what()).c_str());
    return 2;
  }

  try {
    cfg.command = bakerlab::command_from_name(app.get_subcommands().front()->get_name());
    cfg.gate = bakerlab::gate_kind_from_name(gate_text);
    cfg.format = bakerlab::format_from_name(format_text);
    for (const std::string& path : bakerlab::run(cfg)) {
      std::printf("%s\n", path.c_str());
    }
    return 0;
  } catch (const bakerlab::IoError& e) {
    std::fprintf(stderr, "error: io: %s\n", one_line(e.what()).c_str());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: config: %s\n", one_line(e.what()).c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: numeric: %s\n", one_line(e.what()).c_str());
    return 3;
  }
}
