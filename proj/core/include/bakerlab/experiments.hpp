#pragma once

// Experiment recipes behind the command-line tool: validated configuration
// with a lossless JSON form, and deterministic artifact generation with a
// run manifest next to every data file.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bakerlab/coupled.hpp"

namespace bakerlab {

enum class Command {
  classical,    // coupled classical trajectory dump
  matrix_dump,  // propagator matrices as (row, col, re, im)
  spectrum,     // eigenphase spacing histogram and KS summary
  entropy,      // ensemble entanglement traces
  markov,       // channel entropy trace
  compare,      // unitary mixed-control traces against the channel trace
  superop_eigs  // channel superoperator spectrum
};

enum class OutputFormat { csv, json };

const char* command_name(Command c);
Command command_from_name(const std::string& name);
const char* format_name(OutputFormat f);
OutputFormat format_from_name(const std::string& name);

// Seed used when none is given; fixed so unseeded runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 7;

// Thrown when an output location cannot be created or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Command command = Command::spectrum;
  Index d_c = 32;
  Index d_t = 16;
  GateKind gate = GateKind::cnot;
  Index steps = 40;
  Index samples = 50;
  std::uint64_t seed = kDefaultSeed;
  std::string output_path = "out";
  OutputFormat format = OutputFormat::csv;
  bool desymmetrize = false;

  // Throws std::invalid_argument on any violated invariant (odd or
  // oversized dimensions, steps or samples < 1, unnamed custom gate).
  void validate() const;

  // Lossless round trip: from_json_string(to_json_string()) == *this.
  std::string to_json_string() const;
  static ExperimentConfig from_json_string(const std::string& text);

  bool operator==(const ExperimentConfig&) const = default;
};

// Runs the configured experiment, writing its data files plus
// run_manifest.json into the output directory (created if needed) and
// returning the paths written. Data files are byte-identical across runs
// with the same config; only the manifest's wall-time field varies. The
// BAKERLAB_OUT_DIR environment variable, when set, overrides output_path.
std::vector<std::string> run(const ExperimentConfig& config);

}  // namespace bakerlab
