#include "bakerlab/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <utility>
#include <variant>

#include <json.hpp>

#include "bakerlab/baker.hpp"
#include "bakerlab/classical.hpp"
#include "bakerlab/entanglement.hpp"
#include "bakerlab/markov.hpp"
#include "bakerlab/spectral.hpp"
#include "bakerlab/version.hpp"

namespace bakerlab {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

using Cell = std::variant<Index, double>;

struct Table {
  std::string stem;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](auto v) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
      },
      cell);
}

std::string csv_text(const Table& t) {
  std::string out;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (k > 0) out += ',';
    out += t.columns[k];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k > 0) out += ',';
      out += cell_text(row[k]);
    }
    out += '\n';
  }
  return out;
}

json json_of(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& cell : row) {
      std::visit([&](auto v) { r.push_back(v); }, cell);
    }
    rows.push_back(std::move(r));
  }
  return json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

// Writes artifacts under one directory; every file goes through a temporary
// name and a rename so a cancelled run leaves no partial data file.
class ArtifactSink {
 public:
  ArtifactSink(fs::path dir, OutputFormat format) : dir_(std::move(dir)), format_(format) {}

  void write_table(const Table& t) {
    if (format_ == OutputFormat::csv) {
      write_file(t.stem + ".csv", csv_text(t));
    } else {
      write_file(t.stem + ".json", json_of(t).dump(2) + "\n");
    }
  }

  void write_json(const std::string& stem, const json& j) {
    write_file(stem + ".json", j.dump(2) + "\n");
  }

  std::vector<std::string> take_written() { return std::move(written_); }

 private:
  void write_file(const std::string& name, const std::string& content) {
    const fs::path final_path = dir_ / name;
    const fs::path tmp_path = dir_ / (name + ".tmp");
    {
      std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      if (!out) {
        throw IoError("cannot write " + tmp_path.string());
      }
    }
    std::error_code ec;
    fs::rename(tmp_path, final_path, ec);
    if (ec) {
      throw IoError("cannot move " + tmp_path.string() + " into place: " + ec.message());
    }
    written_.push_back(final_path.string());
  }

  fs::path dir_;
  OutputFormat format_;
  std::vector<std::string> written_;
};

void run_classical(const ExperimentConfig& c, ArtifactSink& sink) {
  HaarSampler rng(c.seed, 0);
  CoupledPhasePoint x;
  x.control = PhasePoint{rng.uniform(), rng.uniform()};
  x.target = PhasePoint{rng.uniform(), rng.uniform()};

  Table t{"trajectory", {"step", "p_c", "q_c", "p_t", "q_t"}, {}};
  for (Index step = 0; step <= c.steps; ++step) {
    t.rows.push_back({step, x.control.p, x.control.q, x.target.p, x.target.q});
    x = coupled_cnot_step(x);
  }
  sink.write_table(t);
}

Table matrix_table(std::string stem, const ComplexMatrix& m) {
  Table t{std::move(stem), {"row", "col", "re", "im"}, {}};
  t.rows.reserve(static_cast<std::size_t>(m.size()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      t.rows.push_back({r, c, m(r, c).real(), m(r, c).imag()});
    }
  }
  return t;
}

void run_matrix_dump(const ExperimentConfig& c, ArtifactSink& sink) {
  const CoupledSpec spec{c.d_c, c.d_t, CouplingGate::from_kind(c.gate)};
  sink.write_table(matrix_table("baker_control", baker_unitary(c.d_c, Stacking::normal)));
  sink.write_table(matrix_table("baker_target", baker_unitary(c.d_t, Stacking::normal)));
  sink.write_table(matrix_table("coupled", coupled_baker(spec)));
}

void emit_spacing_artifacts(const std::string& suffix, const std::vector<double>& phases,
                            ArtifactSink& sink) {
  const std::vector<double> spacings = unit_mean_spacings(phases);
  const SpacingHistogram hist = spacing_histogram(spacings);

  Table t{"histogram" + suffix,
          {"bin_center", "density", "poisson_ref", "goe_ref", "gue_ref"},
          {}};
  const Index bins = static_cast<Index>(hist.density.size());
  for (Index k = 0; k < bins; ++k) {
    const double center = hist.bin_center(k);
    t.rows.push_back({center, hist.density[static_cast<std::size_t>(k)],
                      reference_pdf(ReferenceKind::poisson, center),
                      reference_pdf(ReferenceKind::goe, center),
                      reference_pdf(ReferenceKind::gue, center)});
  }
  sink.write_table(t);

  sink.write_json("summary" + suffix,
                  json{{"n_levels", static_cast<Index>(phases.size())},
                       {"ks_poisson", ks_distance(spacings, ReferenceKind::poisson)},
                       {"ks_goe", ks_distance(spacings, ReferenceKind::goe)},
                       {"ks_gue", ks_distance(spacings, ReferenceKind::gue)}});
}

void run_spectrum(const ExperimentConfig& c, ArtifactSink& sink) {
  const CoupledSpec spec{c.d_c, c.d_t, CouplingGate::from_kind(c.gate)};
  const ComplexMatrix u = coupled_baker(spec);
  if (!c.desymmetrize) {
    emit_spacing_artifacts("", eigenphases(u), sink);
    return;
  }
  const ComplexMatrix parity = kron(reflection_r(c.d_c), reflection_r(c.d_t));
  const SymmetrySectors sectors = split_by_symmetry(u, parity);
  emit_spacing_artifacts("_even", eigenphases(sectors.even), sink);
  emit_spacing_artifacts("_odd", eigenphases(sectors.odd), sink);
}

void run_entropy(const ExperimentConfig& c, ArtifactSink& sink) {
  const CoupledSpec spec{c.d_c, c.d_t, CouplingGate::from_kind(c.gate)};
  const ComplexMatrix u = coupled_baker(spec);
  const EnsembleRun run = ensemble_entropy_traces(u, c.d_c, c.d_t, c.samples, c.steps, c.seed);

  Table samples{"samples", {"sample_id", "step", "s_linear"}, {}};
  samples.rows.reserve(static_cast<std::size_t>(c.samples) * (static_cast<std::size_t>(c.steps) + 1));
  for (Index i = 0; i < c.samples; ++i) {
    const auto& values = run.traces[static_cast<std::size_t>(i)].values;
    for (Index step = 0; step <= c.steps; ++step) {
      samples.rows.push_back({i, step, values[static_cast<std::size_t>(step)]});
    }
  }
  sink.write_table(samples);

  Table ensemble{"ensemble", {"step", "mean", "std", "haar_reference"}, {}};
  for (Index step = 0; step <= c.steps; ++step) {
    ensemble.rows.push_back({step, run.summary.mean[static_cast<std::size_t>(step)],
                             run.summary.std_dev[static_cast<std::size_t>(step)],
                             run.summary.haar_reference});
  }
  sink.write_table(ensemble);
}

Table trace_table(std::string stem, const EntropyTrace& trace) {
  Table t{std::move(stem), {"step", "s_linear"}, {}};
  for (Index step = 0; step <= trace.steps(); ++step) {
    t.rows.push_back({step, trace.values[static_cast<std::size_t>(step)]});
  }
  return t;
}

void run_markov(const ExperimentConfig& c, ArtifactSink& sink) {
  const KrausPair kraus = KrausPair::for_dim(c.d_t);
  HaarSampler rng(c.seed, 0);
  const StateVector psi = haar_state(c.d_t, rng);
  sink.write_table(trace_table("trace", markov_entropy_trace(kraus, psi, c.steps)));
}

void run_compare(const ExperimentConfig& c, ArtifactSink& sink) {
  const KrausPair kraus = KrausPair::for_dim(c.d_t);
  HaarSampler rng(c.seed, 0);
  const StateVector psi = haar_state(c.d_t, rng);
  const EntropyTrace markov = markov_entropy_trace(kraus, psi, c.steps);
  sink.write_table(trace_table("trace_markov", markov));

  Table deviations{"deviations", {"d_c", "max_abs_diff"}, {}};
  for (Index dc = 8; dc <= c.d_c; dc *= 2) {
    const CoupledSpec spec{dc, c.d_t, CouplingGate::from_kind(c.gate)};
    const ComplexMatrix u = coupled_baker(spec);
    const EntropyTrace trace = evolve_mixed_control(u, psi, dc, c.d_t, c.steps);
    double dev = 0.0;
    for (std::size_t k = 0; k < trace.values.size(); ++k) {
      dev = std::max(dev, std::abs(trace.values[k] - markov.values[k]));
    }
    sink.write_table(trace_table("trace_dc" + std::to_string(dc), trace));
    deviations.rows.push_back({dc, dev});
  }
  sink.write_table(deviations);
}

void run_superop_eigs(const ExperimentConfig& c, ArtifactSink& sink) {
  const ComplexMatrix s = superop_matrix(KrausPair::for_dim(c.d_t));
  const SpectrumReport report = superop_spectrum(s);

  Table t{"eigenvalues", {"re", "im", "abs"}, {}};
  for (const Complex& lambda : report.eigenvalues) {
    t.rows.push_back({lambda.real(), lambda.imag(), std::abs(lambda)});
  }
  sink.write_table(t);

  sink.write_json("summary", json{{"n_unit", report.n_unit},
                                  {"max_subunit_modulus", report.max_subunit_modulus},
                                  {"spectral_gap", report.spectral_gap()},
                                  {"fixed_space_residual", report.fixed_space_residual}});
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::classical: return "classical";
    case Command::matrix_dump: return "matrix-dump";
    case Command::spectrum: return "spectrum";
    case Command::entropy: return "entropy";
    case Command::markov: return "markov";
    case Command::compare: return "compare";
    case Command::superop_eigs: return "superop-eigs";
  }
  return "unknown";
}

Command command_from_name(const std::string& name) {
  if (name == "classical") return Command::classical;
  if (name == "matrix-dump") return Command::matrix_dump;
  if (name == "spectrum") return Command::spectrum;
  if (name == "entropy") return Command::entropy;
  if (name == "markov") return Command::markov;
  if (name == "compare") return Command::compare;
  if (name == "superop-eigs") return Command::superop_eigs;
  throw std::invalid_argument("unknown command: " + name);
}

const char* format_name(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + name + " (expected csv or json)");
}

void ExperimentConfig::validate() const {
  if (d_c < 2 || d_c % 2 != 0 || d_t < 2 || d_t % 2 != 0) {
    throw std::invalid_argument("dimensions must be even and >= 2, got d_c=" +
                                std::to_string(d_c) + " d_t=" + std::to_string(d_t));
  }
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (gate == GateKind::custom) {
    throw std::invalid_argument("custom gates carry a matrix and cannot be configured by name");
  }
  if (output_path.empty()) throw std::invalid_argument("output path must not be empty");

  switch (command) {
    case Command::matrix_dump:
    case Command::spectrum:
    case Command::entropy:
      if (d_c * d_t > 4096) {
        throw std::invalid_argument("composite dimension " + std::to_string(d_c * d_t) +
                                    " exceeds the dense-propagator cap of 4096");
      }
      break;
    case Command::compare:
      if (d_c < 8 || (d_c & (d_c - 1)) != 0) {
        throw std::invalid_argument("compare sweeps d_c over powers of two from 8; d_c=" +
                                    std::to_string(d_c) + " must be a power of two >= 8");
      }
      if (d_c * d_t > 4096) {
        throw std::invalid_argument("composite dimension " + std::to_string(d_c * d_t) +
                                    " exceeds the dense-propagator cap of 4096");
      }
      break;
    case Command::superop_eigs:
      if (d_t > 64) {
        throw std::invalid_argument("superoperator spectra are capped at d_t=64, got " +
                                    std::to_string(d_t));
      }
      break;
    case Command::markov:
      if (d_t > 1024) {
        throw std::invalid_argument("channel iteration is capped at d_t=1024, got " +
                                    std::to_string(d_t));
      }
      break;
    case Command::classical:
      break;
  }
}

std::string ExperimentConfig::to_json_string() const {
  json j;
  j["command"] = command_name(command);
  j["d_c"] = d_c;
  j["d_t"] = d_t;
  j["gate"] = gate_name(gate);
  j["steps"] = steps;
  j["samples"] = samples;
  j["seed"] = seed;
  j["output_path"] = output_path;
  j["format"] = format_name(format);
  j["desymmetrize"] = desymmetrize;
  return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json_string(const std::string& text) {
  try {
    const json j = json::parse(text);
    ExperimentConfig c;
    c.command = command_from_name(j.at("command").get<std::string>());
    c.d_c = j.at("d_c").get<Index>();
    c.d_t = j.at("d_t").get<Index>();
    c.gate = gate_kind_from_name(j.at("gate").get<std::string>());
    c.steps = j.at("steps").get<Index>();
    c.samples = j.at("samples").get<Index>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.output_path = j.at("output_path").get<std::string>();
    c.format = format_from_name(j.at("format").get<std::string>());
    c.desymmetrize = j.at("desymmetrize").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config does not parse: ") + e.what());
  }
}

std::vector<std::string> run(const ExperimentConfig& config) {
  config.validate();

  fs::path dir(config.output_path);
  if (const char* env = std::getenv("BAKERLAB_OUT_DIR"); env != nullptr && *env != '\0') {
    dir = fs::path(env);
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  }

  const auto t0 = std::chrono::steady_clock::now();
  ArtifactSink sink(dir, config.format);
  switch (config.command) {
    case Command::classical: run_classical(config, sink); break;
    case Command::matrix_dump: run_matrix_dump(config, sink); break;
    case Command::spectrum: run_spectrum(config, sink); break;
    case Command::entropy: run_entropy(config, sink); break;
    case Command::markov: run_markov(config, sink); break;
    case Command::compare: run_compare(config, sink); break;
    case Command::superop_eigs: run_superop_eigs(config, sink); break;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  sink.write_json("run_manifest", json{{"config", json::parse(config.to_json_string())},
                                       {"seed", config.seed},
                                       {"toolkit_version", std::string(kVersion)},
                                       {"wall_time_seconds", wall}});
  return sink.take_written();
}

}  // namespace bakerlab
