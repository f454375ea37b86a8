#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "bakerlab/experiments.hpp"
#include "bakerlab/version.hpp"

using namespace bakerlab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Fresh scratch directory per test, wiped up front so reruns are clean.
fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("bakerlab_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

std::string first_line(const fs::path& p) {
  const std::string text = slurp(p);
  return text.substr(0, text.find('\n'));
}

std::size_t line_count(const fs::path& p) {
  const std::string text = slurp(p);
  std::size_t n = 0;
  for (char ch : text)
    if (ch == '\n') ++n;
  return n;
}

struct EnvGuard {
  std::string name;
  std::string saved;
  bool had = false;

  EnvGuard(const std::string& var, const std::string& value) : name(var) {
    if (const char* old = std::getenv(var.c_str())) {
      had = true;
      saved = old;
    }
    setenv(var.c_str(), value.c_str(), 1);
  }
  ~EnvGuard() {
    if (had)
      setenv(name.c_str(), saved.c_str(), 1);
    else
      unsetenv(name.c_str());
  }
};

ExperimentConfig base_config(Command cmd, const fs::path& out) {
  ExperimentConfig c;
  c.command = cmd;
  c.d_c = 4;
  c.d_t = 4;
  c.steps = 5;
  c.samples = 3;
  c.seed = 11;
  c.output_path = out.string();
  return c;
}

bool contains(const std::vector<std::string>& paths, const std::string& name) {
  for (const std::string& p : paths)
    if (fs::path(p).filename().string() == name) return true;
  return false;
}

}  // namespace

TEST_CASE("command and format names round trip") {
  for (Command c : {Command::classical, Command::matrix_dump, Command::spectrum,
                    Command::entropy, Command::markov, Command::compare,
                    Command::superop_eigs}) {
    CHECK(command_from_name(command_name(c)) == c);
  }
  CHECK(std::string(command_name(Command::matrix_dump)) == "matrix-dump");
  CHECK(std::string(command_name(Command::superop_eigs)) == "superop-eigs");
  CHECK_THROWS_AS((void)command_from_name("spectra"), std::invalid_argument);

  for (OutputFormat f : {OutputFormat::csv, OutputFormat::json})
    CHECK(format_from_name(format_name(f)) == f);
  CHECK_THROWS_AS((void)format_from_name("yaml"), std::invalid_argument);
}

TEST_CASE("config validation rejects each broken invariant") {
  ExperimentConfig ok = base_config(Command::entropy, "out");
  ok.validate();  // sanity: the base is fine

  ExperimentConfig c = ok;
  c.d_c = 3;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.d_t = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.steps = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.samples = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.gate = GateKind::custom;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = ok;
  c.output_path = "";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  // Dense-propagator cap.
  c = ok;
  c.command = Command::matrix_dump;
  c.d_c = 128;
  c.d_t = 64;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.d_c = 64;
  c.validate();

  // The channel-comparison sweep needs a power-of-two ceiling.
  c = ok;
  c.command = Command::compare;
  c.d_c = 12;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.d_c = 4;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.d_c = 16;
  c.validate();

  c = ok;
  c.command = Command::superop_eigs;
  c.d_t = 128;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.d_t = 64;
  c.validate();

  c = ok;
  c.command = Command::markov;
  c.d_t = 2048;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("config JSON round trip is lossless") {
  ExperimentConfig c;
  c.command = Command::compare;
  c.d_c = 64;
  c.d_t = 16;
  c.gate = GateKind::swap;
  c.steps = 25;
  c.samples = 7;
  c.seed = 9223372036854775813ull;  // above 2^63, must survive verbatim
  c.output_path = "some/dir";
  c.format = OutputFormat::json;
  c.desymmetrize = true;

  ExperimentConfig back = ExperimentConfig::from_json_string(c.to_json_string());
  CHECK(back == c);
  CHECK(back.seed == 9223372036854775813ull);

  ExperimentConfig defaults;
  CHECK(ExperimentConfig::from_json_string(defaults.to_json_string()) ==
        defaults);
}

TEST_CASE("config JSON parsing rejects malformed input") {
  CHECK_THROWS_AS((void)ExperimentConfig::from_json_string("not json"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)ExperimentConfig::from_json_string("{}"),
                  std::invalid_argument);

  // Drop one required field.
  ExperimentConfig c;
  json j = json::parse(c.to_json_string());
  j.erase("gate");
  CHECK_THROWS_AS((void)ExperimentConfig::from_json_string(j.dump()),
                  std::invalid_argument);

  // Wrong type.
  j = json::parse(c.to_json_string());
  j["steps"] = "ten";
  CHECK_THROWS_AS((void)ExperimentConfig::from_json_string(j.dump()),
                  std::invalid_argument);

  // Unknown enum value.
  j = json::parse(c.to_json_string());
  j["command"] = "resonances";
  CHECK_THROWS_AS((void)ExperimentConfig::from_json_string(j.dump()),
                  std::invalid_argument);
}

TEST_CASE("classical run writes the trajectory table") {
  fs::path dir = scratch("classical");
  ExperimentConfig c = base_config(Command::classical, dir);
  c.steps = 12;
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "trajectory.csv"));
  CHECK(contains(paths, "run_manifest.json"));
  CHECK(first_line(dir / "trajectory.csv") == "step,p_c,q_c,p_t,q_t");
  CHECK(line_count(dir / "trajectory.csv") == 14);  // header + steps+1 rows
  // No stray temporaries left behind.
  for (const auto& entry : fs::directory_iterator(dir))
    CHECK(entry.path().extension() != ".tmp");
}

TEST_CASE("matrix dump writes all three propagators") {
  fs::path dir = scratch("dump");
  ExperimentConfig c = base_config(Command::matrix_dump, dir);
  std::vector<std::string> paths = run(c);
  for (const char* name : {"baker_control.csv", "baker_target.csv",
                           "coupled.csv", "run_manifest.json"})
    CHECK(contains(paths, name));
  CHECK(first_line(dir / "baker_control.csv") == "row,col,re,im");
  CHECK(line_count(dir / "baker_control.csv") == 17);  // header + 4x4
  CHECK(line_count(dir / "coupled.csv") == 257);       // header + 16x16
}

TEST_CASE("spectrum run writes histogram and summary") {
  fs::path dir = scratch("spectrum");
  ExperimentConfig c = base_config(Command::spectrum, dir);
  c.d_c = 8;
  c.d_t = 8;
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "histogram.csv"));
  CHECK(contains(paths, "summary.json"));
  CHECK(first_line(dir / "histogram.csv") ==
        "bin_center,density,poisson_ref,goe_ref,gue_ref");
  CHECK(line_count(dir / "histogram.csv") == 31);  // header + 30 bins

  json summary = json::parse(slurp(dir / "summary.json"));
  CHECK(summary.at("n_levels").get<Index>() == 64);
  for (const char* key : {"ks_poisson", "ks_goe", "ks_gue"}) {
    const double ks = summary.at(key).get<double>();
    CHECK(ks >= 0.0);
    CHECK(ks <= 1.0);
  }
}

TEST_CASE("desymmetrized spectrum writes one artifact pair per sector") {
  fs::path dir = scratch("spectrum_sectors");
  ExperimentConfig c = base_config(Command::spectrum, dir);
  c.d_c = 8;
  c.d_t = 8;
  c.gate = GateKind::swap;
  c.desymmetrize = true;
  std::vector<std::string> paths = run(c);
  for (const char* name : {"histogram_even.csv", "histogram_odd.csv",
                           "summary_even.json", "summary_odd.json"})
    CHECK(contains(paths, name));

  // The sector sizes add up to the full dimension.
  json even = json::parse(slurp(dir / "summary_even.json"));
  json odd = json::parse(slurp(dir / "summary_odd.json"));
  CHECK(even.at("n_levels").get<Index>() + odd.at("n_levels").get<Index>() ==
        64);

  // The double reflection is not a symmetry of the cnot coupling.
  c.gate = GateKind::cnot;
  c.output_path = scratch("spectrum_bad").string();
  CHECK_THROWS_AS((void)run(c), std::invalid_argument);
}

TEST_CASE("entropy run writes per-sample and summary tables") {
  fs::path dir = scratch("entropy");
  ExperimentConfig c = base_config(Command::entropy, dir);
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "samples.csv"));
  CHECK(contains(paths, "ensemble.csv"));
  CHECK(first_line(dir / "samples.csv") == "sample_id,step,s_linear");
  CHECK(first_line(dir / "ensemble.csv") == "step,mean,std,haar_reference");
  CHECK(line_count(dir / "samples.csv") == 1 + 3 * 6);  // samples x (steps+1)
  CHECK(line_count(dir / "ensemble.csv") == 7);
}

TEST_CASE("markov run writes the channel trace") {
  fs::path dir = scratch("markov");
  ExperimentConfig c = base_config(Command::markov, dir);
  c.d_t = 8;
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "trace.csv"));
  CHECK(first_line(dir / "trace.csv") == "step,s_linear");
  CHECK(line_count(dir / "trace.csv") == 7);
}

TEST_CASE("compare run sweeps the control ladder") {
  fs::path dir = scratch("compare");
  ExperimentConfig c = base_config(Command::compare, dir);
  c.d_c = 16;
  c.d_t = 4;
  std::vector<std::string> paths = run(c);
  for (const char* name : {"trace_markov.csv", "trace_dc8.csv",
                           "trace_dc16.csv", "deviations.csv"})
    CHECK(contains(paths, name));
  CHECK(first_line(dir / "deviations.csv") == "d_c,max_abs_diff");
  CHECK(line_count(dir / "deviations.csv") == 3);  // header + dc in {8,16}
  CHECK(first_line(dir / "trace_markov.csv") == "step,s_linear");
}

TEST_CASE("superoperator spectrum run reports the full eigenvalue set") {
  fs::path dir = scratch("superop");
  ExperimentConfig c = base_config(Command::superop_eigs, dir);
  c.d_t = 16;
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "eigenvalues.csv"));
  CHECK(contains(paths, "summary.json"));
  CHECK(first_line(dir / "eigenvalues.csv") == "re,im,abs");
  CHECK(line_count(dir / "eigenvalues.csv") == 257);  // header + 16^2 rows

  json summary = json::parse(slurp(dir / "summary.json"));
  CHECK(summary.at("n_unit").get<Index>() == 2);
  CHECK(summary.at("max_subunit_modulus").get<double>() < 1.0);
  CHECK(summary.at("spectral_gap").get<double>() > 0.0);
  CHECK(summary.at("fixed_space_residual").get<double>() <= 1e-8);
}

TEST_CASE("repeated runs produce byte-identical data files") {
  fs::path dir_a = scratch("repeat_a");
  fs::path dir_b = scratch("repeat_b");
  ExperimentConfig c = base_config(Command::entropy, dir_a);
  run(c);
  c.output_path = dir_b.string();
  run(c);
  for (const char* name : {"samples.csv", "ensemble.csv"})
    CHECK(slurp(dir_a / name) == slurp(dir_b / name));

  // A different seed changes the data.
  fs::path dir_c = scratch("repeat_c");
  c.output_path = dir_c.string();
  c.seed = 12;
  run(c);
  CHECK(slurp(dir_a / "samples.csv") != slurp(dir_c / "samples.csv"));
}

TEST_CASE("environment variable overrides the output directory") {
  fs::path configured = scratch("env_configured");
  fs::path actual = scratch("env_actual");
  EnvGuard guard("BAKERLAB_OUT_DIR", actual.string());
  ExperimentConfig c = base_config(Command::markov, configured);
  std::vector<std::string> paths = run(c);
  CHECK(fs::exists(actual / "trace.csv"));
  CHECK(!fs::exists(configured));
  for (const std::string& p : paths)
    CHECK(fs::path(p).parent_path() == actual);
}

TEST_CASE("json output format writes parseable tables") {
  fs::path dir = scratch("json_format");
  ExperimentConfig c = base_config(Command::entropy, dir);
  c.format = OutputFormat::json;
  std::vector<std::string> paths = run(c);
  CHECK(contains(paths, "samples.json"));
  CHECK(contains(paths, "ensemble.json"));

  json samples = json::parse(slurp(dir / "samples.json"));
  const std::vector<std::string> expected = {"sample_id", "step", "s_linear"};
  CHECK(samples.at("columns").get<std::vector<std::string>>() == expected);
  CHECK(samples.at("rows").size() == 3 * 6);

  json ensemble = json::parse(slurp(dir / "ensemble.json"));
  CHECK(ensemble.at("rows").size() == 6);
  // Every row carries one value per column.
  for (const json& row : ensemble.at("rows")) CHECK(row.size() == 4);
}

TEST_CASE("run manifest records the config faithfully") {
  fs::path dir = scratch("manifest");
  ExperimentConfig c = base_config(Command::markov, dir);
  c.seed = 9223372036854775813ull;
  run(c);

  json manifest = json::parse(slurp(dir / "run_manifest.json"));
  ExperimentConfig recorded =
      ExperimentConfig::from_json_string(manifest.at("config").dump());
  CHECK(recorded == c);
  CHECK(manifest.at("seed").get<std::uint64_t>() == c.seed);
  CHECK(manifest.at("toolkit_version").get<std::string>() ==
        std::string(kVersion));
  CHECK(manifest.at("wall_time_seconds").get<double>() >= 0.0);
}

TEST_CASE("run refuses an invalid config without touching the disk") {
  fs::path dir = scratch("invalid_config");
  ExperimentConfig c = base_config(Command::entropy, dir);
  c.steps = 0;
  CHECK_THROWS_AS((void)run(c), std::invalid_argument);
  CHECK(!fs::exists(dir));
}

#ifdef BAKERLAB_CLI_PATH
namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(BAKERLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("command line exit codes") {
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("--version") == 0);
  // No subcommand, unknown subcommand, bad flag values: config errors.
  CHECK(run_cli("") == 2);
  CHECK(run_cli("resonances") == 2);
  CHECK(run_cli("spectrum --dc 3 --dt 16") == 2);
  CHECK(run_cli("entropy --gate toffoli") == 2);
  CHECK(run_cli("superop-eigs --dt 128") == 2);

  fs::path dir = scratch("cli_ok");
  CHECK(run_cli("classical --steps 5 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "trajectory.csv"));
  CHECK(fs::exists(dir / "run_manifest.json"));

  fs::path dir2 = scratch("cli_markov");
  CHECK(run_cli("markov --dt 8 --steps 4 --seed 3 --out " + dir2.string()) ==
        0);
  CHECK(fs::exists(dir2 / "trace.csv"));
}
#endif
