#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lplab/common.hpp"

namespace lplab::cli {

// Malformed or out-of-range configuration; maps to exit code 3.
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // unexpected error
inline constexpr int kExitViolation = 2;
inline constexpr int kExitConfig = 3;

enum class Experiment {
  verify_resolutions,
  verify_homotopy,
  class_sum_homotopy,
  pairing_adjointness,
  distance_curve,
  translation_decay,
  finite_homology,
  finite_index,
};

std::string experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);
const std::vector<Experiment>& all_experiments();

// One experiment, parsed from a flat key=value file. Lists are comma
// separated; integer lists also accept ranges "a..b".
struct ExperimentConfig {
  Experiment experiment = Experiment::verify_resolutions;
  std::string source = "<config>";
  std::string group;
  std::vector<std::string> resolutions;
  std::vector<std::size_t> degrees;
  std::vector<double> p;
  std::vector<std::size_t> radii;
  std::vector<std::int64_t> indices;
  std::uint64_t seed = 1;
  std::string output;  // path stem; ".csv" / ".svg" are appended
  std::size_t max_ball = 0;  // 0: environment or built-in default
  std::size_t max_iterations = 500;
  std::size_t samples = 0;  // 0: experiment default
  std::string h;
  std::string class_representative;
  std::size_t class_cap = 10000;
  std::map<std::size_t, std::string> x;  // copy -> ring-element text
  std::map<std::size_t, std::string> y;
  std::size_t support = 4;  // radius of random x, y when not given
  std::optional<double> epsilon;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> top_degree;  // key "N"
};

ExperimentConfig parse_config(std::string_view text, const std::string& source = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunResult {
  std::vector<std::filesystem::path> written;
  std::vector<std::string> violations;  // invariant checks that failed
  std::vector<std::string> notes;
};

// Runs one experiment and writes its outputs. Checked invariants that fail
// are collected in violations after the CSV is written; errors in the
// configuration throw ConfigError or InvalidArgument.
RunResult run_experiment(const ExperimentConfig& config);

// `lab run`: every file in order; returns the worst exit code.
int run_configs(std::span<const std::string> paths, std::ostream& out, std::ostream& err);

// `lab list`
std::string catalog_listing();

// `lab verify-all`: built-in suites, outputs under out_dir.
int verify_all(const std::filesystem::path& out_dir, std::ostream& out, std::ostream& err);

// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

// Standalone SVG line plot, one polyline per series.
std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Series>& series);

}  // namespace lplab::cli
