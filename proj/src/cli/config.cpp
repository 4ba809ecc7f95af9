#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lplab/cli.hpp"

namespace lplab::cli {
namespace {

const std::vector<std::pair<Experiment, std::string>>& experiment_table() {
  static const std::vector<std::pair<Experiment, std::string>> table = {
      {Experiment::verify_resolutions, "verify-resolutions"},
      {Experiment::verify_homotopy, "verify-homotopy"},
      {Experiment::class_sum_homotopy, "class-sum-homotopy"},
      {Experiment::pairing_adjointness, "pairing-adjointness"},
      {Experiment::distance_curve, "distance-curve"},
      {Experiment::translation_decay, "translation-decay"},
      {Experiment::finite_homology, "finite-homology"},
      {Experiment::finite_index, "finite-index"},
  };
  return table;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= v.size()) {
    const auto comma = v.find(',', start);
    const auto end = comma == std::string_view::npos ? v.size() : comma;
    out.push_back(trim(v.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw ConfigError(source_ + ": field '" + key + "': " + why);
  }

  std::int64_t integer(const std::string& key, std::string_view text) const {
    std::int64_t v = 0;
    const auto t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) fail(key, "'" + t + "' is not an integer");
    return v;
  }

  std::size_t natural(const std::string& key, std::string_view text) const {
    const auto v = integer(key, text);
    if (v < 0) fail(key, "must be nonnegative");
    return static_cast<std::size_t>(v);
  }

  double real(const std::string& key, std::string_view text) const {
    const auto t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
      fail(key, "'" + t + "' is not a number");
    return v;
  }

  std::vector<std::int64_t> integer_list(const std::string& key, std::string_view text) const {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(text)) {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(integer(key, item));
        continue;
      }
      const auto lo = integer(key, std::string_view(item).substr(0, dots));
      const auto hi = integer(key, std::string_view(item).substr(dots + 2));
      if (hi < lo) fail(key, "empty range '" + item + "'");
      if (hi - lo > 1'000'000) fail(key, "range '" + item + "' is too long");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    return out;
  }

  std::vector<std::size_t> natural_list(const std::string& key, std::string_view text) const {
    std::vector<std::size_t> out;
    for (const auto v : integer_list(key, text)) {
      if (v < 0) fail(key, "entries must be nonnegative");
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

 private:
  std::string source_;
};

}  // namespace

std::string experiment_name(Experiment e) {
  for (const auto& [k, name] : experiment_table())
    if (k == e) return name;
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& [k, n] : experiment_table())
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> all = [] {
    std::vector<Experiment> v;
    for (const auto& [k, name] : experiment_table()) v.push_back(k);
    return v;
  }();
  return all;
}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
  const Parser P(source);
  ExperimentConfig c;
  c.source = source;
  std::set<std::string> seen;
  bool has_experiment = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key=value, got '" + body + "'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (!seen.insert(key).second) P.fail(key, "given more than once");

    if (key == "experiment") {
      const auto e = parse_experiment(value);
      if (!e) P.fail(key, "unknown experiment '" + value + "'");
      c.experiment = *e;
      has_experiment = true;
    } else if (key == "group") {
      c.group = value;
    } else if (key == "resolution") {
      c.resolutions = split_list(value);
    } else if (key == "degree") {
      c.degrees = P.natural_list(key, value);
    } else if (key == "p") {
      for (const auto& item : split_list(value)) {
        const double p = P.real(key, item);
        if (!(p > 1.0)) P.fail(key, "p must exceed 1 (got " + item + ")");
        c.p.push_back(p);
      }
    } else if (key == "R") {
      c.radii = P.natural_list(key, value);
    } else if (key == "indices") {
      c.indices = P.integer_list(key, value);
    } else if (key == "seed") {
      const auto t = trim(value);
      std::uint64_t s = 0;
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), s);
      if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        P.fail(key, "'" + t + "' is not a 64-bit unsigned integer");
      c.seed = s;
    } else if (key == "output") {
      if (value.empty()) P.fail(key, "empty path");
      c.output = value;
    } else if (key == "max_ball") {
      c.max_ball = P.natural(key, value);
      if (c.max_ball == 0) P.fail(key, "must be positive");
    } else if (key == "max_iterations") {
      c.max_iterations = P.natural(key, value);
      if (c.max_iterations == 0) P.fail(key, "must be positive");
    } else if (key == "samples") {
      c.samples = P.natural(key, value);
      if (c.samples == 0) P.fail(key, "must be positive");
    } else if (key == "h") {
      c.h = value;
    } else if (key == "class") {
      c.class_representative = value;
    } else if (key == "class_cap") {
      c.class_cap = P.natural(key, value);
    } else if (key == "x" || key.starts_with("x.")) {
      c.x[key == "x" ? 0 : P.natural(key, std::string_view(key).substr(2))] = value;
    } else if (key == "y" || key.starts_with("y.")) {
      c.y[key == "y" ? 0 : P.natural(key, std::string_view(key).substr(2))] = value;
    } else if (key == "support") {
      c.support = P.natural(key, value);
    } else if (key == "epsilon") {
      const double e = P.real(key, value);
      if (!(e > 0.0)) P.fail(key, "must be positive");
      c.epsilon = e;
    } else if (key == "n") {
      c.n = static_cast<int>(P.integer(key, value));
    } else if (key == "m") {
      c.m = static_cast<int>(P.integer(key, value));
    } else if (key == "N") {
      c.top_degree = static_cast<int>(P.integer(key, value));
    } else {
      P.fail(key, "unknown field");
    }
  }
  if (!has_experiment) P.fail("experiment", "missing");
  if (c.output.empty()) c.output = experiment_name(c.experiment);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot read config");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace lplab::cli
