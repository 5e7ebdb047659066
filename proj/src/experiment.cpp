#include "regraph/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "regraph/gffcheck.hpp"
#include "regraph/graph.hpp"
#include "regraph/growth.hpp"
#include "regraph/limitproc.hpp"
#include "regraph/parallel.hpp"
#include "regraph/poissonlab.hpp"
#include "regraph/spectra.hpp"
#include "regraph/walks.hpp"

#ifndef REGRAPH_VERSION
#define REGRAPH_VERSION "0.1.0-unknown"
#endif

namespace regraph {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

enum class FieldType { integer, real, integer_list, real_list, text, boolean };

struct Field {
  std::string name;
  FieldType type;
  bool required;
  std::string fallback;
};

const std::map<std::string, std::vector<Field>>& schema() {
  using T = FieldType;
  static const std::map<std::string, std::vector<Field>> table{
      {"sample", {{"model", T::text, true, ""}, {"n", T::integer, true, ""}, {"d", T::integer, true, ""}, {"samples", T::integer, false, "1"}}},
      {"cycles",
       {{"model", T::text, true, ""},
        {"n", T::integer, true, ""},
        {"d", T::integer, true, ""},
        {"r", T::integer, true, ""},
        {"samples", T::integer, false, "1"}}},
      {"spectrum",
       {{"model", T::text, true, ""},
        {"n", T::integer, true, ""},
        {"d", T::integer, true, ""},
        {"samples", T::integer, false, "1"},
        {"scale", T::text, false, "unit"}}},
      {"poisson-test",
       {{"model", T::text, true, ""},
        {"d", T::integer, true, ""},
        {"r", T::integer, true, ""},
        {"n", T::integer_list, true, ""},
        {"samples", T::integer, true, ""}}},
      {"grow",
       {{"d", T::integer, true, ""},
        {"r", T::integer, true, ""},
        {"s", T::real, true, ""},
        {"T", T::real, true, ""},
        {"grid", T::real_list, true, ""},
        {"runs", T::integer, false, "1"},
        {"max_vertices", T::integer, false, std::to_string(kDefaultMaxVertices)}}},
      {"limit-sim",
       {{"d", T::integer, true, ""},
        {"K", T::integer, true, ""},
        {"T", T::real, true, ""},
        {"grid", T::real_list, true, ""},
        {"runs", T::integer, false, "1"},
        {"stationary", T::boolean, false, "true"}}},
      {"gff-check",
       {{"k_max", T::integer, false, "4"}, {"lags", T::real_list, false, "0,0.3,1.0"}, {"tolerance", T::real, false, "1e-5"}}},
  };
  return table;
}

bool needs_seed(const std::string& kind) { return kind != "gff-check"; }

std::optional<double> to_real(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  double v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Accepts "100000" and integral scientific forms such as "1e5".
std::optional<std::int64_t> to_integer(std::string_view s) {
  const std::string t = trim(s);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec == std::errc{} && p == t.data() + t.size() && !t.empty()) return v;
  const auto r = to_real(t);
  if (!r || *r != std::floor(*r) || std::abs(*r) > 9e15) return std::nullopt;
  return static_cast<std::int64_t>(*r);
}

std::optional<std::vector<std::string>> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) out.push_back(trim(item));
  if (out.empty() || std::any_of(out.begin(), out.end(), [](const auto& x) { return x.empty(); })) return std::nullopt;
  return out;
}

std::optional<bool> to_boolean(std::string_view s) {
  const std::string t = trim(s);
  if (t == "true" || t == "yes" || t == "1") return true;
  if (t == "false" || t == "no" || t == "0") return false;
  return std::nullopt;
}

std::optional<std::uint64_t> to_seed(std::string_view s) {
  const std::string t = trim(s);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || p != t.data() + t.size() || t.empty()) return std::nullopt;
  return v;
}

// Effective parameter text with defaults filled in.
std::map<std::string, std::string> effective(const ExperimentConfig& c) {
  std::map<std::string, std::string> out;
  for (const auto& f : schema().at(c.kind)) {
    auto it = c.values.find(f.name);
    if (it != c.values.end()) {
      out[f.name] = it->second;
    } else if (!f.required) {
      out[f.name] = f.fallback;
    }
  }
  return out;
}

class Params {
 public:
  explicit Params(const ExperimentConfig& c) : values_(effective(c)) {}
  std::int64_t integer(const std::string& k) const { return *to_integer(values_.at(k)); }
  int small(const std::string& k) const { return static_cast<int>(integer(k)); }
  double real(const std::string& k) const { return *to_real(values_.at(k)); }
  bool boolean(const std::string& k) const { return *to_boolean(values_.at(k)); }
  const std::string& text(const std::string& k) const { return values_.at(k); }
  std::vector<int> integers(const std::string& k) const {
    std::vector<int> out;
    const auto items = split_list(values_.at(k));
    for (const auto& x : *items) out.push_back(static_cast<int>(*to_integer(x)));
    return out;
  }
  std::vector<double> reals(const std::string& k) const {
    std::vector<double> out;
    const auto items = split_list(values_.at(k));
    for (const auto& x : *items) out.push_back(*to_real(x));
    return out;
  }
  bool has(const std::string& k) const { return values_.count(k) != 0; }

 private:
  std::map<std::string, std::string> values_;
};

bool well_typed(const std::string& text, FieldType type) {
  switch (type) {
    case FieldType::integer:
      return to_integer(text).has_value();
    case FieldType::real:
      return to_real(text).has_value();
    case FieldType::boolean:
      return to_boolean(text).has_value();
    case FieldType::text:
      return !trim(text).empty();
    case FieldType::integer_list:
    case FieldType::real_list: {
      const auto items = split_list(text);
      if (!items) return false;
      return std::all_of(items->begin(), items->end(), [&](const auto& x) {
        return type == FieldType::integer_list ? to_integer(x).has_value() : to_real(x).has_value();
      });
    }
  }
  return false;
}

const char* type_name(FieldType type) {
  switch (type) {
    case FieldType::integer:
      return "an integer";
    case FieldType::real:
      return "a real number";
    case FieldType::boolean:
      return "true or false";
    case FieldType::text:
      return "non-empty text";
    case FieldType::integer_list:
      return "a comma-separated list of integers";
    case FieldType::real_list:
      return "a comma-separated list of reals";
  }
  return "";
}

void check_model(const Params& p, const std::string& kind, std::vector<Violation>& out) {
  const std::string& model = p.text("model");
  if (model != "permutation" && model != "uniform") {
    out.push_back({"model", "model must be permutation or uniform"});
    return;
  }
  std::vector<std::int64_t> sizes;
  if (kind == "poisson-test") {
    for (int n : p.integers("n")) sizes.push_back(n);
  } else {
    sizes.push_back(p.integer("n"));
  }
  const std::int64_t d = p.integer("d");
  if (d < 1) out.push_back({"d", "graph generators need d >= 1"});
  for (std::int64_t n : sizes) {
    if (n < 1) {
      out.push_back({"n", "graph generators need n >= 1"});
    } else if (model == "uniform" && d >= 1) {
      if ((n * d) % 2 != 0) {
        out.push_back({"n", "uniform d-regular graphs exist only when n*d is even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")"});
      } else if (d >= n) {
        out.push_back({"n", "uniform model needs d < n"});
      }
    }
  }
  if (kind == "spectrum") {
    const std::string& scale = p.text("scale");
    if (scale != "raw" && scale != "half_spectral" && scale != "unit") {
      out.push_back({"scale", "scale must be raw, half_spectral or unit"});
    } else if (scale != "raw" && model == "uniform" && d == 1) {
      out.push_back({"scale", "rescaled spectra need degree >= 2"});
    }
  }
  if (kind == "cycles" || kind == "poisson-test") {
    const std::int64_t r = p.integer("r");
    if (kind == "poisson-test" && model == "uniform") {
      if (r < 3) out.push_back({"r", "uniform-model Poisson targets need r >= 3"});
      if (d >= 1 && d < 3) out.push_back({"d", "uniform-model Poisson targets need d >= 3"});
    } else if (r < 1) {
      out.push_back({"r", "cycle length cap needs r >= 1"});
    }
  }
}

void check_time_grid(const Params& p, std::vector<Violation>& out) {
  const double horizon = p.real("T");
  if (horizon < 0) out.push_back({"T", "horizon T must be >= 0"});
  const auto grid = p.reals("grid");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    out.push_back({"grid", "grid must be sorted"});
  } else if (grid.front() < 0 || grid.back() > horizon) {
    out.push_back({"grid", "grid must lie in [0, T]"});
  }
}

void positive(const Params& p, const std::string& key, std::vector<Violation>& out) {
  if (p.has(key) && p.integer(key) < 1) out.push_back({key, key + " must be >= 1"});
}

std::string csv_preamble(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "# kind=" << c.kind;
  if (c.seed) out << " seed=" << *c.seed;
  for (const auto& [k, v] : effective(c)) out << ' ' << k << '=' << v;
  out << '\n';
  return out.str();
}

Model model_of(const Params& p) { return parse_model(p.text("model")); }

// Either model; the visitor gets a PermGraph or a SimpleGraph.
template <class Fn>
auto with_sampled_graph(const Params& p, Rng& rng, Fn&& fn) {
  const int n = p.small("n");
  const int d = p.small("d");
  if (model_of(p) == Model::permutation) return fn(sample_permutation_model(n, d, rng));
  return fn(sample_uniform_model(n, d, rng));
}

std::string edges_csv(const PermGraph& g, std::size_t sample) {
  std::ostringstream out;
  for (int l = 0; l < g.d(); ++l) {
    for (int x = 0; x < g.n(); ++x) out << sample << ',' << x + 1 << ',' << g.perm(l)[static_cast<std::size_t>(x)] + 1 << ',' << l + 1 << '\n';
  }
  return out.str();
}

std::string edges_csv(const SimpleGraph& g, std::size_t sample) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << sample << ',' << u + 1 << ',' << v + 1 << ",0\n";
  return out.str();
}

struct Piece {
  nlohmann::json json;
  std::string csv;
};

ExperimentReport run_sample(const ExperimentConfig& c, const Params& p) {
  const auto pieces = run_replicas(*c.seed, 0, static_cast<std::size_t>(p.integer("samples")), c.workers, [&](Rng& rng, std::size_t i) {
    return with_sampled_graph(p, rng, [&](const auto& g) { return Piece{to_json(g), edges_csv(g, i)}; });
  });
  ExperimentReport r;
  std::string csv = "sample,u,v,label\n";
  nlohmann::json graphs = nlohmann::json::array();
  for (const auto& piece : pieces) {
    graphs.push_back(piece.json);
    csv += piece.csv;
  }
  r.body["result"] = {{"graphs", std::move(graphs)}};
  r.csv[""] = csv;
  return r;
}

ExperimentReport run_cycles(const ExperimentConfig& c, const Params& p) {
  const int r_cap = p.small("r");
  const auto pieces = run_replicas(*c.seed, 0, static_cast<std::size_t>(p.integer("samples")), c.workers, [&](Rng& rng, std::size_t i) {
    return with_sampled_graph(p, rng, [&](const auto& g) {
      const auto census = enumerate_cycles(g, r_cap).census;
      std::ostringstream rows;
      for (int k = 1; k <= r_cap; ++k) rows << i << ',' << k << ',' << census.count(k) << '\n';
      return Piece{to_json(census), rows.str()};
    });
  });
  ExperimentReport r;
  std::string csv = "sample,k,count\n";
  nlohmann::json list = nlohmann::json::array();
  for (const auto& piece : pieces) {
    list.push_back(piece.json);
    csv += piece.csv;
  }
  r.body["result"] = {{"censuses", std::move(list)}};
  r.csv[""] = csv;
  return r;
}

Scale parse_scale(const std::string& s) {
  if (s == "raw") return Scale::raw;
  if (s == "half_spectral") return Scale::half_spectral;
  return Scale::unit;
}

ExperimentReport run_spectrum(const ExperimentConfig& c, const Params& p) {
  const Scale scale = parse_scale(p.text("scale"));
  const int degree = model_of(p) == Model::permutation ? 2 * p.small("d") : p.small("d");
  const auto pieces = run_replicas(*c.seed, 0, static_cast<std::size_t>(p.integer("samples")), c.workers, [&](Rng& rng, std::size_t i) {
    return with_sampled_graph(p, rng, [&](const auto& g) {
      const Spectrum s = eigenvalues(adjacency_matrix(g), degree, scale);
      nlohmann::json values = nlohmann::json::array();
      std::ostringstream rows;
      rows << std::setprecision(17);
      for (Eigen::Index j = 0; j < s.values.size(); ++j) {
        values.push_back(s.values[j]);
        rows << i << ',' << j << ',' << s.values[j] << '\n';
      }
      return Piece{std::move(values), rows.str()};
    });
  });
  ExperimentReport r;
  std::string csv = "sample,index,value\n";
  nlohmann::json list = nlohmann::json::array();
  for (const auto& piece : pieces) {
    list.push_back(piece.json);
    csv += piece.csv;
  }
  r.body["result"] = {{"scale", to_string(scale)}, {"degree", degree}, {"eigenvalues", std::move(list)}};
  r.csv[""] = csv;
  return r;
}

ExperimentReport run_poisson(const ExperimentConfig& c, const Params& p) {
  const TvReport tv = tv_convergence_experiment(model_of(p), p.small("d"), p.small("r"), p.integers("n"),
                                                static_cast<std::size_t>(p.integer("samples")), *c.seed, c.workers);
  ExperimentReport r;
  r.body["result"] = to_json(tv);
  r.csv[""] = to_csv(tv);
  return r;
}

nlohmann::json trajectory_summary(const std::vector<Trajectory>& runs, const std::vector<double>& grid) {
  const std::size_t points = grid.size();
  nlohmann::json mean_vertices = nlohmann::json::array();
  nlohmann::json mean_by_length = nlohmann::json::array();
  for (std::size_t g = 0; g < points; ++g) {
    double v = 0;
    std::vector<double> lengths;
    for (const auto& t : runs) {
      v += t.vertices.empty() ? 0 : t.vertices[g];
      const auto& row = t.by_length[g];
      if (lengths.size() < row.size()) lengths.resize(row.size(), 0);
      for (std::size_t k = 0; k < row.size(); ++k) lengths[k] += static_cast<double>(row[k]);
    }
    for (auto& x : lengths) x /= static_cast<double>(runs.size());
    mean_vertices.push_back(v / static_cast<double>(runs.size()));
    mean_by_length.push_back(lengths);
  }
  return {{"grid", grid}, {"runs", runs.size()}, {"mean_vertices", mean_vertices}, {"mean_by_length", mean_by_length}};
}

ExperimentReport run_trajectories(const ExperimentConfig& c, const Params& p, bool growth) {
  const int d = p.small("d");
  const int length_cap = growth ? p.small("r") : p.small("K");
  const WordClassTable table(d, length_cap);
  const auto grid = p.reals("grid");
  const double horizon = p.real("T");
  const auto runs = run_replicas(*c.seed, 0, static_cast<std::size_t>(p.integer("runs")), c.workers, [&](Rng& rng, std::size_t) {
    if (growth) return simulate_growth(table, p.real("s"), horizon, grid, rng, p.small("max_vertices"));
    return simulate_limit(table, horizon, grid, p.boolean("stationary"), rng, true);
  });
  ExperimentReport r;
  r.body["result"] = trajectory_summary(runs, grid);
  TrajectoryStore store(table);
  for (std::size_t i = 0; i < runs.size(); ++i) store.append(i, runs[i]);
  r.csv[""] = store.counts_csv();
  r.csv["_events"] = store.events_csv();
  return r;
}

ExperimentReport run_gff(const Params& p) {
  const auto table = gff_covariance_table(p.small("k_max"), p.reals("lags"), p.real("tolerance"));
  ExperimentReport r;
  r.body["result"] = to_json(table);
  std::ostringstream csv;
  csv << std::setprecision(17) << "j,k,lag,numeric,closed_form,abs_err\n";
  for (const auto& row : table) {
    csv << row.j << ',' << row.k << ',' << row.lag << ',' << row.numeric << ',' << row.closed_form << ',' << row.abs_err << '\n';
  }
  r.csv[""] = csv.str();
  return r;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig c;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']' || body.size() < 3) throw ConfigError("malformed section header", line);
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError("empty key", line);
    if (value.empty()) throw ConfigError("empty value for " + key, line, key);
    if (key == "kind") {
      if (!c.kind.empty()) throw ConfigError("duplicate key kind", line, key);
      c.kind = value;
    } else if (key == "seed") {
      if (c.seed) throw ConfigError("duplicate key seed", line, key);
      c.seed = to_seed(value);
      if (!c.seed) throw ConfigError("seed must be an unsigned 64-bit integer", line, key);
    } else if (key == "workers") {
      const auto w = to_integer(value);
      if (!w) throw ConfigError("workers must be an integer", line, key);
      c.workers = static_cast<int>(*w);
    } else {
      if (c.values.count(key)) throw ConfigError("duplicate key " + key, line, key);
      c.values[key] = value;
      c.lines[key] = line;
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string(), 0);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void apply_seed_environment(ExperimentConfig& config) {
  const char* env = std::getenv("REGRAPH_SEED");
  if (env == nullptr) return;
  const auto seed = to_seed(env);
  if (!seed) throw ConfigError("REGRAPH_SEED must be an unsigned 64-bit integer", 0, "seed");
  config.seed = seed;
}

std::vector<Violation> validate(const ExperimentConfig& c) {
  std::vector<Violation> out;
  const auto& kinds = schema();
  if (kinds.find(c.kind) == kinds.end()) {
    out.push_back({"kind", c.kind.empty() ? "missing required field" : "unknown experiment kind " + c.kind});
    return out;
  }
  if (c.workers < 1) out.push_back({"workers", "workers must be >= 1"});
  if (needs_seed(c.kind) && !c.seed) out.push_back({"seed", "missing required field"});
  const auto& fields = kinds.at(c.kind);
  for (const auto& [key, value] : c.values) {
    if (std::none_of(fields.begin(), fields.end(), [&](const Field& f) { return f.name == key; })) {
      out.push_back({key, "not a parameter of " + c.kind});
    }
  }
  bool typed = true;
  for (const auto& f : fields) {
    auto it = c.values.find(f.name);
    if (it == c.values.end()) {
      if (f.required) {
        out.push_back({f.name, "missing required field"});
        typed = false;
      }
    } else if (!well_typed(it->second, f.type)) {
      out.push_back({f.name, std::string("must be ") + type_name(f.type)});
      typed = false;
    }
  }
  if (!typed) return out;

  const Params p(c);
  if (c.kind == "sample" || c.kind == "cycles" || c.kind == "spectrum" || c.kind == "poisson-test") check_model(p, c.kind, out);
  if (c.kind == "grow" || c.kind == "limit-sim") {
    if (p.integer("d") < 1) out.push_back({"d", "word alphabets need d >= 1"});
    const std::string cap = c.kind == "grow" ? "r" : "K";
    if (p.integer(cap) < 1) out.push_back({cap, "word length cap needs " + cap + " >= 1"});
    check_time_grid(p, out);
    if (c.kind == "grow" && p.real("s") < 0) out.push_back({"s", "warm-up s must be >= 0"});
    positive(p, "max_vertices", out);
  }
  if (c.kind == "gff-check") {
    positive(p, "k_max", out);
    const auto lags = p.reals("lags");
    if (std::any_of(lags.begin(), lags.end(), [](double x) { return x < 0; })) out.push_back({"lags", "quadrature needs t0 <= t1, so lags >= 0"});
    if (!(p.real("tolerance") > 0)) out.push_back({"tolerance", "tolerance must be > 0"});
  }
  for (const char* key : {"samples", "runs"}) positive(p, key, out);
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& c) {
  const auto violations = validate(c);
  if (!violations.empty()) {
    const auto& v = violations.front();
    auto it = c.lines.find(v.field);
    throw ConfigError(v.field + ": " + v.rule, it == c.lines.end() ? 0 : it->second, v.field);
  }
  const Params p(c);
  ExperimentReport r;
  if (c.kind == "sample") {
    r = run_sample(c, p);
  } else if (c.kind == "cycles") {
    r = run_cycles(c, p);
  } else if (c.kind == "spectrum") {
    r = run_spectrum(c, p);
  } else if (c.kind == "poisson-test") {
    r = run_poisson(c, p);
  } else if (c.kind == "grow") {
    r = run_trajectories(c, p, true);
  } else if (c.kind == "limit-sim") {
    r = run_trajectories(c, p, false);
  } else {
    r = run_gff(p);
  }
  r.body["kind"] = c.kind;
  r.body["config"] = effective(c);
  r.body["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
  for (auto& [suffix, text] : r.csv) text = csv_preamble(c) + text;
  return r;
}

std::vector<std::filesystem::path> write_report(const ExperimentReport& report, const ExperimentConfig& config,
                                                const RunMetadata& meta, const std::filesystem::path& out_dir) {
  namespace fs = std::filesystem;
  std::vector<std::pair<fs::path, std::string>> files;
  const nlohmann::json doc{{"body", report.body},
                           {"meta",
                            {{"version", meta.version},
                             {"wall_clock_seconds", meta.wall_clock_seconds},
                             {"finished_at", meta.finished_at.empty() ? utc_now() : meta.finished_at},
                             {"workers", meta.workers}}}};
  files.emplace_back(out_dir / (config.kind + ".json"), doc.dump(2) + "\n");
  for (const auto& [suffix, text] : report.csv) files.emplace_back(out_dir / (config.kind + suffix + ".csv"), text);

  std::vector<fs::path> staged;
  std::vector<fs::path> placed;
  try {
    fs::create_directories(out_dir);
    for (const auto& [path, text] : files) {
      fs::path tmp = path;
      tmp += ".partial";
      staged.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary);
      out << text;
      out.close();
      if (!out) throw fs::filesystem_error("cannot write report file", tmp, std::make_error_code(std::errc::io_error));
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
      fs::rename(staged[i], files[i].first);
      placed.push_back(files[i].first);
    }
  } catch (...) {
    std::error_code ignore;
    for (const auto& f : staged) fs::remove(f, ignore);
    for (const auto& f : placed) fs::remove(f, ignore);
    throw;
  }
  return placed;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const NumericError*>(&e)) return 4;
  if (dynamic_cast<const ResourceError*>(&e) || dynamic_cast<const RangeError*>(&e)) return 3;
  if (dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return 2;
  return 1;
}

std::string error_line(const std::exception& e) {
  nlohmann::json j;
  const int code = exit_code_for(e);
  j["error"] = code == 2 ? "config" : code == 3 ? "resource" : code == 4 ? "numeric" : "internal";
  j["exit"] = code;
  j["message"] = e.what();
  if (const auto* c = dynamic_cast<const ConfigError*>(&e)) {
    if (c->line() > 0) j["line"] = c->line();
    if (!c->field().empty()) j["field"] = c->field();
  }
  if (const auto* n = dynamic_cast<const NumericError*>(&e)) j["achieved_error"] = n->achieved_error();
  return j.dump();
}

std::string version_string() { return REGRAPH_VERSION; }

}  // namespace regraph
