// tempreach: command-line front end for out-component computation,
// comparison, benchmarking and hashed-stream export.
//
// Exit codes: 0 success, 2 usage error, 3 data error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempreach/bench_harness.hpp"
#include "tempreach/component_matrix.hpp"
#include "tempreach/compression.hpp"
#include "tempreach/errors.hpp"
#include "tempreach/event_io.hpp"
#include "tempreach/generator.hpp"
#include "tempreach/metrics.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace tempreach;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_data = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::binary);
  if (!out) throw data_error("cannot write " + path.string());
  return out;
}

// Writes to the file, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
  } else {
    auto out = open_out(path);
    out << text;
  }
}

json number_or_null(std::optional<double> x) {
  return x ? json(*x) : json(nullptr);
}

std::string hex64(std::uint64_t x) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << x;
  return s.str();
}

// --- generate ---------------------------------------------------------------

struct generate_args {
  std::size_t n = 100;
  std::size_t m = 10'000;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::optional<double> horizon;
  std::string out = "-";
};

void add_generate(CLI::App& app, generate_args& a) {
  auto* cmd = app.add_subcommand("generate", "Write a synthetic ER + Poisson temporal network");
  cmd->add_option("--n", a.n, "Node count")->capture_default_str();
  cmd->add_option("--m", a.m, "Event count")->capture_default_str();
  cmd->add_option("--p", a.p, "Wiring probability (default 2/n)");
  cmd->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--horizon", a.horizon, "Time horizon T (default m)");
  cmd->add_option("--out,-o", a.out, "Output event file, - for stdout")->capture_default_str();
}

int run_generate(const generate_args& a) {
  generator_config cfg;
  cfg.n = a.n;
  cfg.m = a.m;
  cfg.p = a.p;
  cfg.seed = a.seed;
  cfg.time_horizon = a.horizon;
  if (cfg.n < 2) throw usage_error("--n must be >= 2");
  const double p = cfg.wiring_probability();
  if (!(p > 0.0 && p <= 1.0)) throw usage_error("--p must lie in (0, 1]");
  const auto net = generate(cfg);
  std::ostringstream text;
  write_events(text, net);
  emit(a.out, text.str());
  return 0;
}

// --- compute ----------------------------------------------------------------

struct input_args {
  std::string path;
  bool sort = false;
  double prefix_fraction = 1.0;
};

void add_input(CLI::App* cmd, input_args& a) {
  cmd->add_option("--input,-i", a.path, "Event file (u,v,t per line)")->required();
  cmd->add_flag("--sort", a.sort, "Stable-sort events by timestamp on load");
  cmd->add_option("--prefix-fraction", a.prefix_fraction,
                  "Use the chronologically first fraction of events")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

loaded_network load(const input_args& a) {
  if (!(a.prefix_fraction > 0.0)) throw usage_error("--prefix-fraction must be > 0");
  return load_events(a.path, {.sort = a.sort, .prefix_fraction = a.prefix_fraction});
}

struct compute_args {
  input_args input;
  std::string method = "matrix";
  std::size_t registers = default_registers;
  std::optional<std::size_t> n_super;
  std::size_t hashes = default_hash_count;
  std::uint64_t seed = 1;
  std::uint64_t salt = default_sketch_salt;
  std::optional<double> delta_t;
  std::string out_sizes;
  std::string out_json = "-";
  std::string dump_sets;
  std::string truth;
  std::string out_labels;
};

void add_compute(CLI::App& app, compute_args& a) {
  auto* cmd = app.add_subcommand("compute", "Compute out-component sizes with one method");
  add_input(cmd, a.input);
  cmd->add_option("--method", a.method,
                  "eg_hll | matrix | matrix_rev | matrix_hll | matrix_rev_hll | "
                  "hashed | hashed_parallel")
      ->capture_default_str();
  cmd->add_option("--registers", a.registers, "HLL registers s (power of two)")
      ->capture_default_str();
  cmd->add_option("--n-super", a.n_super, "Super-nodes n_s (default ceil(0.3 n))");
  cmd->add_option("--hashes", a.hashes, "Hash functions K")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Hash family seed")->capture_default_str();
  cmd->add_option("--salt", a.salt, "HLL element-hash salt");
  cmd->add_option("--delta-t", a.delta_t, "Event-graph adjacency window");
  cmd->add_option("--out-sizes", a.out_sizes, "Per-node sizes CSV (node,size)");
  cmd->add_option("--out-json", a.out_json, "Summary JSON, - for stdout")->capture_default_str();
  cmd->add_option("--dump-sets", a.dump_sets,
                  "Binary dump of the (estimated) out-component sets, one row per node");
  cmd->add_option("--truth", a.truth, "Ground-truth sizes CSV to fill emd/acc");
  cmd->add_option("--out-labels", a.out_labels, "CSV node,label when the input used labels");
}

int run_compute(const compute_args& a) {
  method which;
  try {
    which = parse_method(a.method);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (!a.dump_sets.empty() && !(is_exact(which) || which == method::hashed ||
                                which == method::hashed_parallel))
    throw usage_error("--dump-sets needs an exact or hashed method");
  if (a.hashes == 0) throw usage_error("--hashes must be >= 1");
  if (a.n_super && *a.n_super == 0) throw usage_error("--n-super must be >= 1");

  const auto loaded = load(a.input);
  const auto& net = loaded.net;
  if (net.n() == 0) throw data_error("input has no events");

  method_params params;
  params.registers = a.registers;
  params.n_super = a.n_super;
  params.hash_count = a.hashes;
  params.seed = a.seed;
  params.salt = a.salt;
  params.delta_t = a.delta_t;
  method_result res;
  try {
    res = run_method(which, net, params, !a.dump_sets.empty());
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  json summary;
  summary["method"] = method_name(which);
  summary["n"] = net.n();
  summary["m"] = net.m();
  summary["mean"] = res.average;
  summary["max"] = nullptr;
  summary["emd"] = nullptr;
  summary["acc"] = nullptr;
  summary["wall_time"] = res.wall_time;
  summary["logical_memory"] = res.logical_memory;
  const bool hashed = which == method::hashed || which == method::hashed_parallel;
  const bool sketched = which == method::eg_hll || which == method::matrix_hll ||
                        which == method::matrix_rev_hll;
  summary["params"] = {
      {"n_s", hashed ? json(res.n_super) : json(nullptr)},
      {"K", hashed ? json(a.hashes) : json(nullptr)},
      {"s", sketched ? json(a.registers) : json(nullptr)},
      {"seed", hashed ? json(a.seed) : json(nullptr)},
  };

  if (res.sizes) {
    summary["max"] = summarize(*res.sizes).max;
    if (!a.out_sizes.empty()) {
      auto out = open_out(a.out_sizes);
      write_sizes_csv(out, *res.sizes);
      summary["sizes_path"] = a.out_sizes;
    }
    if (!a.truth.empty()) {
      const auto truth = load_sizes_csv(a.truth);
      if (truth.n() != res.sizes->n())
        throw data_error("truth has " + std::to_string(truth.n()) + " nodes, result has " +
                         std::to_string(res.sizes->n()));
      const double d = emd(truth, *res.sizes);
      summary["emd"] = d;
      summary["acc"] = d;
    }
  } else if (!a.out_sizes.empty()) {
    throw usage_error("method " + a.method + " yields only the average size");
  }
  if (res.sets && !a.dump_sets.empty()) {
    auto out = open_out(a.dump_sets);
    res.sets->write_binary(out);
  }
  if (loaded.labels && !a.out_labels.empty()) {
    auto out = open_out(a.out_labels);
    out << "node,label\n";
    for (std::size_t i = 0; i < loaded.labels->size(); ++i)
      out << i << ',' << loaded.labels->label(static_cast<node_id>(i)) << '\n';
  }
  emit(a.out_json, summary.dump(2) + "\n");
  return 0;
}

// --- compare ----------------------------------------------------------------

struct compare_args {
  std::string truth;
  std::string estimate;
  std::vector<double> levels{0.1, 0.25, 0.5, 0.75, 0.9, 0.99};
  std::string out = "-";
};

void add_compare(CLI::App& app, compare_args& a) {
  auto* cmd = app.add_subcommand("compare", "Accuracy (Earth-Mover distance) of an estimate");
  cmd->add_option("--truth", a.truth, "Ground-truth sizes CSV")->required();
  cmd->add_option("--estimate", a.estimate, "Estimated sizes CSV")->required();
  cmd->add_option("--quantiles", a.levels, "Quantile levels to report")->delimiter(',');
  cmd->add_option("--out", a.out, "Output JSON, - for stdout")->capture_default_str();
}

int run_compare(const compare_args& a) {
  const auto truth = load_sizes_csv(a.truth);
  const auto est = load_sizes_csv(a.estimate);
  if (truth.n() != est.n())
    throw data_error("size mismatch: truth has " + std::to_string(truth.n()) +
                     " nodes, estimate has " + std::to_string(est.n()));
  if (truth.empty()) throw data_error("empty distributions");
  const double acc = accuracy(truth, est);
  const auto qt = quantiles(truth, a.levels);
  const auto qe = quantiles(est, a.levels);
  json out;
  out["n"] = truth.n();
  out["emd"] = acc;
  out["acc"] = acc;
  out["quantiles"] = json::array();
  for (std::size_t i = 0; i < a.levels.size(); ++i)
    out["quantiles"].push_back(
        {{"q", a.levels[i]}, {"truth", qt[i]}, {"estimate", qe[i]}, {"delta", qe[i] - qt[i]}});
  emit(a.out, out.dump(2) + "\n");
  return 0;
}

// --- bench ------------------------------------------------------------------

struct bench_args {
  std::vector<std::size_t> n{100};
  std::vector<std::size_t> m{100'000};
  std::vector<std::string> methods{"matrix", "eg_hll"};
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
  std::size_t registers = default_registers;
  std::optional<std::size_t> n_super;
  std::size_t hashes = default_hash_count;
  double timeout = 0.0;
  std::size_t jobs = 1;
  std::string baseline = "matrix";
  bool no_accuracy = false;
  std::string out = "-";
  std::string ratios;
};

void add_bench(CLI::App& app, bench_args& a) {
  auto* cmd = app.add_subcommand("bench", "Run a time/memory/accuracy grid");
  cmd->add_option("--n", a.n, "Node counts")->delimiter(',');
  cmd->add_option("--m", a.m, "Event counts")->delimiter(',');
  cmd->add_option("--methods", a.methods, "Methods to run")->delimiter(',');
  cmd->add_option("--repeats", a.repeats, "Repeats per cell")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Base seed")->capture_default_str();
  cmd->add_option("--registers", a.registers, "HLL registers s")->capture_default_str();
  cmd->add_option("--n-super", a.n_super, "Super-nodes (default ceil(0.3 n))");
  cmd->add_option("--hashes", a.hashes, "Hash functions K")->capture_default_str();
  cmd->add_option("--timeout", a.timeout, "Censor cells slower than this many seconds");
  cmd->add_option("--jobs", a.jobs, "Concurrent cells")->capture_default_str();
  cmd->add_option("--baseline", a.baseline, "Method for the ratio table")->capture_default_str();
  cmd->add_flag("--no-accuracy", a.no_accuracy, "Skip the exact reference run");
  cmd->add_option("--out,-o", a.out, "Bench CSV (appended), - for stdout")->capture_default_str();
  cmd->add_option("--ratios", a.ratios, "Ratio table CSV relative to --baseline");
}

int run_bench_cmd(const bench_args& a) {
  bench_grid grid;
  grid.n_values = a.n;
  grid.m_values = a.m;
  method baseline;
  try {
    for (const auto& name : a.methods) grid.methods.push_back(parse_method(name));
    baseline = parse_method(a.baseline);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  if (a.n.empty() || a.m.empty() || a.methods.empty() || a.repeats == 0)
    throw usage_error("bench grid is empty");
  grid.repeats = a.repeats;
  grid.seed = a.seed;
  grid.params.registers = a.registers;
  grid.params.n_super = a.n_super;
  grid.params.hash_count = a.hashes;
  grid.timeout_seconds = a.timeout;
  grid.jobs = a.jobs;
  grid.accuracy = !a.no_accuracy;

  std::vector<bench_record> rows;
  try {
    rows = run_bench(grid);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  std::ostringstream csv;
  const bool fresh = a.out == "-" || !fs::exists(a.out) || fs::file_size(a.out) == 0;
  if (fresh) write_bench_header(csv);
  write_bench_rows(csv, rows);
  if (a.out == "-") {
    std::cout << csv.str();
  } else {
    auto out = open_out(a.out, std::ios::app);
    out << csv.str();
  }
  if (!a.ratios.empty()) {
    auto out = open_out(a.ratios);
    write_ratio_csv(out, ratio_table(rows, baseline), baseline);
  }
  return 0;
}

// --- hash-export ------------------------------------------------------------

struct export_args {
  input_args input;
  std::optional<std::size_t> n_super;
  std::uint64_t seed = 1;
  std::size_t member = 0;
  unsigned order = tabulation_hash::default_order;
  std::string out = "-";
  std::string descriptor;
};

void add_export(CLI::App& app, export_args& a) {
  auto* cmd = app.add_subcommand(
      "hash-export", "Write the super-event stream h(u),h(v),t of one family member");
  add_input(cmd, a.input);
  cmd->add_option("--n-super", a.n_super, "Super-nodes (default ceil(0.3 n))");
  cmd->add_option("--seed", a.seed, "Hash family seed")->capture_default_str();
  cmd->add_option("--member", a.member, "Index j of the hash in the family")
      ->capture_default_str();
  cmd->add_option("--order", a.order, "Polynomial order (k-universality)")
      ->capture_default_str();
  cmd->add_option("--out,-o", a.out, "Super-event file, - for stdout")->capture_default_str();
  cmd->add_option("--descriptor", a.descriptor, "Hash descriptor JSON");
}

int run_export(const export_args& a) {
  if (a.order < 2) throw usage_error("--order must be >= 2");
  const auto loaded = load(a.input);
  const std::size_t n_super = a.n_super.value_or(default_super_nodes(loaded.net.n()));
  if (n_super == 0) throw usage_error("--n-super must be >= 1");
  const tabulation_hash h(family_member_seed(a.seed, a.member), n_super, a.order);
  const auto hn = compress(loaded.net, h);
  std::ostringstream text;
  write_events(text, hn.super_network());
  emit(a.out, text.str());
  if (!a.descriptor.empty()) {
    json d;
    d["seed"] = a.seed;
    d["member"] = a.member;
    d["member_seed"] = h.seed();
    d["n_super"] = n_super;
    d["order"] = a.order;
    d["prime"] = "2^61-1";
    d["table_digests"] = json::array();
    for (auto x : h.table_digests()) d["table_digests"].push_back(hex64(x));
    emit(a.descriptor, d.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal-network out-component toolkit"};
  app.require_subcommand(1);
  generate_args gen;
  compute_args comp;
  compare_args cmp;
  bench_args bench;
  export_args exp;
  add_generate(app, gen);
  add_compute(app, comp);
  add_compare(app, cmp);
  add_bench(app, bench);
  add_export(app, exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (app.got_subcommand("generate")) return run_generate(gen);
    if (app.got_subcommand("compute")) return run_compute(comp);
    if (app.got_subcommand("compare")) return run_compare(cmp);
    if (app.got_subcommand("bench")) return run_bench_cmd(bench);
    if (app.got_subcommand("hash-export")) return run_export(exp);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_data;
  }
  return exit_usage;
}
