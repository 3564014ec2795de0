#include "tempreach/bench_harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "tempreach/component_matrix.hpp"
#include "tempreach/compression.hpp"
#include "tempreach/event_graph.hpp"
#include "tempreach/event_io.hpp"
#include "tempreach/generator.hpp"
#include "tempreach/memory_accounting.hpp"

namespace tempreach {

namespace {

constexpr std::array<std::pair<method, std::string_view>, 7> method_names{{
    {method::eg_hll, "eg_hll"},
    {method::matrix, "matrix"},
    {method::matrix_rev, "matrix_rev"},
    {method::matrix_hll, "matrix_hll"},
    {method::matrix_rev_hll, "matrix_rev_hll"},
    {method::hashed, "hashed"},
    {method::hashed_parallel, "hashed_parallel"},
}};

double mean_of(const size_distribution& d) {
  const auto v = d.values();
  return v.empty() ? 0.0
                   : std::accumulate(v.begin(), v.end(), 0.0) /
                         static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace

std::string_view method_name(method m) noexcept {
  for (const auto& [value, name] : method_names)
    if (value == m) return name;
  return "unknown";
}

method parse_method(std::string_view name) {
  for (const auto& [value, label] : method_names)
    if (label == name) return value;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

bool is_exact(method m) noexcept {
  return m == method::matrix || m == method::matrix_rev;
}

bool yields_distribution(method m) noexcept { return m != method::matrix_hll; }

method_result run_method(method which, const temporal_network& net,
                         const method_params& params, bool keep_sets) {
  using clock = std::chrono::steady_clock;
  method_result out;
  const std::size_t n = net.n();
  const auto start = clock::now();

  switch (which) {
    case method::matrix:
    case method::matrix_rev: {
      const auto s = which == method::matrix ? run(net) : run_reversed(net);
      out.sizes = size_distribution_of(s);
      out.wall_time = std::chrono::duration<double>(clock::now() - start).count();
      if (keep_sets) out.sets = out_components(s);
      out.logical_memory = memory::matrix_bytes(n);
      break;
    }
    case method::matrix_hll:
      out.average = run_hll_average(net, params.registers, params.salt);
      out.wall_time = std::chrono::duration<double>(clock::now() - start).count();
      out.logical_memory = memory::hll_bank_bytes(n, params.registers);
      return out;
    case method::matrix_rev_hll:
      out.sizes = run_hll_distribution(net, params.registers, params.salt);
      out.wall_time = std::chrono::duration<double>(clock::now() - start).count();
      out.logical_memory = memory::hll_bank_bytes(n, params.registers);
      break;
    case method::eg_hll: {
      const auto eg = build_event_graph(net, params.delta_t);
      eg_sweep_stats stats;
      out.sizes = eg_out_component_sizes(eg, net, params.registers,
                                         params.salt, &stats);
      out.wall_time = std::chrono::duration<double>(clock::now() - start).count();
      out.logical_memory = memory::eg_hll_bytes(
          net.m(), eg.eta(), stats.peak_live_sketches, params.registers);
      break;
    }
    case method::hashed:
    case method::hashed_parallel: {
      out.n_super = params.n_super.value_or(default_super_nodes(n));
      fusion_options opts;
      opts.parallel = which == method::hashed_parallel;
      auto fe = fused_out_components(net, out.n_super, params.hash_count,
                                     params.seed, opts);
      out.sizes = fused_size_distribution(fe);
      out.wall_time = std::chrono::duration<double>(clock::now() - start).count();
      if (keep_sets) out.sets = fe.sets();
      out.logical_memory =
          memory::hashed_bytes(n, out.n_super, params.hash_count);
      break;
    }
  }
  out.wall_time = std::max(out.wall_time, 1e-9);
  out.average = mean_of(*out.sizes);
  return out;
}

std::vector<bench_record> run_bench(const bench_grid& grid) {
  if (grid.n_values.empty() || grid.m_values.empty() || grid.methods.empty() ||
      grid.repeats == 0)
    throw std::invalid_argument("bench grid is empty");

  std::vector<bench_record> records;
  std::set<std::tuple<method, std::size_t, std::size_t>> censored;
  std::mutex mu;

  for (std::size_t rep = 0; rep < grid.repeats; ++rep) {
    for (auto n : grid.n_values) {
      for (auto m : grid.m_values) {
        generator_config cfg;
        cfg.n = n;
        cfg.m = m;
        cfg.seed = grid.seed + rep;
        const auto net = generate(cfg);
        std::optional<size_distribution> truth;
        if (grid.accuracy) truth = size_distribution_of(run(net));

        const std::size_t first = records.size();
        for (auto which : grid.methods) {
          bench_record r;
          r.which = which;
          r.n = n;
          r.m = m;
          r.repeat = rep;
          r.seed = cfg.seed;
          r.registers = grid.params.registers;
          if (which == method::hashed || which == method::hashed_parallel) {
            r.hash_count = grid.params.hash_count;
            r.n_super = grid.params.n_super.value_or(default_super_nodes(n));
          }
          r.skipped = censored.count({which, n, m}) > 0;
          records.push_back(r);
        }

        std::atomic<std::size_t> next{first};
        auto worker = [&] {
          for (std::size_t i; (i = next.fetch_add(1)) < records.size();) {
            auto& r = records[i];
            if (r.skipped) continue;
            const auto res = run_method(r.which, net, grid.params);
            r.wall_time = res.wall_time;
            r.logical_memory = res.logical_memory;
            r.peak_rss = memory::peak_rss_bytes();
            if (truth && res.sizes) r.acc = accuracy(*truth, *res.sizes);
            if (grid.timeout_seconds > 0.0 && r.wall_time > grid.timeout_seconds) {
              r.censored = true;
              std::lock_guard lock(mu);
              censored.insert({r.which, r.n, r.m});
            }
          }
        };
        const std::size_t jobs = std::max<std::size_t>(1, grid.jobs);
        std::vector<std::jthread> pool;
        for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
      }
    }
  }
  return records;
}

void write_bench_header(std::ostream& out) {
  out << "method,n,m,n_super,K,s,seed,repeat,wall_time,logical_memory,"
         "peak_rss,acc,censored\n";
}

void write_bench_rows(std::ostream& out, const std::vector<bench_record>& rows) {
  for (const auto& r : rows) {
    if (r.skipped) continue;
    out << method_name(r.which) << ',' << r.n << ',' << r.m << ','
        << r.n_super << ',' << r.hash_count << ',' << r.registers << ','
        << r.seed << ',' << r.repeat << ',' << format_double(r.wall_time)
        << ',' << r.logical_memory << ',' << r.peak_rss << ','
        << (r.acc ? format_double(*r.acc) : std::string()) << ','
        << (r.censored ? 1 : 0) << '\n';
  }
}

std::vector<ratio_row> ratio_table(const std::vector<bench_record>& rows,
                                   method baseline) {
  struct cell {
    std::vector<double> times;
    std::size_t memory = 0;
  };
  std::map<std::tuple<method, std::size_t, std::size_t>, cell> cells;
  for (const auto& r : rows) {
    if (r.skipped || r.censored) continue;
    auto& c = cells[{r.which, r.n, r.m}];
    c.times.push_back(r.wall_time);
    c.memory = r.logical_memory;
  }
  std::vector<ratio_row> out;
  for (const auto& [key, c] : cells) {
    const auto& [which, n, m] = key;
    auto base = cells.find({baseline, n, m});
    if (base == cells.end()) continue;
    out.push_back({which, n, m, median(c.times) / median(base->second.times),
                   static_cast<double>(c.memory) /
                       static_cast<double>(base->second.memory)});
  }
  return out;
}

void write_ratio_csv(std::ostream& out, const std::vector<ratio_row>& rows,
                     method baseline) {
  out << "method,n,m,baseline,time_ratio,memory_ratio\n";
  for (const auto& r : rows)
    out << method_name(r.which) << ',' << r.n << ',' << r.m << ','
        << method_name(baseline) << ',' << format_double(r.time_ratio) << ','
        << format_double(r.memory_ratio) << '\n';
}

}  // namespace tempreach
