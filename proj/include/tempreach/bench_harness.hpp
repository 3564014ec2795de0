#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempreach/bits.hpp"
#include "tempreach/hll.hpp"
#include "tempreach/metrics.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

enum class method {
  eg_hll,
  matrix,
  matrix_rev,
  matrix_hll,
  matrix_rev_hll,
  hashed,
  hashed_parallel,
};

std::string_view method_name(method m) noexcept;
// Throws std::invalid_argument for an unknown name.
method parse_method(std::string_view name);
// Methods computing exact out-component sets.
bool is_exact(method m) noexcept;
// matrix_hll only yields the mean size.
bool yields_distribution(method m) noexcept;

struct method_params {
  std::size_t registers = default_registers;
  std::optional<std::size_t> n_super;  // default ceil(0.3 n)
  std::size_t hash_count = 5;
  std::uint64_t seed = 1;              // hash family seed
  std::uint64_t salt = default_sketch_salt;
  std::optional<double> delta_t;       // event graph window
};

struct method_result {
  std::optional<size_distribution> sizes;
  double average = 0.0;
  // Out-component sets (exact methods) or fused estimates (hashed), when kept.
  std::optional<bit_matrix> sets;
  std::size_t logical_memory = 0;
  double wall_time = 0.0;
  std::size_t n_super = 0;
};

// Runs one method on a network, timing only the computation.
method_result run_method(method m, const temporal_network& net,
                         const method_params& params, bool keep_sets = false);

struct bench_grid {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> m_values;
  std::vector<method> methods;
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
  method_params params;
  // Cells slower than this are marked censored and their remaining repeats
  // skipped; 0 disables the check.
  double timeout_seconds = 0.0;
  std::size_t jobs = 1;
  bool accuracy = true;  // compute Acc against the exact matrix distribution
};

struct bench_record {
  method which = method::matrix;
  std::size_t n = 0, m = 0, n_super = 0, hash_count = 0, registers = 0;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  double wall_time = 0.0;
  std::size_t logical_memory = 0;
  std::size_t peak_rss = 0;
  std::optional<double> acc;
  bool censored = false;
  bool skipped = false;
};

// Throws std::invalid_argument for an empty grid.
std::vector<bench_record> run_bench(const bench_grid& grid);

void write_bench_header(std::ostream& out);
void write_bench_rows(std::ostream& out, const std::vector<bench_record>& rows);

struct ratio_row {
  method which;
  std::size_t n, m;
  double time_ratio;    // median wall time / baseline median wall time
  double memory_ratio;  // logical memory / baseline logical memory
};

// One row per (method, n, m) that has an uncensored baseline cell.
std::vector<ratio_row> ratio_table(const std::vector<bench_record>& rows,
                                   method baseline);
void write_ratio_csv(std::ostream& out, const std::vector<ratio_row>& rows,
                     method baseline);

}  // namespace tempreach
