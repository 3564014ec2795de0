#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tempreach/temporal_network.hpp"

namespace tempreach {

struct generator_config {
  std::size_t n = 100;
  std::size_t m = 10'000;
  // Wiring probability of the underlying G(n, p); defaults to 2 / n.
  std::optional<double> p;
  std::uint64_t seed = 1;
  // Events fall uniformly in [0, time_horizon); defaults to m.
  std::optional<double> time_horizon;

  double wiring_probability() const {
    return p.value_or(2.0 / static_cast<double>(n));
  }
};

// Static G(n, p) edge list (i < j), sampled by geometric skipping.
std::vector<std::pair<node_id, node_id>> sample_er_edges(std::size_t n, double p,
                                                         std::uint64_t& state);

// ER graph with a Poisson contact process on every edge, conditioned on
// exactly m events in total: each event takes a uniform edge and a uniform
// timestamp, then events are sorted by time. Edgeless draws are resampled up
// to 100 times before data_error. Throws std::invalid_argument for n < 2,
// p outside (0, 1], or a non-positive horizon. Deterministic in the seed.
temporal_network generate(const generator_config& cfg);

// As generate, also returning the sampled static edges.
std::pair<temporal_network, std::vector<std::pair<node_id, node_id>>>
generate_with_edges(const generator_config& cfg);

}  // namespace tempreach
