#include "tempreach/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tempreach/errors.hpp"

namespace tempreach {

namespace {

// splitmix64 stream: fully specified, so sequences match on every platform.
std::uint64_t next_u64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double next_unit(std::uint64_t& state) noexcept {
  return static_cast<double>(next_u64(state) >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::uint64_t& state, std::uint64_t bound) noexcept {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64(state)) * bound) >> 64);
}

}  // namespace

std::vector<std::pair<node_id, node_id>> sample_er_edges(std::size_t n, double p,
                                                         std::uint64_t& state) {
  std::vector<std::pair<node_id, node_id>> edges;
  if (p >= 1.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        edges.emplace_back(static_cast<node_id>(i), static_cast<node_id>(j));
    return edges;
  }
  // Batagelj-Brandes: walk the pairs (w, v), w < v, skipping geometric gaps.
  const double log_q = std::log1p(-p);
  long long v = 1, w = -1;
  const auto nn = static_cast<long long>(n);
  while (v < nn) {
    const double r = next_unit(state);
    w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn)
      edges.emplace_back(static_cast<node_id>(w), static_cast<node_id>(v));
  }
  return edges;
}

std::pair<temporal_network, std::vector<std::pair<node_id, node_id>>>
generate_with_edges(const generator_config& cfg) {
  const double p = cfg.wiring_probability();
  if (cfg.n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("wiring probability must lie in (0, 1]");
  const double horizon =
      cfg.time_horizon.value_or(static_cast<double>(std::max<std::size_t>(cfg.m, 1)));
  if (!(horizon > 0.0)) throw std::invalid_argument("time horizon must be > 0");

  std::uint64_t state = cfg.seed;
  std::vector<std::pair<node_id, node_id>> edges;
  for (int attempt = 0; attempt < 100 && edges.empty(); ++attempt)
    edges = sample_er_edges(cfg.n, p, state);
  if (edges.empty())
    throw data_error("sampled graph has no edges after 100 attempts");

  std::vector<event> events(cfg.m);
  for (auto& e : events) {
    const auto& [a, b] = edges[next_below(state, edges.size())];
    e = {a, b, next_unit(state) * horizon};
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const event& x, const event& y) { return x.t < y.t; });
  return {temporal_network(cfg.n, std::move(events)), std::move(edges)};
}

temporal_network generate(const generator_config& cfg) {
  return generate_with_edges(cfg).first;
}

}  // namespace tempreach
