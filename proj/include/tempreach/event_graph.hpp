#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tempreach/hll.hpp"
#include "tempreach/metrics.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

using event_id = std::uint32_t;

// Static DAG whose vertices are the events of a forward temporal network and
// whose edges point from an event to later adjacent events, stored as CSR.
//
// Only the reduced adjacency is kept: on each endpoint an event links to the
// events of the next strictly later timestamp on that node, when the gap is
// within delta_t. Every other adjacent pair is reachable through a chain of
// such links, so event-to-event reachability is unchanged.
class event_graph {
 public:
  std::size_t m() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t eta() const noexcept { return targets_.size(); }
  std::optional<double> delta_t() const noexcept { return delta_t_; }

  std::span<const event_id> successors(event_id e) const noexcept {
    return {targets_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
  }
  // Inter-event time of each successor link, parallel to successors(e).
  std::span<const double> weights(event_id e) const noexcept {
    return {weights_.data() + offsets_[e], offsets_[e + 1] - offsets_[e]};
  }

  // Structure entries held: m offsets plus eta targets.
  std::size_t structure_entries() const noexcept { return m() + eta(); }

 private:
  friend event_graph build_event_graph(const temporal_network&,
                                       std::optional<double>);
  std::vector<std::size_t> offsets_;
  std::vector<event_id> targets_;
  std::vector<double> weights_;
  std::optional<double> delta_t_;
};

// Throws data_error for a reversed network.
event_graph build_event_graph(const temporal_network& net,
                              std::optional<double> delta_t = std::nullopt);

struct eg_sweep_stats {
  std::size_t peak_live_sketches = 0;
};

// Sweeps events last-first. Each event's sketch holds its endpoints merged
// with the sketches of its successors; a node's maximum out-component size is
// the estimate at its first event (1 for nodes without events). Estimates are
// clamped to [1, n]. A sketch is released once all its predecessors have
// consumed it.
size_distribution eg_out_component_sizes(const event_graph& eg,
                                         const temporal_network& net,
                                         std::size_t registers = default_registers,
                                         std::uint64_t salt = default_sketch_salt,
                                         eg_sweep_stats* stats = nullptr);

}  // namespace tempreach
