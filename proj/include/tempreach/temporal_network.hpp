#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tempreach {

using node_id = std::uint32_t;

// A single undirected interaction (u, v) at time t. Durations are not modeled.
struct event {
  node_id u = 0;
  node_id v = 0;
  double t = 0.0;

  friend bool operator==(const event&, const event&) = default;
};

enum class time_order { forward, reversed };

// True iff b can follow a on a time-respecting path: the events share a node,
// b happens strictly later, and the gap does not exceed delta_t when given.
bool adjacent(const event& a, const event& b,
              std::optional<double> delta_t = std::nullopt);

// Immutable sequence of events over the dense node set [0, n).
//
// In forward order events are non-decreasing in t; a reversed network holds
// the same events last-first. Ties keep their stored order, and every
// algorithm in the library consumes events in that stored order.
class temporal_network {
 public:
  temporal_network() = default;

  // Throws data_error when an endpoint is >= n, a timestamp is not finite, or
  // the sequence is not monotone in the requested order.
  temporal_network(std::size_t n, std::vector<event> events,
                   time_order order = time_order::forward);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return events_.size(); }
  std::span<const event> events() const noexcept { return events_; }
  time_order order() const noexcept { return order_; }

  // max t - min t, or 0 with fewer than two events.
  double time_span() const noexcept;

  // First `count` events in stored order; node set unchanged.
  temporal_network prefix(std::size_t count) const;

  friend bool operator==(const temporal_network&,
                         const temporal_network&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<event> events_;
  time_order order_ = time_order::forward;
};

temporal_network reverse(const temporal_network& net);

// Incremental construction. The node count grows to cover every id seen and
// never shrinks; events must arrive in non-decreasing time.
class network_builder {
 public:
  explicit network_builder(std::size_t initial_nodes = 0) : n_(initial_nodes) {}

  void add(const event& e);
  // Reserves a fresh node id with no events.
  node_id add_node();

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return events_.size(); }

  temporal_network build() const&;
  temporal_network build() &&;

 private:
  std::size_t n_;
  std::vector<event> events_;
};

}  // namespace tempreach
