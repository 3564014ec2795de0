#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>

#include "tempreach/bits.hpp"
#include "tempreach/metrics.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

// n x n reachability matrix built by streaming OR-updates over events.
//
// Forward orientation (events fed chronologically): row i is the in-component
// of i and column j is the out-component of j. Reversed orientation (events
// fed last-first): row i is the out-component of i. The diagonal is always set.
class component_matrix {
 public:
  // Identity matrix over n nodes; throws std::invalid_argument for n == 0.
  explicit component_matrix(std::size_t n,
                            time_order orientation = time_order::forward);

  std::size_t n() const noexcept { return bits_.rows(); }
  time_order orientation() const noexcept { return orientation_; }
  const bit_matrix& bits() const noexcept { return bits_; }

  // Rows u and v both become row(u) | row(v). Throws std::out_of_range for an
  // endpoint >= n. Self-loops are no-ops.
  void apply(const event& e);
  void apply(std::span<const event> events) {
    for (const auto& e : events) apply(e);
  }

  // New node with only its diagonal bit set; returns its id.
  node_id add_node();

  std::size_t total_count() const noexcept { return bits_.total_count(); }

  friend bool operator==(const component_matrix&,
                         const component_matrix&) = default;

 private:
  bit_matrix bits_;
  time_order orientation_;
};

// Feeds every event of a forward network once, in stored order.
component_matrix run(const temporal_network& net);
// Same OR-update pass over reverse(net); rows hold out-components.
component_matrix run_reversed(const temporal_network& net);

// Nodes reachable from u (always contains u). Forward: column u. Reversed: row u.
bit_vector out_component(const component_matrix& s, node_id u);

// All out-components as rows of an n x n matrix (a transpose for forward
// orientation, a copy for reversed).
bit_matrix out_components(const component_matrix& s);

// |out_component(u)| for every u.
size_distribution size_distribution_of(const component_matrix& s);

// Total set bits / n: the mean in-component size, which equals the mean
// out-component size.
double average_component_size(const component_matrix& s);

// Column popcounts: OpenMP kernel and the serial reference it is tested against.
std::vector<std::size_t> column_counts(const bit_matrix& m);
std::vector<std::size_t> column_counts_serial(const bit_matrix& m);

// Binary export: 8-byte little-endian n, then the rows (see bit_matrix).
void write_matrix(std::ostream& out, const component_matrix& s);

}  // namespace tempreach
