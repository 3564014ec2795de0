#pragma once

#include "tempreach/bits.hpp"
#include "tempreach/metrics.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

// Deterministic SI spreading from `source`: sweep the events in stored order,
// and any event touching an infected node infects both endpoints. The final
// infected set is the maximum out-component of the source. Throws
// std::out_of_range for source >= n.
bit_vector si_oracle(const temporal_network& net, node_id source);

// Row u = si_oracle(net, u). O(n m) time; sources run in parallel.
bit_matrix all_components_oracle_sets(const temporal_network& net);

size_distribution all_components_oracle(const temporal_network& net);

}  // namespace tempreach
