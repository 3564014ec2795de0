#include "tempreach/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tempreach {

bit_vector si_oracle(const temporal_network& net, node_id source) {
  if (source >= net.n())
    throw std::out_of_range("source " + std::to_string(source) + " >= n");
  std::vector<char> infected(net.n(), 0);
  infected[source] = 1;
  for (const auto& e : net.events()) {
    if (infected[e.u] || infected[e.v]) {
      infected[e.u] = 1;
      infected[e.v] = 1;
    }
  }
  bit_vector out(net.n());
  for (std::size_t i = 0; i < net.n(); ++i)
    if (infected[i]) out.set(i);
  return out;
}

bit_matrix all_components_oracle_sets(const temporal_network& net) {
  bit_matrix sets(net.n(), net.n());
  const auto n = static_cast<std::ptrdiff_t>(net.n());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t u = 0; u < n; ++u)
    sets.assign_row(static_cast<std::size_t>(u),
                    si_oracle(net, static_cast<node_id>(u)));
  return sets;
}

size_distribution all_components_oracle(const temporal_network& net) {
  const auto sets = all_components_oracle_sets(net);
  std::vector<double> sizes(net.n());
  for (std::size_t u = 0; u < net.n(); ++u)
    sizes[u] = static_cast<double>(sets.row_count(u));
  return size_distribution(std::move(sizes));
}

}  // namespace tempreach
