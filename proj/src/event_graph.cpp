#include "tempreach/event_graph.hpp"

#include <algorithm>
#include <limits>

#include "tempreach/errors.hpp"

namespace tempreach {

event_graph build_event_graph(const temporal_network& net,
                              std::optional<double> delta_t) {
  if (net.order() != time_order::forward)
    throw data_error("event graph needs a chronological network");
  if (net.m() >= std::numeric_limits<event_id>::max())
    throw data_error("too many events for 32-bit event ids");

  const auto events = net.events();
  const std::size_t m = events.size();

  // Event ids per node in chronological order; a self-loop is listed once.
  std::vector<std::size_t> node_start(net.n() + 1, 0);
  for (const auto& e : events) {
    ++node_start[e.u + 1];
    if (e.v != e.u) ++node_start[e.v + 1];
  }
  for (std::size_t i = 0; i < net.n(); ++i) node_start[i + 1] += node_start[i];
  std::vector<event_id> incidence(node_start.back());
  {
    auto fill = node_start;
    for (event_id id = 0; id < m; ++id) {
      incidence[fill[events[id].u]++] = id;
      if (events[id].v != events[id].u) incidence[fill[events[id].v]++] = id;
    }
  }

  std::vector<std::vector<event_id>> succ(m);
  for (std::size_t node = 0; node < net.n(); ++node) {
    const std::span<const event_id> list(incidence.data() + node_start[node],
                                         node_start[node + 1] - node_start[node]);
    std::size_t group = 0;
    while (group < list.size()) {
      const double t = events[list[group]].t;
      std::size_t next = group;
      while (next < list.size() && events[list[next]].t == t) ++next;
      std::size_t after = next;
      if (next < list.size()) {
        const double t_next = events[list[next]].t;
        while (after < list.size() && events[list[after]].t == t_next) ++after;
        if (!delta_t || t_next - t <= *delta_t) {
          for (std::size_t a = group; a < next; ++a)
            for (std::size_t b = next; b < after; ++b)
              succ[list[a]].push_back(list[b]);
        }
      }
      group = next;
    }
  }

  event_graph eg;
  eg.delta_t_ = delta_t;
  eg.offsets_.assign(m + 1, 0);
  for (std::size_t id = 0; id < m; ++id) {
    auto& s = succ[id];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    eg.offsets_[id + 1] = eg.offsets_[id] + s.size();
  }
  eg.targets_.reserve(eg.offsets_.back());
  eg.weights_.reserve(eg.offsets_.back());
  for (std::size_t id = 0; id < m; ++id) {
    for (auto target : succ[id]) {
      eg.targets_.push_back(target);
      eg.weights_.push_back(events[target].t - events[id].t);
    }
  }
  return eg;
}

size_distribution eg_out_component_sizes(const event_graph& eg,
                                         const temporal_network& net,
                                         std::size_t registers,
                                         std::uint64_t salt,
                                         eg_sweep_stats* stats) {
  if (eg.m() != net.m())
    throw data_error("event graph does not match the network");
  const auto events = net.events();
  const std::size_t m = events.size();

  std::vector<std::uint32_t> pending(m, 0);
  for (event_id e = 0; e < m; ++e)
    for (auto f : eg.successors(e)) ++pending[f];

  std::vector<std::optional<hll_sketch>> live(m);
  std::vector<hll_sketch> pool;
  std::size_t live_count = 0, peak = 0;
  std::vector<double> sizes(net.n(), 1.0);
  const double n = static_cast<double>(net.n());

  for (std::size_t k = m; k-- > 0;) {
    const auto e = static_cast<event_id>(k);
    hll_sketch sk = pool.empty() ? hll_sketch(registers, salt)
                                 : std::move(pool.back());
    if (!pool.empty()) {
      pool.pop_back();
      sk.clear();
    }
    sk.add(events[e].u);
    sk.add(events[e].v);
    for (auto f : eg.successors(e)) {
      sk.merge(*live[f]);
      if (--pending[f] == 0) {
        pool.push_back(std::move(*live[f]));
        live[f].reset();
        --live_count;
      }
    }
    const double est = std::clamp(sk.estimate(), 1.0, n);
    sizes[events[e].u] = est;
    sizes[events[e].v] = est;
    if (pending[e] > 0) {
      live[e] = std::move(sk);
      peak = std::max(peak, ++live_count);
    } else {
      pool.push_back(std::move(sk));
    }
  }
  if (stats) stats->peak_live_sketches = peak;
  return size_distribution(std::move(sizes));
}

}  // namespace tempreach
