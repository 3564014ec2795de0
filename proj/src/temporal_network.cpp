#include "tempreach/temporal_network.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempreach/errors.hpp"

namespace tempreach {

bool adjacent(const event& a, const event& b, std::optional<double> delta_t) {
  const double gap = b.t - a.t;
  if (!(gap > 0.0)) return false;
  if (delta_t && gap > *delta_t) return false;
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

temporal_network::temporal_network(std::size_t n, std::vector<event> events,
                                   time_order order)
    : n_(n), events_(std::move(events)), order_(order) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const event& e = events_[i];
    if (e.u >= n_ || e.v >= n_)
      throw data_error("event " + std::to_string(i) + " has node id >= n (" +
                       std::to_string(n_) + ")");
    if (!std::isfinite(e.t))
      throw data_error("event " + std::to_string(i) +
                       " has a non-finite timestamp");
    if (i == 0) continue;
    const double prev = events_[i - 1].t;
    const bool ok = order_ == time_order::forward ? prev <= e.t : prev >= e.t;
    if (!ok)
      throw data_error("event " + std::to_string(i) + " is out of order");
  }
}

double temporal_network::time_span() const noexcept {
  if (events_.size() < 2) return 0.0;
  const double a = events_.front().t;
  const double b = events_.back().t;
  return std::abs(b - a);
}

temporal_network temporal_network::prefix(std::size_t count) const {
  count = std::min(count, events_.size());
  temporal_network out;
  out.n_ = n_;
  out.order_ = order_;
  out.events_.assign(events_.begin(), events_.begin() + count);
  return out;
}

temporal_network reverse(const temporal_network& net) {
  std::vector<event> events(net.events().rbegin(), net.events().rend());
  const auto order = net.order() == time_order::forward ? time_order::reversed
                                                         : time_order::forward;
  return temporal_network(net.n(), std::move(events), order);
}

void network_builder::add(const event& e) {
  if (!events_.empty() && e.t < events_.back().t)
    throw data_error("event at t=" + std::to_string(e.t) +
                     " precedes the last ingested event");
  if (!std::isfinite(e.t)) throw data_error("non-finite timestamp");
  n_ = std::max<std::size_t>(n_, std::size_t{std::max(e.u, e.v)} + 1);
  events_.push_back(e);
}

node_id network_builder::add_node() { return static_cast<node_id>(n_++); }

temporal_network network_builder::build() const& {
  return temporal_network(n_, events_);
}

temporal_network network_builder::build() && {
  return temporal_network(n_, std::move(events_));
}

}  // namespace tempreach
