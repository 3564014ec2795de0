#include "tempreach/compression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tempreach/component_matrix.hpp"
#include "tempreach/errors.hpp"

namespace tempreach {

std::size_t default_super_nodes(std::size_t n) noexcept {
  // Integer form of ceil(0.3 * n), exact for any n.
  return std::max<std::size_t>(1, (3 * n + 9) / 10);
}

hashed_network compress(const temporal_network& net, const tabulation_hash& h) {
  if (net.order() != time_order::forward)
    throw data_error("compress expects a chronological network");
  hashed_network hn(h);
  hn.image_.resize(net.n());
  hn.preimages_ = bit_matrix(h.n_super(), net.n());
  for (std::size_t u = 0; u < net.n(); ++u) {
    const auto x = static_cast<node_id>(h(u));
    hn.image_[u] = x;
    hn.preimages_.set(x, u);
  }
  std::vector<event> super_events;
  super_events.reserve(net.m());
  for (const auto& e : net.events())
    super_events.push_back({hn.image_[e.u], hn.image_[e.v], e.t});
  hn.super_ = temporal_network(h.n_super(), std::move(super_events));
  return hn;
}

bit_vector expand_out_component(const hashed_network& hn,
                                std::span<const node_id> super_nodes) {
  bit_vector out(hn.n());
  for (auto x : super_nodes) {
    if (x >= hn.n_super())
      throw std::out_of_range("super-node " + std::to_string(x) +
                              " >= n_super");
    or_into(out.words(), hn.preimages().row(x));
  }
  return out;
}

bit_vector expand_out_component(const hashed_network& hn,
                                const bit_vector& super_oc) {
  if (super_oc.size() != hn.n_super())
    throw data_error("super-node set has the wrong size");
  return expand_out_component(hn, super_oc.indices());
}

bit_matrix expanded_components(const hashed_network& hn, bool reversed_pass) {
  const auto s = reversed_pass ? run_reversed(hn.super_network())
                               : run(hn.super_network());
  const bit_matrix super_oc = out_components(s);
  bit_matrix expanded(hn.n_super(), hn.n());
  for (std::size_t x = 0; x < hn.n_super(); ++x) {
    auto dst = expanded.row(x);
    auto src = super_oc.row(x);
    for (std::size_t w = 0; w < src.size(); ++w)
      for (auto bits = src[w]; bits != 0; bits &= bits - 1)
        or_into(dst, hn.preimages().row(w * word_bits +
                                        static_cast<std::size_t>(std::countr_zero(bits))));
  }
  return expanded;
}

fused_estimate::fused_estimate(std::size_t n, std::size_t hash_count)
    : sets_(n, n), hash_count_(hash_count) {
  for (std::size_t u = 0; u < n; ++u) {
    auto r = sets_.row(u);
    std::fill(r.begin(), r.end(), ~std::uint64_t{0});
    if (n % word_bits != 0)
      r.back() = (std::uint64_t{1} << (n % word_bits)) - 1;
  }
}

fused_estimate fuse_serial(const temporal_network& net,
                           std::span<const tabulation_hash> family,
                           bool reversed_pass) {
  if (family.empty()) throw std::invalid_argument("need at least one hash");
  fused_estimate fe(net.n(), family.size());
  for (const auto& h : family) {
    const auto hn = compress(net, h);
    const auto expanded = expanded_components(hn, reversed_pass);
    for (std::size_t u = 0; u < net.n(); ++u)
      and_into(fe.sets_.row(u), expanded.row(hn.image()[u]));
  }
  return fe;
}

fused_estimate fuse_parallel(const temporal_network& net,
                             std::span<const tabulation_hash> family,
                             bool reversed_pass) {
  if (family.empty()) throw std::invalid_argument("need at least one hash");
  const auto k = static_cast<std::ptrdiff_t>(family.size());
  std::vector<bit_matrix> expanded(family.size());
  std::vector<std::vector<node_id>> images(family.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t j = 0; j < k; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const auto hn = compress(net, family[idx]);
    expanded[idx] = expanded_components(hn, reversed_pass);
    images[idx].assign(hn.image().begin(), hn.image().end());
  }

  fused_estimate fe(net.n(), family.size());
  const auto n = static_cast<std::ptrdiff_t>(net.n());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    const auto idx = static_cast<std::size_t>(u);
    for (std::size_t j = 0; j < family.size(); ++j)
      and_into(fe.sets_.row(idx), expanded[j].row(images[j][idx]));
  }
  return fe;
}

fused_estimate fused_out_components(const temporal_network& net,
                                    std::size_t n_super, std::size_t hash_count,
                                    std::uint64_t seed,
                                    const fusion_options& opts) {
  if (hash_count == 0) throw std::invalid_argument("K must be >= 1");
  const auto family = make_hash_family(seed, n_super, hash_count, opts.order);
  return opts.parallel ? fuse_parallel(net, family, opts.reversed_pass)
                       : fuse_serial(net, family, opts.reversed_pass);
}

size_distribution fused_size_distribution(const fused_estimate& fe) {
  std::vector<double> sizes(fe.n());
  for (std::size_t u = 0; u < fe.n(); ++u)
    sizes[u] = static_cast<double>(fe.sets().row_count(u));
  return size_distribution(std::move(sizes));
}

}  // namespace tempreach
