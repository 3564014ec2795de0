#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tempreach/bits.hpp"
#include "tempreach/metrics.hpp"
#include "tempreach/tabulation_hash.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

// ceil(0.3 * n), at least 1.
std::size_t default_super_nodes(std::size_t n) noexcept;
inline constexpr std::size_t default_hash_count = 5;

// A temporal network relabeled through a hash: every event (u, v, t) becomes
// the super-event (h(u), h(v), t) over n_super super-nodes.
class hashed_network {
 public:
  const tabulation_hash& hash() const noexcept { return hash_; }
  std::size_t n() const noexcept { return image_.size(); }
  std::size_t n_super() const noexcept { return hash_.n_super(); }
  const temporal_network& super_network() const noexcept { return super_; }

  // image()[u] = h(u) for every original node u.
  std::span<const node_id> image() const noexcept { return image_; }
  // Row x is the preimage h^-1(x) as a bit set over the original nodes.
  const bit_matrix& preimages() const noexcept { return preimages_; }

 private:
  friend hashed_network compress(const temporal_network&, const tabulation_hash&);
  explicit hashed_network(tabulation_hash h) : hash_(std::move(h)) {}

  tabulation_hash hash_;
  temporal_network super_;
  std::vector<node_id> image_;
  bit_matrix preimages_;
};

hashed_network compress(const temporal_network& net, const tabulation_hash& h);

// Union of the preimages of the given super-nodes. Throws std::out_of_range
// for a super-node id >= n_super, data_error for a wrongly sized set.
bit_vector expand_out_component(const hashed_network& hn,
                                std::span<const node_id> super_nodes);
bit_vector expand_out_component(const hashed_network& hn,
                                const bit_vector& super_oc);

// Row x = h^-1(OC(x)) for every super-node x, the out-components being read
// from the forward matrix of the super network (or from the reversed pass).
bit_matrix expanded_components(const hashed_network& hn,
                               bool reversed_pass = false);

// Per-node estimated out-components: the intersection over K hashes of the
// expanded out-component of each node's super-node. Always a superset of the
// true out-component.
class fused_estimate {
 public:
  fused_estimate(std::size_t n, std::size_t hash_count);

  std::size_t n() const noexcept { return sets_.rows(); }
  std::size_t hash_count() const noexcept { return hash_count_; }
  const bit_matrix& sets() const noexcept { return sets_; }
  bit_vector component(node_id u) const { return sets_.row_vector(u); }

 private:
  friend fused_estimate fuse_serial(const temporal_network&,
                                    std::span<const tabulation_hash>, bool);
  friend fused_estimate fuse_parallel(const temporal_network&,
                                      std::span<const tabulation_hash>, bool);
  bit_matrix sets_;
  std::size_t hash_count_;
};

struct fusion_options {
  bool parallel = false;
  bool reversed_pass = false;
  unsigned order = tabulation_hash::default_order;
};

// Reference pipeline: one hash at a time, folding each into the running AND.
fused_estimate fuse_serial(const temporal_network& net,
                           std::span<const tabulation_hash> family,
                           bool reversed_pass = false);
// The K compress -> matrix -> expand pipelines run concurrently, then the
// AND reduction runs in parallel over nodes. Same result as fuse_serial.
fused_estimate fuse_parallel(const temporal_network& net,
                             std::span<const tabulation_hash> family,
                             bool reversed_pass = false);

// Draws K hashes from `seed` (see make_hash_family) and fuses them.
fused_estimate fused_out_components(const temporal_network& net,
                                    std::size_t n_super, std::size_t hash_count,
                                    std::uint64_t seed,
                                    const fusion_options& opts = {});

size_distribution fused_size_distribution(const fused_estimate& fe);

}  // namespace tempreach
