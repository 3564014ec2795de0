#include <numeric>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "tempreach/component_matrix.hpp"
#include "tempreach/compression.hpp"
#include "tempreach/errors.hpp"
#include "tempreach/generator.hpp"
#include "tempreach/metrics.hpp"

using namespace tempreach;

namespace {

// First seed whose hash is injective on [0, n).
tabulation_hash injective_hash(std::size_t n, std::size_t n_super,
                               std::uint64_t start) {
  for (std::uint64_t seed = start;; ++seed) {
    tabulation_hash h(seed, n_super);
    std::vector<char> used(n_super, 0);
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      ok = !used[h(u)];
      used[h(u)] = 1;
    }
    if (ok) return h;
  }
}

}  // namespace

TEST_CASE("default super node count") {
  CHECK(default_super_nodes(1000) == 300);
  CHECK(default_super_nodes(10) == 3);
  CHECK(default_super_nodes(11) == 4);
  CHECK(default_super_nodes(1) == 1);
  CHECK(default_super_nodes(0) == 1);
}

TEST_CASE("compress keeps events and partitions nodes") {
  const auto net = generate({.n = 80, .m = 500, .seed = 3});
  const tabulation_hash h(11, 24);
  const auto hn = compress(net, h);
  CHECK(hn.n() == 80);
  CHECK(hn.n_super() == 24);
  REQUIRE(hn.super_network().m() == net.m());
  for (std::size_t i = 0; i < net.m(); ++i) {
    const auto& e = net.events()[i];
    const auto& s = hn.super_network().events()[i];
    CHECK(s.u == h(e.u));
    CHECK(s.v == h(e.v));
    CHECK(s.t == e.t);
  }
  bit_vector all(80);
  std::size_t total = 0;
  for (std::size_t x = 0; x < 24; ++x) {
    const auto pre = hn.preimages().row_vector(x);
    bit_vector overlap = pre;
    overlap &= all;
    CHECK(overlap.count() == 0);
    all |= pre;
    total += pre.count();
  }
  CHECK(all.count() == 80);
  CHECK(total == 80);
}

TEST_CASE("compress with one super-node makes self-loops") {
  const auto net = generate({.n = 20, .m = 100, .seed = 1});
  const auto hn = compress(net, tabulation_hash(1, 1));
  for (const auto& e : hn.super_network().events()) {
    CHECK(e.u == 0);
    CHECK(e.v == 0);
  }
}

TEST_CASE("injective compression is a relabeling") {
  const auto net = generate({.n = 30, .m = 300, .seed = 12});
  const auto h = injective_hash(30, 200, 1);
  const auto hn = compress(net, h);
  const auto original = run(net);
  const auto hashed = run(hn.super_network());
  for (node_id u = 0; u < 30; ++u) {
    const auto oc = out_component(original, u);
    const auto super_oc = out_component(hashed, hn.image()[u]);
    CHECK(expand_out_component(hn, super_oc) == oc);
  }
}

TEST_CASE("expand_out_component") {
  const auto net = generate({.n = 50, .m = 200, .seed = 4});
  const auto hn = compress(net, tabulation_hash(3, 15));
  CHECK(expand_out_component(hn, bit_vector(15, true)).count() == 50);
  for (node_id u = 0; u < 50; ++u) {
    const node_id x = hn.image()[u];
    CHECK(expand_out_component(hn, std::span<const node_id>(&x, 1)).test(u));
  }
  std::mt19937 gen(5);
  for (int k = 0; k < 20; ++k) {
    bit_vector pick(15);
    std::size_t expected = 0;
    for (std::size_t x = 0; x < 15; ++x)
      if (gen() % 2) {
        pick.set(x);
        expected += hn.preimages().row_count(x);
      }
    CHECK(expand_out_component(hn, pick).count() == expected);
  }
  const node_id bad = 15;
  CHECK_THROWS_AS(expand_out_component(hn, std::span<const node_id>(&bad, 1)),
                  std::out_of_range);
  CHECK_THROWS_AS(expand_out_component(hn, bit_vector(14)), data_error);
}

TEST_CASE("degenerate fusion with one super-node covers everything") {
  const auto net = generate({.n = 25, .m = 100, .seed = 2});
  const auto fe = fused_out_components(net, 1, 1, 7);
  for (node_id u = 0; u < 25; ++u) CHECK(fe.component(u).count() == 25);
  CHECK_THROWS_AS(fused_out_components(net, 5, 0, 7), std::invalid_argument);
}

TEST_CASE("fusion superset and K-monotonicity") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto net = generate({.n = 120, .m = 3000, .seed = seed});
    const auto truth = out_components(run(net));
    const auto n_s = default_super_nodes(net.n());
    const auto family = make_hash_family(seed * 31, n_s, 5);
    std::optional<fused_estimate> prev;
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto fe = fuse_serial(net, std::span(family).first(k));
      for (node_id u = 0; u < net.n(); ++u) {
        const auto est = fe.component(u);
        CHECK(truth.row_vector(u).is_subset_of(est));
        CHECK(est.test(u));
        if (prev) CHECK(est.is_subset_of(prev->component(u)));
      }
      prev = fe;
    }
  }
}

TEST_CASE("parallel and reversed-pass fusion match the serial reference") {
  const auto net = generate({.n = 150, .m = 4000, .seed = 21});
  const auto family = make_hash_family(5, 45, 5);
  const auto ref = fuse_serial(net, family);
  CHECK(fuse_parallel(net, family).sets() == ref.sets());
  CHECK(fuse_serial(net, family, true).sets() == ref.sets());
  CHECK(fuse_parallel(net, family, true).sets() == ref.sets());
  const auto via_seed = fused_out_components(net, 45, 5, 5, {.parallel = true});
  CHECK(via_seed.sets() == ref.sets());
}

TEST_CASE("injective hashes recover the exact components") {
  const auto net = generate({.n = 40, .m = 600, .seed = 13});
  std::vector<tabulation_hash> family{injective_hash(40, 400, 1),
                                      injective_hash(40, 400, 1000)};
  const auto fe = fuse_serial(net, family);
  CHECK(fe.sets() == out_components(run(net)));
  CHECK(accuracy(size_distribution_of(run(net)), fused_size_distribution(fe)) == 0.0);
}

TEST_CASE("fusion is equivariant under node relabeling") {
  const std::size_t n = 60;
  const auto net = generate({.n = n, .m = 800, .seed = 14});
  std::vector<node_id> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(3));

  std::vector<event> relabeled;
  for (const auto& e : net.events()) relabeled.push_back({perm[e.u], perm[e.v], e.t});
  const temporal_network pnet(n, relabeled);

  // h'(perm(u)) = h(u): compress both and fuse by hand over the same buckets.
  const auto family = make_hash_family(9, 18, 3);
  const auto fe = fuse_serial(net, family);
  bit_matrix fused(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    auto r = fused.row(v);
    std::fill(r.begin(), r.end(), ~std::uint64_t{0});
    r.back() = (std::uint64_t{1} << n) - 1;
  }
  std::vector<node_id> inverse(n);
  for (node_id u = 0; u < n; ++u) inverse[perm[u]] = u;
  for (const auto& h : family) {
    std::vector<event> super;
    for (const auto& e : pnet.events())
      super.push_back({static_cast<node_id>(h(inverse[e.u])),
                       static_cast<node_id>(h(inverse[e.v])), e.t});
    const auto s = run(temporal_network(18, super));
    for (node_id v = 0; v < n; ++v) {
      const auto soc = out_component(s, static_cast<node_id>(h(inverse[v])));
      bit_vector expanded(n);
      for (node_id w = 0; w < n; ++w)
        if (soc.test(h(inverse[w]))) expanded.set(w);
      and_into(fused.row(v), expanded.words());
    }
  }
  for (node_id u = 0; u < n; ++u)
    for (node_id w = 0; w < n; ++w)
      CHECK(fe.sets().test(u, w) == fused.test(perm[u], perm[w]));
}

TEST_CASE("fused sizes bound the true sizes") {
  const auto net = generate({.n = 200, .m = 5000, .seed = 30});
  const auto exact = size_distribution_of(run(net));
  const auto est = fused_size_distribution(fused_out_components(net, 60, 3, 1));
  for (std::size_t u = 0; u < 200; ++u) {
    CHECK(est[u] >= exact[u]);
    CHECK(est[u] <= 200.0);
  }
}
