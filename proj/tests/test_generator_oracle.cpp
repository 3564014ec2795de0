#include <algorithm>
#include <cmath>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "tempreach/component_matrix.hpp"
#include "tempreach/generator.hpp"
#include "tempreach/oracle.hpp"

using namespace tempreach;

TEST_CASE("generate produces exactly m events on sampled edges") {
  const auto [net, edges] = generate_with_edges({.n = 100, .m = 10'000, .seed = 42});
  CHECK(net.n() == 100);
  CHECK(net.m() == 10'000);
  const std::set<std::pair<node_id, node_id>> edge_set(edges.begin(), edges.end());
  for (const auto& e : net.events()) {
    CHECK(e.u < e.v);
    CHECK(edge_set.count({e.u, e.v}) == 1);
    CHECK(e.t >= 0.0);
    CHECK(e.t < 10'000.0);
  }
  CHECK(std::is_sorted(net.events().begin(), net.events().end(),
                       [](const event& a, const event& b) { return a.t < b.t; }));
  // Real-valued timestamps: ties have probability zero.
  for (std::size_t i = 1; i < net.m(); ++i)
    CHECK(net.events()[i - 1].t < net.events()[i].t);
}

TEST_CASE("generate is deterministic in the seed") {
  const auto a = generate({.n = 50, .m = 500, .seed = 7});
  const auto b = generate({.n = 50, .m = 500, .seed = 7});
  const auto c = generate({.n = 50, .m = 500, .seed = 8});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(generate({.n = 1, .m = 10}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.n = 10, .m = 10, .p = 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.n = 10, .m = 10, .p = 1.5}), std::invalid_argument);
  CHECK(generate({.n = 10, .m = 0}).m() == 0);
  CHECK(generate({.n = 4, .m = 5, .p = 1.0, .seed = 1, .time_horizon = 2.0})
            .events()
            .back()
            .t < 2.0);
}

TEST_CASE("ER mean degree matches n p") {
  const std::size_t n = 100, seeds = 100;
  const double p = 2.0 / n;
  const double pairs = n * (n - 1) / 2.0;
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
    std::uint64_t state = seed;
    sum += 2.0 * static_cast<double>(sample_er_edges(n, p, state).size()) / n;
  }
  const double mean = sum / seeds;
  const double expected = 2.0 * pairs * p / n;
  const double sigma = 2.0 * std::sqrt(pairs * p * (1 - p)) / n / std::sqrt(seeds);
  CHECK(std::abs(mean - expected) <= 3 * sigma);
}

TEST_CASE("ER sampler covers every pair at p = 1 and none twice") {
  std::uint64_t state = 3;
  const auto full = sample_er_edges(12, 1.0, state);
  CHECK(full.size() == 66);
  const auto half = sample_er_edges(200, 0.5, state);
  const std::set<std::pair<node_id, node_id>> unique(half.begin(), half.end());
  CHECK(unique.size() == half.size());
  for (auto [a, b] : half) CHECK(a < b);
}

TEST_CASE("si_oracle hand traces") {
  const temporal_network none(3, {});
  CHECK(si_oracle(none, 1).indices() == std::vector<node_id>{1});

  const temporal_network chain(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  CHECK(si_oracle(chain, 0).indices() == std::vector<node_id>{0, 1, 2});
  // (0,1) at t=1 precedes (1,2) at t=2, so 2 never reaches 0.
  CHECK(si_oracle(chain, 2).indices() == std::vector<node_id>{1, 2});
  CHECK_THROWS_AS(si_oracle(chain, 3), std::out_of_range);
}

TEST_CASE("complete temporal mixing reaches everyone") {
  const std::size_t n = 7;
  std::vector<event> ev;
  double t = 0.0;
  for (int round = 0; round < 2; ++round)
    for (node_id a = 0; a < n; ++a)
      for (node_id b = a + 1; b < n; ++b) ev.push_back({a, b, t += 1.0});
  const auto d = all_components_oracle(temporal_network(n, ev));
  for (double x : d.values()) CHECK(x == static_cast<double>(n));
}

TEST_CASE("oracle equals the matrix on random small instances") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const std::size_t n = 2 + seed % 49;
    const std::size_t m = (seed * 37) % 501;
    const auto net = generate({.n = n, .m = m, .p = 0.15, .seed = seed});
    CHECK(all_components_oracle(net) == size_distribution_of(run(net)));
    CHECK(all_components_oracle_sets(net) == out_components(run(net)));
  }
}
