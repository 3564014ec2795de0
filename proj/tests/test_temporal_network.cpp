#include <cmath>
#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "tempreach/errors.hpp"
#include "tempreach/event_io.hpp"
#include "tempreach/generator.hpp"
#include "tempreach/temporal_network.hpp"

using namespace tempreach;

namespace {

loaded_network parse(const std::string& text, load_options opts = {}) {
  std::istringstream in(text);
  return read_events(in, opts);
}

}  // namespace

TEST_CASE("load_events parses u,v,t lines") {
  const auto loaded = parse("0,1,1.0\n1,2,2.0");
  CHECK(loaded.net.n() == 3);
  CHECK(loaded.net.m() == 2);
  CHECK_FALSE(loaded.labels.has_value());
  CHECK(loaded.net.events()[1] == event{1, 2, 2.0});
}

TEST_CASE("load_events sorts stably when asked") {
  const auto loaded = parse("1,2,2.0\n0,1,1.0\n5,6,1.0", {.sort = true});
  const auto ev = loaded.net.events();
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == event{0, 1, 1.0});
  CHECK(ev[1] == event{5, 6, 1.0});
  CHECK(ev[2] == event{1, 2, 2.0});
}

TEST_CASE("load_events rejects out-of-order input without sort") {
  try {
    parse("0,1,1.0\n1,2,0.5");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("out of order") != std::string::npos);
  }
}

TEST_CASE("load_events error paths") {
  CHECK_THROWS_AS(parse("0,1\n"), parse_error);
  CHECK_THROWS_AS(parse("0,1,abc\n"), parse_error);
  CHECK_THROWS_AS(parse("-1,2,1.0\n"), parse_error);
  CHECK_THROWS_AS(parse("0,1,1.0", {.prefix_fraction = 0.0}), data_error);
}

TEST_CASE("load_events skips comments and accepts whitespace and labels") {
  const auto ws = parse("# header\n\n3 4 10\n4 5 11 99\n");
  CHECK(ws.net.n() == 6);
  CHECK(ws.net.m() == 2);

  const auto labeled = parse("alice,bob,1\nbob,carol,2\n");
  REQUIRE(labeled.labels.has_value());
  CHECK(labeled.net.n() == 3);
  CHECK(labeled.labels->label(2) == "carol");
  CHECK(labeled.net.events()[1] == event{1, 2, 2.0});
}

TEST_CASE("prefix fraction keeps the chronological head and full node set") {
  std::string text;
  for (int i = 0; i < 10; ++i)
    text += std::to_string(i) + "," + std::to_string(i + 1) + "," +
            std::to_string(i) + "\n";
  const auto head = parse(text, {.prefix_fraction = 0.3});
  CHECK(head.net.m() == 3);
  CHECK(head.net.n() == 11);
  CHECK(head.net.events().back().t == 2.0);
}

TEST_CASE("write then read reproduces the network") {
  const auto net = generate({.n = 30, .m = 200, .seed = 5});
  std::stringstream buf;
  write_events(buf, net);
  const auto back = read_events(buf).net;
  CHECK(back.events().size() == net.events().size());
  CHECK(std::equal(back.events().begin(), back.events().end(),
                   net.events().begin()));
}

TEST_CASE("reverse") {
  const temporal_network net(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  const auto rev = reverse(net);
  CHECK(rev.order() == time_order::reversed);
  REQUIRE(rev.m() == 2);
  CHECK(rev.events()[0] == event{1, 2, 2.0});
  CHECK(rev.events()[1] == event{0, 1, 1.0});
  CHECK(rev.n() == 3);
  CHECK(reverse(rev) == net);

  const temporal_network empty(4, {});
  CHECK(reverse(empty).m() == 0);
  CHECK(reverse(reverse(empty)) == empty);
}

TEST_CASE("adjacent") {
  CHECK(adjacent({0, 1, 1.0}, {1, 2, 2.0}));
  CHECK_FALSE(adjacent({0, 1, 1.0}, {0, 1, 1.0}));
  CHECK_FALSE(adjacent({0, 1, 1.0}, {1, 2, 5.0}, 2.0));
  CHECK(adjacent({0, 1, 1.0}, {1, 2, 3.0}, 2.0));
  CHECK_FALSE(adjacent({0, 1, 1.0}, {2, 3, 2.0}));

  // Antisymmetric in time on random pairs.
  const auto net = generate({.n = 6, .m = 60, .p = 0.6, .seed = 3});
  for (const auto& a : net.events())
    for (const auto& b : net.events())
      if (adjacent(a, b)) CHECK_FALSE(adjacent(b, a));
}

TEST_CASE("network invariants are enforced") {
  CHECK_THROWS_AS(temporal_network(2, {{0, 2, 1.0}}), data_error);
  CHECK_THROWS_AS(temporal_network(3, {{0, 1, 2.0}, {1, 2, 1.0}}), data_error);
  CHECK_THROWS_AS(temporal_network(3, {{0, 1, std::nan("")}}), data_error);
  CHECK(temporal_network(3, {{0, 1, 1.0}, {1, 2, 4.5}}).time_span() == 3.5);
  CHECK(temporal_network(3, {{0, 1, 1.0}}).time_span() == 0.0);
}

TEST_CASE("builder grows n by the number of unseen ids") {
  network_builder b;
  b.add({0, 1, 1.0});
  CHECK(b.n() == 2);
  b.add({1, 0, 2.0});
  CHECK(b.n() == 2);
  b.add({4, 1, 3.0});
  CHECK(b.n() == 5);
  CHECK(b.add_node() == 5);
  CHECK(b.n() == 6);
  CHECK_THROWS_AS(b.add({0, 1, 0.5}), data_error);
  const auto net = b.build();
  CHECK(net.n() == 6);
  CHECK(net.m() == 3);
}
