#include <random>
#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "tempreach/errors.hpp"
#include "tempreach/metrics.hpp"

using namespace tempreach;

namespace {

size_distribution random_dist(std::mt19937& gen, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = 1 + gen() % 50;
  return size_distribution(v);
}

}  // namespace

TEST_CASE("emd basics") {
  const size_distribution a({1, 1, 3}), b({1, 2, 3});
  CHECK(emd(a, a) == 0.0);
  CHECK(emd(a, b) == doctest::Approx(1.0 / 3.0));
  CHECK(emd(size_distribution({3, 1, 2}), size_distribution({1, 2, 3})) == 0.0);
  CHECK_THROWS_AS(emd(size_distribution(), a), data_error);
}

TEST_CASE("emd is a metric on equal-size multisets") {
  std::mt19937 gen(1);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_dist(gen, 40), y = random_dist(gen, 40), z = random_dist(gen, 40);
    CHECK(emd(x, y) == emd(y, x));
    CHECK(emd(x, y) >= 0.0);
    CHECK(emd(x, z) <= emd(x, y) + emd(y, z) + 1e-12);
  }
}

TEST_CASE("emd with unequal sizes integrates quantile functions") {
  // Q_a = 1 on [0,1/2), 3 on [1/2,1); Q_b = 2 everywhere -> 1.
  CHECK(emd(size_distribution({1, 3}), size_distribution({2, 2, 2})) ==
        doctest::Approx(1.0));
  // Replicating every value leaves the law unchanged.
  CHECK(emd(size_distribution({1, 4, 9}),
            size_distribution({1, 1, 4, 4, 9, 9})) == doctest::Approx(0.0));
}

TEST_CASE("accuracy of an inflated estimate is the mean inflation") {
  const size_distribution truth({1, 2, 5, 7});
  const size_distribution est({2, 4, 5, 9});
  CHECK(accuracy(truth, truth) == 0.0);
  CHECK(accuracy(truth, est) == doctest::Approx((1 + 2 + 0 + 2) / 4.0));
}

TEST_CASE("summarize") {
  const auto ones = summarize(size_distribution({1, 1, 1, 1}));
  CHECK(ones.mean == 1.0);
  CHECK(ones.max == 1.0);
  const auto s = summarize(size_distribution({3, 3, 2}));
  CHECK(s.mean == doctest::Approx(8.0 / 3.0));
  CHECK(s.max == 3.0);
  CHECK(s.min == 2.0);
  std::mt19937 gen(2);
  const auto big = summarize(random_dist(gen, 777), 13);
  std::size_t total = 0;
  for (auto c : big.hist.counts) total += c;
  CHECK(total == 777);
  CHECK(big.hist.edges.size() == 14);
  CHECK_THROWS_AS(summarize(size_distribution()), data_error);
}

TEST_CASE("quantiles and CSV") {
  const size_distribution d({5, 1, 3, 2, 4});
  const std::vector<double> levels{0.0, 0.5, 1.0};
  CHECK(quantiles(d, levels) == std::vector<double>{1, 3, 5});

  std::stringstream buf;
  write_sizes_csv(buf, size_distribution({3, 3, 2.5}));
  CHECK(buf.str() == "node,size\n0,3\n1,3\n2,2.5\n");
  CHECK(read_sizes_csv(buf) == size_distribution({3, 3, 2.5}));

  std::stringstream dup("node,size\n0,1\n0,2\n");
  CHECK_THROWS_AS(read_sizes_csv(dup), data_error);
  std::stringstream junk("node,size\n0;1\n");
  CHECK_THROWS_AS(read_sizes_csv(junk), parse_error);
}
