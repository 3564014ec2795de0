#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace tempreach {

// One out-component size per node, indexed by node id. Exact methods produce
// integers; sketch-based methods produce real-valued estimates.
class size_distribution {
 public:
  size_distribution() = default;
  explicit size_distribution(std::vector<double> values)
      : values_(std::move(values)) {}

  std::size_t n() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

  std::vector<double> sorted() const;

  friend bool operator==(const size_distribution&,
                         const size_distribution&) = default;

 private:
  std::vector<double> values_;
};

// 1-D Wasserstein-1 distance between the empirical laws of a and b, i.e. the
// L1 distance between their quantile functions. For equal n this is the mean
// absolute difference of the sorted values. Throws on empty input.
double emd(const size_distribution& a, const size_distribution& b);

// Accuracy of an estimated distribution against the ground truth; lower is
// better and 0 means identical multisets.
inline double accuracy(const size_distribution& truth,
                       const size_distribution& estimate) {
  return emd(truth, estimate);
}

struct histogram {
  std::vector<double> edges;         // bins + 1 ascending edges
  std::vector<std::size_t> counts;   // last bin is closed on the right
};

struct distribution_summary {
  std::size_t n = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  histogram hist;
};

distribution_summary summarize(const size_distribution& d,
                               std::size_t bins = 20);

// Value at each requested quantile level (nearest-rank on sorted values).
std::vector<double> quantiles(const size_distribution& d,
                              std::span<const double> levels);

// CSV `node,size` with a header line.
void write_sizes_csv(std::ostream& out, const size_distribution& d,
                     std::string_view value_column = "size");
size_distribution read_sizes_csv(std::istream& in);
size_distribution load_sizes_csv(const std::filesystem::path& path);

}  // namespace tempreach
