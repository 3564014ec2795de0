#include "tempreach/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "tempreach/errors.hpp"
#include "tempreach/event_io.hpp"

namespace tempreach {

std::vector<double> size_distribution::sorted() const {
  std::vector<double> v = values_;
  std::sort(v.begin(), v.end());
  return v;
}

double emd(const size_distribution& a, const size_distribution& b) {
  if (a.empty() || b.empty()) throw data_error("emd of an empty distribution");
  const auto x = a.sorted();
  const auto y = b.sorted();
  if (x.size() == y.size()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
    return sum / static_cast<double>(x.size());
  }
  // Integrate |Qa(q) - Qb(q)| over q in [0, 1]; both quantile functions are
  // step functions with jumps at i / na and j / nb.
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double q = 0.0, sum = 0.0;
  while (i < x.size() && j < y.size()) {
    const double qa = static_cast<double>(i + 1) / na;
    const double qb = static_cast<double>(j + 1) / nb;
    const double next = std::min(qa, qb);
    sum += (next - q) * std::abs(x[i] - y[j]);
    q = next;
    if (qa <= next) ++i;
    if (qb <= next) ++j;
  }
  return sum;
}

distribution_summary summarize(const size_distribution& d, std::size_t bins) {
  if (d.empty()) throw data_error("summary of an empty distribution");
  if (bins == 0) bins = 1;
  distribution_summary s;
  const auto v = d.values();
  s.n = v.size();
  s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(s.n);
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  s.min = *lo;
  s.max = *hi;

  const double width = (s.max - s.min) / static_cast<double>(bins);
  s.hist.edges.resize(bins + 1);
  for (std::size_t b = 0; b <= bins; ++b)
    s.hist.edges[b] = s.min + width * static_cast<double>(b);
  s.hist.edges.back() = s.max;
  s.hist.counts.assign(bins, 0);
  for (double x : v) {
    std::size_t b = width > 0.0 ? static_cast<std::size_t>((x - s.min) / width)
                                : 0;
    ++s.hist.counts[std::min(b, bins - 1)];
  }
  return s;
}

std::vector<double> quantiles(const size_distribution& d,
                              std::span<const double> levels) {
  if (d.empty()) throw data_error("quantiles of an empty distribution");
  const auto v = d.sorted();
  std::vector<double> out;
  out.reserve(levels.size());
  for (double q : levels) {
    const double rank = std::ceil(std::clamp(q, 0.0, 1.0) *
                                  static_cast<double>(v.size()));
    const auto idx = rank < 1.0 ? 0 : static_cast<std::size_t>(rank) - 1;
    out.push_back(v[std::min(idx, v.size() - 1)]);
  }
  return out;
}

void write_sizes_csv(std::ostream& out, const size_distribution& d,
                     std::string_view value_column) {
  out << "node," << value_column << '\n';
  for (std::size_t i = 0; i < d.n(); ++i)
    out << i << ',' << format_double(d[i]) << '\n';
}

size_distribution read_sizes_csv(std::istream& in) {
  std::vector<std::pair<std::size_t, double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line_no == 1 && line.rfind("node,", 0) == 0) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw parse_error(line_no, "expected node,size");
    std::size_t node = 0;
    double size = 0.0;
    const char* b = line.data();
    auto r1 = std::from_chars(b, b + comma, node);
    auto r2 = std::from_chars(b + comma + 1, b + line.size(), size);
    if (r1.ec != std::errc{} || r1.ptr != b + comma || r2.ec != std::errc{} ||
        r2.ptr != b + line.size())
      throw parse_error(line_no, "expected node,size");
    rows.emplace_back(node, size);
  }
  std::vector<double> values(rows.size(), 0.0);
  std::vector<bool> seen(rows.size(), false);
  for (auto [node, size] : rows) {
    if (node >= values.size() || seen[node])
      throw data_error("size CSV must list each node 0..n-1 exactly once");
    seen[node] = true;
    values[node] = size;
  }
  return size_distribution(std::move(values));
}

size_distribution load_sizes_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open " + path.string());
  return read_sizes_csv(in);
}

}  // namespace tempreach
