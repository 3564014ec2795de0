#include "tempreach/component_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>


namespace tempreach {

component_matrix::component_matrix(std::size_t n, time_order orientation)
    : bits_(n, n), orientation_(orientation) {
  if (n == 0) throw std::invalid_argument("component matrix needs n >= 1");
  for (std::size_t i = 0; i < n; ++i) bits_.set(i, i);
}

void component_matrix::apply(const event& e) {
  const std::size_t n = bits_.rows();
  if (e.u >= n || e.v >= n)
    throw std::out_of_range("event endpoint " +
                            std::to_string(std::max(e.u, e.v)) +
                            " >= n = " + std::to_string(n));
  if (e.u == e.v) return;
  auto ru = bits_.row(e.u);
  auto rv = bits_.row(e.v);
  for (std::size_t w = 0; w < ru.size(); ++w) {
    const auto merged = ru[w] | rv[w];
    ru[w] = merged;
    rv[w] = merged;
  }
}

node_id component_matrix::add_node() {
  bits_.grow();
  const std::size_t id = bits_.rows() - 1;
  bits_.set(id, id);
  return static_cast<node_id>(id);
}

component_matrix run(const temporal_network& net) {
  component_matrix s(net.n(), time_order::forward);
  s.apply(net.events());
  return s;
}

component_matrix run_reversed(const temporal_network& net) {
  component_matrix s(net.n(), time_order::reversed);
  const auto events = net.events();
  // Walk the stored sequence back to front instead of materializing reverse(net).
  for (auto it = events.rbegin(); it != events.rend(); ++it) s.apply(*it);
  return s;
}

bit_vector out_component(const component_matrix& s, node_id u) {
  if (u >= s.n())
    throw std::out_of_range("node " + std::to_string(u) + " >= n");
  if (s.orientation() == time_order::reversed) return s.bits().row_vector(u);
  bit_vector oc(s.n());
  for (std::size_t w = 0; w < s.n(); ++w)
    if (s.bits().test(w, u)) oc.set(w);
  return oc;
}

bit_matrix out_components(const component_matrix& s) {
  return s.orientation() == time_order::reversed ? s.bits()
                                                 : s.bits().transposed();
}

std::vector<std::size_t> column_counts_serial(const bit_matrix& m) {
  std::vector<std::size_t> counts(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    for (std::size_t w = 0; w < row.size(); ++w)
      for (auto bits = row[w]; bits != 0; bits &= bits - 1)
        ++counts[w * word_bits + static_cast<std::size_t>(std::countr_zero(bits))];
  }
  return counts;
}

std::vector<std::size_t> column_counts(const bit_matrix& m) {
  std::vector<std::size_t> counts(m.cols(), 0);
  const auto words = static_cast<std::ptrdiff_t>(words_for(m.cols()));
  // Each thread owns a band of column words, so the counters never collide.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t w = 0; w < words; ++w) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (auto bits = m.row(r)[static_cast<std::size_t>(w)]; bits != 0;
           bits &= bits - 1)
        ++counts[static_cast<std::size_t>(w) * word_bits +
                 static_cast<std::size_t>(std::countr_zero(bits))];
  }
  return counts;
}

size_distribution size_distribution_of(const component_matrix& s) {
  std::vector<double> sizes(s.n());
  if (s.orientation() == time_order::reversed) {
    for (std::size_t u = 0; u < s.n(); ++u)
      sizes[u] = static_cast<double>(s.bits().row_count(u));
  } else {
    const auto counts = column_counts(s.bits());
    std::transform(counts.begin(), counts.end(), sizes.begin(),
                   [](std::size_t c) { return static_cast<double>(c); });
  }
  return size_distribution(std::move(sizes));
}

double average_component_size(const component_matrix& s) {
  return static_cast<double>(s.total_count()) / static_cast<double>(s.n());
}

void write_matrix(std::ostream& out, const component_matrix& s) {
  s.bits().write_binary(out);
}

}  // namespace tempreach
