#include "tempreach/hll.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tempreach/errors.hpp"

namespace tempreach {

namespace {

constexpr unsigned min_precision = 4;
constexpr unsigned max_precision = 24;

unsigned precision_for(std::size_t registers) {
  if (registers < (std::size_t{1} << min_precision) ||
      registers > (std::size_t{1} << max_precision) ||
      !std::has_single_bit(registers))
    throw std::invalid_argument("register count must be a power of two in [16, 2^24], got " +
                                std::to_string(registers));
  return static_cast<unsigned>(std::countr_zero(registers));
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void add_to(std::span<std::uint8_t> regs, unsigned precision,
            std::uint64_t salt, std::uint64_t element) noexcept {
  const std::uint64_t h = sketch_element_hash(element, salt);
  const std::size_t index = static_cast<std::size_t>(h >> (64 - precision));
  const std::uint64_t rest = h << precision;
  const auto rank = static_cast<std::uint8_t>(
      rest == 0 ? 64 - precision + 1 : std::countl_zero(rest) + 1);
  regs[index] = std::max(regs[index], rank);
}

const std::array<double, 65>& inverse_powers() {
  static const std::array<double, 65> table = [] {
    std::array<double, 65> t{};
    for (std::size_t r = 0; r < t.size(); ++r)
      t[r] = std::ldexp(1.0, -static_cast<int>(r));
    return t;
  }();
  return table;
}

void write_u64(std::ostream& out, std::uint64_t x) {
  char buf[8];
  for (int b = 0; b < 8; ++b) buf[b] = static_cast<char>((x >> (8 * b)) & 0xFF);
  out.write(buf, 8);
}

std::uint64_t read_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8))
    throw data_error("truncated sketch");
  std::uint64_t x = 0;
  for (int b = 0; b < 8; ++b) x |= std::uint64_t{buf[b]} << (8 * b);
  return x;
}

}  // namespace

std::uint64_t sketch_element_hash(std::uint64_t element,
                                  std::uint64_t salt) noexcept {
  return splitmix64(element ^ splitmix64(salt));
}

double estimate_registers(std::span<const std::uint8_t> registers,
                          unsigned precision) {
  const double m = static_cast<double>(registers.size());
  const auto& inv = inverse_powers();
  double sum = 0.0;
  std::size_t zeros = 0;
  for (auto r : registers) {
    sum += inv[r];
    zeros += r == 0;
  }
  if (zeros == registers.size()) return 0.0;
  double alpha;
  switch (precision) {
    case 4: alpha = 0.673; break;
    case 5: alpha = 0.697; break;
    case 6: alpha = 0.709; break;
    default: alpha = 0.7213 / (1.0 + 1.079 / m);
  }
  const double raw = alpha * m * m / sum;
  if (raw <= 2.5 * m && zeros > 0)
    return m * std::log(m / static_cast<double>(zeros));
  return raw;
}

hll_sketch::hll_sketch(std::size_t registers, std::uint64_t salt)
    : precision_(precision_for(registers)), salt_(salt), regs_(registers, 0) {}

hll_sketch::hll_sketch(unsigned precision, std::uint64_t salt,
                       std::vector<std::uint8_t> regs)
    : precision_(precision), salt_(salt), regs_(std::move(regs)) {}

void hll_sketch::add(std::uint64_t element) noexcept {
  add_to(regs_, precision_, salt_, element);
}

void hll_sketch::merge(const hll_sketch& other) {
  if (other.regs_.size() != regs_.size() || other.salt_ != salt_)
    throw std::invalid_argument("cannot merge sketches with different register count or salt");
  merge_registers(regs_, other.regs_);
}

hll_sketch merged(const hll_sketch& a, const hll_sketch& b) {
  hll_sketch out = a;
  out.merge(b);
  return out;
}

void hll_sketch::write(std::ostream& out) const {
  write_u64(out, regs_.size());
  write_u64(out, salt_);
  out.write(reinterpret_cast<const char*>(regs_.data()),
            static_cast<std::streamsize>(regs_.size()));
}

hll_sketch hll_sketch::read(std::istream& in) {
  const auto s = read_u64(in);
  const auto salt = read_u64(in);
  const unsigned p = precision_for(static_cast<std::size_t>(s));
  std::vector<std::uint8_t> regs(static_cast<std::size_t>(s));
  if (!in.read(reinterpret_cast<char*>(regs.data()),
               static_cast<std::streamsize>(regs.size())))
    throw data_error("truncated sketch registers");
  const auto max_rank = static_cast<std::uint8_t>(64 - p + 1);
  if (std::any_of(regs.begin(), regs.end(),
                  [&](std::uint8_t r) { return r > max_rank; }))
    throw data_error("sketch register exceeds the maximum rank");
  return hll_sketch(p, salt, std::move(regs));
}

sketch_bank::sketch_bank(std::size_t n, std::size_t registers,
                         std::uint64_t salt)
    : n_(n), regs_(registers), precision_(precision_for(registers)),
      salt_(salt), data_(n * registers, 0) {
  for (std::size_t i = 0; i < n_; ++i)
    add_to(mutable_registers(i), precision_, salt_, i);
}

void sketch_bank::merge_pair(node_id u, node_id v) {
  if (u >= n_ || v >= n_)
    throw std::out_of_range("sketch index " + std::to_string(std::max(u, v)) +
                            " >= n");
  if (u == v) return;
  auto a = mutable_registers(u);
  auto b = mutable_registers(v);
  for (std::size_t i = 0; i < regs_; ++i) {
    const auto r = a[i] < b[i] ? b[i] : a[i];
    a[i] = r;
    b[i] = r;
  }
}

hll_sketch sketch_bank::sketch(std::size_t i) const {
  auto regs = registers_of(i);
  return hll_sketch(precision_, salt_,
                    std::vector<std::uint8_t>(regs.begin(), regs.end()));
}

std::vector<double> sketch_bank::estimates_serial() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = estimate(i);
  return out;
}

std::vector<double> sketch_bank::estimates() const {
  std::vector<double> out(n_);
  const auto count = static_cast<std::ptrdiff_t>(n_);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = estimate(static_cast<std::size_t>(i));
  return out;
}

sketch_bank run_hll_bank(const temporal_network& net, std::size_t registers,
                         std::uint64_t salt) {
  sketch_bank bank(net.n(), registers, salt);
  for (const auto& e : net.events()) bank.merge_pair(e.u, e.v);
  return bank;
}

sketch_bank run_hll_bank_reversed(const temporal_network& net,
                                  std::size_t registers, std::uint64_t salt) {
  sketch_bank bank(net.n(), registers, salt);
  const auto events = net.events();
  for (auto it = events.rbegin(); it != events.rend(); ++it)
    bank.merge_pair(it->u, it->v);
  return bank;
}

double run_hll_average(const temporal_network& net, std::size_t registers,
                       std::uint64_t salt) {
  if (net.n() == 0) return 0.0;
  const auto est = run_hll_bank(net, registers, salt).estimates();
  return std::accumulate(est.begin(), est.end(), 0.0) /
         static_cast<double>(est.size());
}

size_distribution run_hll_distribution(const temporal_network& net,
                                       std::size_t registers,
                                       std::uint64_t salt) {
  auto est = run_hll_bank_reversed(net, registers, salt).estimates();
  const double n = static_cast<double>(net.n());
  for (auto& x : est) x = std::clamp(x, 1.0, n);
  return size_distribution(std::move(est));
}

}  // namespace tempreach
