#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tempreach/metrics.hpp"
#include "tempreach/temporal_network.hpp"

namespace tempreach {

inline constexpr std::size_t default_registers = std::size_t{1} << 14;
inline constexpr std::uint64_t default_sketch_salt = 0x5eed'c0de'1234'abcdULL;

// Keyed 64-bit mixer used to place elements into registers. Independent of
// the tabulation hashes used for network compression.
std::uint64_t sketch_element_hash(std::uint64_t element, std::uint64_t salt) noexcept;

// HyperLogLog register estimate with linear counting for the small range.
// `registers.size()` must be 2^precision.
double estimate_registers(std::span<const std::uint8_t> registers,
                          unsigned precision);

// Register-wise max of src into dst.
inline void merge_registers(std::span<std::uint8_t> dst,
                            std::span<const std::uint8_t> src) noexcept {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = dst[i] < src[i] ? src[i] : dst[i];
}

// HyperLogLog sketch over 64-bit elements with s = 2^p registers (s >= 16).
class hll_sketch {
 public:
  hll_sketch(std::size_t registers, std::uint64_t salt = default_sketch_salt);

  std::size_t registers() const noexcept { return regs_.size(); }
  unsigned precision() const noexcept { return precision_; }
  std::uint64_t salt() const noexcept { return salt_; }
  std::span<const std::uint8_t> data() const noexcept { return regs_; }

  void add(std::uint64_t element) noexcept;
  void clear() noexcept { std::fill(regs_.begin(), regs_.end(), std::uint8_t{0}); }
  // Throws std::invalid_argument on a register-count or salt mismatch.
  void merge(const hll_sketch& other);
  double estimate() const { return estimate_registers(regs_, precision_); }

  // u64 s, u64 salt (both little-endian), then s register bytes.
  void write(std::ostream& out) const;
  static hll_sketch read(std::istream& in);

  friend bool operator==(const hll_sketch&, const hll_sketch&) = default;

 private:
  friend class sketch_bank;
  hll_sketch(unsigned precision, std::uint64_t salt,
             std::vector<std::uint8_t> regs);

  unsigned precision_;
  std::uint64_t salt_;
  std::vector<std::uint8_t> regs_;
};

hll_sketch merged(const hll_sketch& a, const hll_sketch& b);

// One sketch per node, stored contiguously; sketch i starts as {i}.
class sketch_bank {
 public:
  sketch_bank(std::size_t n, std::size_t registers,
              std::uint64_t salt = default_sketch_salt);

  std::size_t n() const noexcept { return n_; }
  std::size_t registers() const noexcept { return regs_; }
  unsigned precision() const noexcept { return precision_; }
  std::uint64_t salt() const noexcept { return salt_; }

  std::span<const std::uint8_t> registers_of(std::size_t i) const noexcept {
    return {data_.data() + i * regs_, regs_};
  }

  // Both sketches become their union. Throws std::out_of_range on bad ids.
  void merge_pair(node_id u, node_id v);

  double estimate(std::size_t i) const {
    return estimate_registers(registers_of(i), precision_);
  }
  hll_sketch sketch(std::size_t i) const;

  // Per-node estimates: OpenMP kernel and its serial reference.
  std::vector<double> estimates() const;
  std::vector<double> estimates_serial() const;

  std::size_t register_bytes() const noexcept { return data_.size(); }

 private:
  std::span<std::uint8_t> mutable_registers(std::size_t i) noexcept {
    return {data_.data() + i * regs_, regs_};
  }

  std::size_t n_;
  std::size_t regs_;
  unsigned precision_;
  std::uint64_t salt_;
  std::vector<std::uint8_t> data_;
};

// Forward pass: the bank ends holding sketched in-components.
sketch_bank run_hll_bank(const temporal_network& net, std::size_t registers,
                         std::uint64_t salt = default_sketch_salt);
// Reverse-chronological pass: the bank ends holding sketched out-components.
sketch_bank run_hll_bank_reversed(const temporal_network& net,
                                  std::size_t registers,
                                  std::uint64_t salt = default_sketch_salt);

// Mean of the forward in-component estimates, estimating the mean
// out-component size.
double run_hll_average(const temporal_network& net,
                       std::size_t registers = default_registers,
                       std::uint64_t salt = default_sketch_salt);

// Estimated |OC(u)| for every node from the reversed pass, clamped to [1, n].
size_distribution run_hll_distribution(const temporal_network& net,
                                       std::size_t registers = default_registers,
                                       std::uint64_t salt = default_sketch_salt);

}  // namespace tempreach
