#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tempreach/temporal_network.hpp"

namespace tempreach {

inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + word_bits - 1) / word_bits;
}

// Fixed-length packed set over [0, size).
class bit_vector {
 public:
  bit_vector() = default;
  explicit bit_vector(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / word_bits] >> (i % word_bits)) & 1U;
  }
  void set(std::size_t i) noexcept {
    words_[i / word_bits] |= std::uint64_t{1} << (i % word_bits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / word_bits] &= ~(std::uint64_t{1} << (i % word_bits));
  }

  std::size_t count() const noexcept;
  bool is_subset_of(const bit_vector& other) const;

  bit_vector& operator|=(const bit_vector& other);
  bit_vector& operator&=(const bit_vector& other);

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::vector<node_id> indices() const;
  static bit_vector from_indices(std::size_t size, std::span<const node_id> ids);

  friend bool operator==(const bit_vector&, const bit_vector&) = default;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// rows x cols bits, each row packed into `stride()` 64-bit words. Bits past
// `cols` in a row are always zero.
class bit_matrix {
 public:
  bit_matrix() = default;
  bit_matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t stride() const noexcept { return stride_; }

  std::span<std::uint64_t> row(std::size_t r) noexcept {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * stride_, stride_};
  }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / word_bits] >> (c % word_bits)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept {
    data_[r * stride_ + c / word_bits] |= std::uint64_t{1} << (c % word_bits);
  }

  std::size_t row_count(std::size_t r) const noexcept;
  std::size_t total_count() const noexcept;
  bit_vector row_vector(std::size_t r) const;
  void assign_row(std::size_t r, const bit_vector& v);

  // Appends one empty row and column. Storage is re-laid out only when the
  // column count crosses a word boundary of the current stride.
  void grow();

  bit_matrix transposed() const;

  // Packed payload size: rows * ceil(cols / 8) bytes.
  std::size_t payload_bytes() const noexcept {
    return rows_ * ((cols_ + 7) / 8);
  }

  // Row-major dump: 8-byte little-endian column count followed, for each row,
  // by ceil(cols / 8) bytes with bit c at byte c / 8, bit position c % 8.
  void write_binary(std::ostream& out) const;
  static bit_matrix read_binary(std::istream& in, std::size_t rows);

  friend bool operator==(const bit_matrix&, const bit_matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

// dst |= src, word by word.
inline void or_into(std::span<std::uint64_t> dst,
                    std::span<const std::uint64_t> src) noexcept {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

inline void and_into(std::span<std::uint64_t> dst,
                     std::span<const std::uint64_t> src) noexcept {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] &= src[w];
}

inline std::size_t popcount(std::span<const std::uint64_t> words) noexcept {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace tempreach
