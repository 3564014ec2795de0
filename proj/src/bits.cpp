#include "tempreach/bits.hpp"

#include <istream>
#include <ostream>

#include "tempreach/errors.hpp"

namespace tempreach {

bit_vector::bit_vector(std::size_t size, bool value)
    : size_(size), words_(words_for(size), value ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

void bit_vector::clear_tail() noexcept {
  if (size_ % word_bits != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % word_bits)) - 1;
}

std::size_t bit_vector::count() const noexcept { return popcount(words_); }

bool bit_vector::is_subset_of(const bit_vector& other) const {
  if (other.size_ != size_) throw data_error("bit_vector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bit_vector& bit_vector::operator|=(const bit_vector& other) {
  if (other.size_ != size_) throw data_error("bit_vector size mismatch");
  or_into(words_, other.words_);
  return *this;
}

bit_vector& bit_vector::operator&=(const bit_vector& other) {
  if (other.size_ != size_) throw data_error("bit_vector size mismatch");
  and_into(words_, other.words_);
  return *this;
}

std::vector<node_id> bit_vector::indices() const {
  std::vector<node_id> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<node_id>(w * word_bits +
                                         std::countr_zero(bits)));
  }
  return out;
}

bit_vector bit_vector::from_indices(std::size_t size,
                                    std::span<const node_id> ids) {
  bit_vector v(size);
  for (auto i : ids) {
    if (i >= size) throw data_error("index out of range");
    v.set(i);
  }
  return v;
}

bit_matrix::bit_matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)),
      data_(rows * stride_, 0) {}

std::size_t bit_matrix::row_count(std::size_t r) const noexcept {
  return popcount(row(r));
}

std::size_t bit_matrix::total_count() const noexcept { return popcount(data_); }

bit_vector bit_matrix::row_vector(std::size_t r) const {
  bit_vector v(cols_);
  auto src = row(r);
  std::copy(src.begin(), src.end(), v.words().begin());
  return v;
}

void bit_matrix::assign_row(std::size_t r, const bit_vector& v) {
  if (v.size() != cols_) throw data_error("row length mismatch");
  std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void bit_matrix::grow() {
  const std::size_t new_cols = cols_ + 1;
  if (words_for(new_cols) > stride_) {
    const std::size_t new_stride = std::max<std::size_t>(1, 2 * stride_);
    std::vector<std::uint64_t> data((rows_ + 1) * new_stride, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_),
                  stride_,
                  data.begin() + static_cast<std::ptrdiff_t>(r * new_stride));
    data_ = std::move(data);
    stride_ = new_stride;
  } else {
    data_.resize((rows_ + 1) * stride_, 0);
  }
  ++rows_;
  cols_ = new_cols;
}

bit_matrix bit_matrix::transposed() const {
  bit_matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = row(r);
    for (std::size_t w = 0; w < src.size(); ++w)
      for (auto bits = src[w]; bits != 0; bits &= bits - 1)
        t.set(w * word_bits + std::countr_zero(bits), r);
  }
  return t;
}

void bit_matrix::write_binary(std::ostream& out) const {
  unsigned char header[8];
  for (int b = 0; b < 8; ++b)
    header[b] = static_cast<unsigned char>((std::uint64_t{cols_} >> (8 * b)) & 0xFF);
  out.write(reinterpret_cast<const char*>(header), 8);
  const std::size_t row_bytes = (cols_ + 7) / 8;
  std::vector<char> buf(row_bytes);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = row(r);
    for (std::size_t k = 0; k < row_bytes; ++k)
      buf[k] = static_cast<char>((src[k / 8] >> (8 * (k % 8))) & 0xFF);
    out.write(buf.data(), static_cast<std::streamsize>(row_bytes));
  }
}

bit_matrix bit_matrix::read_binary(std::istream& in, std::size_t rows) {
  unsigned char header[8];
  if (!in.read(reinterpret_cast<char*>(header), 8))
    throw data_error("truncated bit matrix header");
  std::uint64_t cols = 0;
  for (int b = 0; b < 8; ++b) cols |= std::uint64_t{header[b]} << (8 * b);
  bit_matrix m(rows, cols);
  const std::size_t row_bytes = (cols + 7) / 8;
  std::vector<unsigned char> buf(row_bytes);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!in.read(reinterpret_cast<char*>(buf.data()),
                 static_cast<std::streamsize>(row_bytes)))
      throw data_error("truncated bit matrix payload");
    auto dst = m.row(r);
    for (std::size_t k = 0; k < row_bytes; ++k)
      dst[k / 8] |= std::uint64_t{buf[k]} << (8 * (k % 8));
  }
  return m;
}

}  // namespace tempreach
