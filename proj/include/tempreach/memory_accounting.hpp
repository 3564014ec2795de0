#pragma once

#include <cstddef>

// Analytic structure sizes in bytes, one function per method family. These
// count only the payload of the method's core structure, not allocator or
// container overhead.
namespace tempreach::memory {

// Packed n x n component matrix: ceil(n^2 / 8).
constexpr std::size_t matrix_bytes(std::size_t n) noexcept {
  return (n * n + 7) / 8;
}

// n sketches of s one-byte registers.
constexpr std::size_t hll_bank_bytes(std::size_t n, std::size_t s) noexcept {
  return n * s;
}

// K super-node matrices plus K preimage tables of n_super rows over n nodes.
constexpr std::size_t hashed_bytes(std::size_t n, std::size_t n_super,
                                   std::size_t k) noexcept {
  return k * matrix_bytes(n_super) + k * n_super * ((n + 7) / 8);
}

// CSR event graph (m offsets + eta targets, 4 bytes each) plus the sketches
// alive at the peak of the reverse sweep.
constexpr std::size_t eg_hll_bytes(std::size_t m, std::size_t eta,
                                   std::size_t peak_live_sketches,
                                   std::size_t s) noexcept {
  return 4 * (m + eta) + peak_live_sketches * s;
}

// Peak resident set size of this process, or 0 when unavailable.
std::size_t peak_rss_bytes() noexcept;

}  // namespace tempreach::memory
