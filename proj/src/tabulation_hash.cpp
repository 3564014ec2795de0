#include "tempreach/tabulation_hash.hpp"

#include <random>
#include <stdexcept>

namespace tempreach {

std::uint64_t mult_add_mod(std::uint64_t x, std::uint64_t a,
                           std::uint64_t b) noexcept {
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(a) * x + b;
  // prod < 2^128; fold twice around 2^61 == 1 (mod 2^61 - 1).
  const unsigned __int128 folded =
      (prod & mersenne61) + (prod >> 61);
  std::uint64_t r = static_cast<std::uint64_t>(folded & mersenne61) +
                    static_cast<std::uint64_t>(folded >> 61);
  r = (r & mersenne61) + (r >> 61);
  if (r >= mersenne61) r -= mersenne61;
  return r;
}

tabulation_hash::tabulation_hash(std::uint64_t seed, std::size_t n_super,
                                 unsigned order)
    : seed_(seed), n_super_(n_super), order_(order) {
  if (n_super == 0) throw std::invalid_argument("n_super must be >= 1");
  if (order < 2) throw std::invalid_argument("hash order must be >= 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937 gen(seq);
  auto draw31 = [&gen] { return std::uint64_t{gen()} % 0x7FFF'FFFFULL; };
  for (auto& row : coeffs_) {
    row.resize(order);
    for (auto& a : row) {
      const std::uint64_t hi = draw31();
      const std::uint64_t lo = draw31();
      a = ((hi << 32) + lo) % mersenne61;
    }
  }
}

std::uint64_t tabulation_hash::table_value(std::size_t table,
                                           std::uint64_t c) const noexcept {
  const auto& a = coeffs_[table];
  std::uint64_t acc = a[0];
  for (std::size_t j = 1; j < a.size(); ++j) acc = mult_add_mod(c, acc, a[j]);
  return acc;
}

std::uint64_t tabulation_hash::raw(std::uint64_t key) const noexcept {
  const std::uint64_t x0 = key & 0xFFFF'FFFFULL;
  const std::uint64_t x1 = key >> 32;
  const std::uint64_t x2 = x0 + x1;
  return table_value(0, x0) ^ table_value(1, x1) ^ table_value(2, x2);
}

std::array<std::uint64_t, 3> tabulation_hash::table_digests() const noexcept {
  std::array<std::uint64_t, 3> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto a : coeffs_[i]) {
      for (int b = 0; b < 8; ++b) {
        h ^= (a >> (8 * b)) & 0xFF;
        h *= 0x100000001b3ULL;
      }
    }
    out[i] = h;
  }
  return out;
}

std::uint64_t family_member_seed(std::uint64_t seed, std::size_t j) noexcept {
  // splitmix64 step over (seed, j).
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (j + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<tabulation_hash> make_hash_family(std::uint64_t seed,
                                              std::size_t n_super,
                                              std::size_t count,
                                              unsigned order) {
  std::vector<tabulation_hash> family;
  family.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
    family.emplace_back(family_member_seed(seed, j), n_super, order);
  return family;
}

}  // namespace tempreach
