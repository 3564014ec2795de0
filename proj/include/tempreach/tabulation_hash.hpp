#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tempreach {

inline constexpr std::uint64_t mersenne61 = (std::uint64_t{1} << 61) - 1;

// (a * x + b) mod 2^61 - 1 with a 128-bit product and Mersenne folding.
// Inputs may be any 64-bit values; the result lies in [0, 2^61 - 1).
std::uint64_t mult_add_mod(std::uint64_t x, std::uint64_t a,
                           std::uint64_t b) noexcept;

// Random hash [0, 2^64) -> [0, n_super) from a k-universal family (k = order).
//
// The key is split into x0 = low 32 bits, x1 = high 32 bits and x2 = x0 + x1.
// Character table i maps a character c to the degree (order - 1) polynomial
// A(i,0) c^(order-1) + ... + A(i,order-1) mod 2^61 - 1, evaluated by Horner's
// rule; the three table values are XORed and reduced modulo n_super.
//
// Coefficients come from std::mt19937 seeded through std::seed_seq with the
// two 32-bit halves of `seed`: draws are 31-bit
// values r = gen() mod (2^31 - 1), and A(i,j) = ((r1 << 32) + r2) mod
// (2^61 - 1), filled i-major.
class tabulation_hash {
 public:
  static constexpr unsigned default_order = 4;

  // Throws std::invalid_argument for n_super == 0 or order < 2.
  tabulation_hash(std::uint64_t seed, std::size_t n_super,
                  unsigned order = default_order);

  std::size_t n_super() const noexcept { return n_super_; }
  unsigned order() const noexcept { return order_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t coefficient(std::size_t table, std::size_t j) const {
    return coeffs_[table].at(j);
  }

  // Value of character table `table` at character c, in [0, 2^61 - 1).
  std::uint64_t table_value(std::size_t table, std::uint64_t c) const noexcept;

  // XOR of the three table values, before reduction to [0, n_super).
  std::uint64_t raw(std::uint64_t key) const noexcept;

  std::uint64_t operator()(std::uint64_t key) const noexcept {
    return raw(key) % n_super_;
  }

  // FNV-1a digest of each coefficient row, for sharing a hash without its
  // seed being needed to check identity.
  std::array<std::uint64_t, 3> table_digests() const noexcept;

 private:
  std::uint64_t seed_;
  std::size_t n_super_;
  unsigned order_;
  std::array<std::vector<std::uint64_t>, 3> coeffs_;
};

// K hashes drawn from one master seed. Hash j depends only on (seed, j), so
// the first K hashes of a larger family are exactly the family of size K.
std::uint64_t family_member_seed(std::uint64_t seed, std::size_t j) noexcept;
std::vector<tabulation_hash> make_hash_family(std::uint64_t seed,
                                              std::size_t n_super,
                                              std::size_t count,
                                              unsigned order =
                                                  tabulation_hash::default_order);

}  // namespace tempreach
