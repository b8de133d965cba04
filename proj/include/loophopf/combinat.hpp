#pragma once

#include <cstdint>
#include <vector>

namespace loophopf {

bool is_prime(std::uint64_t n);

/// A validated prime, used as the characteristic everywhere.
struct Prime {
  explicit Prime(std::uint64_t v);
  std::uint64_t value;
};

inline bool operator==(Prime a, Prime b) { return a.value == b.value; }

/// Little-endian base-p digits of m, most significant digit last and nonzero;
/// m = 0 yields the empty vector.
std::vector<std::uint32_t> base_p_digits(std::uint64_t m, Prime p);

std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, Prime p);

/// nu_p(n!) = sum_{i>=1} floor(n / p^i).
std::uint64_t legendre_sum(std::uint64_t n, Prime p);

/// Number of carries when adding m and n in base p (= nu_p(C(m+n, n))).
std::uint64_t carry_count(std::uint64_t m, std::uint64_t n, Prime p);

/// C(a, b) mod p by Lucas' theorem.  Requires b <= a.
std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, Prime p);

/// Whether C(m+n, n) vanishes mod p.  Requires m, n >= 1.
bool binom_vanishes(std::uint64_t m, std::uint64_t n, Prime p);

}  // namespace loophopf
