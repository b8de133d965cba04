#include "loophopf/combinat.hpp"

#include <stdexcept>

namespace loophopf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint64_t v) : value(v) {
  if (!is_prime(v)) throw std::invalid_argument("not a prime: " + std::to_string(v));
}

std::vector<std::uint32_t> base_p_digits(std::uint64_t m, Prime p) {
  std::vector<std::uint32_t> digits;
  while (m > 0) {
    digits.push_back(static_cast<std::uint32_t>(m % p.value));
    m /= p.value;
  }
  return digits;
}

std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, Prime p) {
  std::uint64_t m = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= p.value) throw std::invalid_argument("digit out of range");
    m = m * p.value + *it;
  }
  return m;
}

std::uint64_t legendre_sum(std::uint64_t n, Prime p) {
  std::uint64_t total = 0;
  while (n > 0) {
    n /= p.value;
    total += n;
  }
  return total;
}

std::uint64_t carry_count(std::uint64_t m, std::uint64_t n, Prime p) {
  return legendre_sum(m + n, p) - legendre_sum(m, p) - legendre_sum(n, p);
}

namespace {

std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b, std::uint64_t p) {
  // a, b < p, so C(a, b) fits a direct product formula mod p.
  if (b > a) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 1; i <= b; ++i) {
    num = num * ((a - b + i) % p) % p;
    den = den * (i % p) % p;
  }
  // den is invertible mod p; invert by Fermat.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(num * inv % p);
}

}  // namespace

std::uint32_t lucas_binom(std::uint64_t a, std::uint64_t b, Prime p) {
  if (b > a) throw std::invalid_argument("lucas_binom requires b <= a");
  std::uint64_t result = 1;
  while (a > 0 || b > 0) {
    auto da = static_cast<std::uint32_t>(a % p.value);
    auto db = static_cast<std::uint32_t>(b % p.value);
    result = result * small_binom_mod(da, db, p.value) % p.value;
    a /= p.value;
    b /= p.value;
  }
  return static_cast<std::uint32_t>(result);
}

bool binom_vanishes(std::uint64_t m, std::uint64_t n, Prime p) {
  if (m < 1 || n < 1) throw std::invalid_argument("binom_vanishes requires m, n >= 1");
  return carry_count(m, n, p) > 0;
}

}  // namespace loophopf
