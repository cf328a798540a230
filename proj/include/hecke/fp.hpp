#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hecke {

class modulus_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduces any signed integer into [0, p).
constexpr std::uint32_t reduce(std::int64_t a, std::uint32_t p) {
  const auto m = static_cast<std::int64_t>(p);
  auto r = a % m;
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

constexpr std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

constexpr std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Multiplicative inverse via Fermat; `a` must be a unit mod the prime `p`.
inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

/// Multiplicative order of a unit mod p.
constexpr std::uint32_t order_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t k = 1;
  std::uint32_t x = a % p;
  while (x != 1) {
    x = mul_mod(x, a, p);
    ++k;
  }
  return k;
}

/// The smallest primitive root mod p. Fixes the generator of F_p^x used for
/// the torus part of every Hecke module.
constexpr std::uint32_t primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 2; g < p; ++g) {
    if (order_mod(g, p) == p - 1) return g;
  }
  return 1;  // p = 2
}

/// Primes accepted as coefficient moduli: p >= 5 and small enough that
/// products of residues fit comfortably in 64 bits.
inline void require_supported_prime(std::uint32_t p) {
  if (p < 5 || !is_prime(p) || p > (1U << 20U)) {
    throw modulus_error("modulus must be a prime with 5 <= p <= 2^20, got " + std::to_string(p));
  }
}

/// An element of the prime field F_p.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 5;

  constexpr FpScalar() = default;
  constexpr FpScalar(std::int64_t v, std::uint32_t modulus) : value(reduce(v, modulus)), p(modulus) {}

  [[nodiscard]] bool is_zero() const { return value == 0; }
  [[nodiscard]] FpScalar inverse() const { return {inv_mod(value, p), p}; }

  friend bool operator==(const FpScalar&, const FpScalar&) = default;

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    check(a, b);
    return {static_cast<std::int64_t>(a.value) + b.value, a.p};
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    check(a, b);
    return {static_cast<std::int64_t>(a.value) - b.value, a.p};
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    check(a, b);
    return {mul_mod(a.value, b.value, a.p), a.p};
  }
  FpScalar operator-() const { return {-static_cast<std::int64_t>(value), p}; }

 private:
  static void check(const FpScalar& a, const FpScalar& b) {
    if (a.p != b.p) throw modulus_error("scalar moduli differ");
  }
};

}  // namespace hecke
