#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "hecke/fp.hpp"

namespace hecke {

/// A smooth character of the diagonal torus T of SL_2(Q_p) with values in
/// F_p, encoded by its value `u` on diag(p, 1/p) and the exponent `e` with
/// diag(x, 1/x) -> xbar^e for x a p-adic unit.
struct SmoothCharacter {
  FpScalar u{1, 5};
  std::uint32_t e = 0;

  SmoothCharacter() = default;
  SmoothCharacter(std::uint32_t p, std::int64_t u_value, std::int64_t exponent)
      : u(u_value, p), e(reduce(exponent, p - 1)) {
    require_supported_prime(p);
    if (u.is_zero()) throw std::invalid_argument("character value u must be a unit mod " + std::to_string(p));
  }

  [[nodiscard]] std::uint32_t p() const { return u.p; }

  /// Eigenvalue of the fixed generator g of F_p^x, i.e. g^e.
  [[nodiscard]] std::uint32_t omega_value() const { return pow_mod(primitive_root(p()), e, p()); }

  [[nodiscard]] std::string to_string() const {
    return "(" + std::to_string(u.value) + "," + std::to_string(e) + ")";
  }

  friend bool operator==(const SmoothCharacter& a, const SmoothCharacter& b) {
    return a.u == b.u && a.e == b.e;
  }
  friend std::strong_ordering operator<=>(const SmoothCharacter& a, const SmoothCharacter& b) {
    if (auto c = a.p() <=> b.p(); c != 0) return c;
    if (auto c = a.u.value <=> b.u.value; c != 0) return c;
    return a.e <=> b.e;
  }
};

inline SmoothCharacter trivial_character(std::uint32_t p) { return {p, 1, 0}; }

/// rho-bar: trivial on p-powers, x -> xbar on units.
inline SmoothCharacter rho_bar(std::uint32_t p) { return {p, 1, 1}; }

/// alpha-bar = rho-bar^2.
inline SmoothCharacter alpha_bar(std::uint32_t p) { return {p, 1, 2}; }

inline SmoothCharacter operator*(const SmoothCharacter& a, const SmoothCharacter& b) {
  if (a.p() != b.p()) throw modulus_error("characters over different primes");
  const auto prod = a.u * b.u;
  return {a.p(), prod.value, static_cast<std::int64_t>(a.e) + b.e};
}

inline SmoothCharacter inverse(const SmoothCharacter& c) {
  return {c.p(), c.u.inverse().value, -static_cast<std::int64_t>(c.e)};
}

/// chi -> chi^{-1} * alpha-bar, the twist relating degree-0 and degree-1
/// data of a principal series. It is an involution.
inline SmoothCharacter dual_twist(const SmoothCharacter& c) { return inverse(c) * alpha_bar(c.p()); }

}  // namespace hecke
