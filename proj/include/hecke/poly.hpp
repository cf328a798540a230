#pragma once

#include <cstdint>
#include <vector>

#include "hecke/linalg.hpp"

namespace hecke {

/// Dense univariate polynomial over F_p, coefficients from degree 0 upward.
/// The zero polynomial has no coefficients.
struct FpPoly {
  std::vector<std::uint32_t> coeffs;
  std::uint32_t p = 5;

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs.size()) - 1; }
};

inline FpPoly derivative(const FpPoly& f) {
  FpPoly d{{}, f.p};
  for (std::size_t i = 1; i < f.coeffs.size(); ++i) d.coeffs.push_back(mul_mod(f.coeffs[i], static_cast<std::uint32_t>(i % f.p), f.p));
  d.trim();
  return d;
}

inline FpPoly poly_mod(FpPoly a, const FpPoly& b) {
  const std::uint32_t p = a.p;
  const std::uint32_t lead_inv = inv_mod(b.coeffs.back(), p);
  a.trim();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    const std::uint32_t f = mul_mod(a.coeffs.back(), lead_inv, p);
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
      auto& c = a.coeffs[i + shift];
      c = reduce(static_cast<std::int64_t>(c) - mul_mod(f, b.coeffs[i], p), p);
    }
    a.trim();
  }
  return a;
}

inline FpPoly poly_gcd(FpPoly a, FpPoly b) {
  a.trim();
  b.trim();
  while (!b.is_zero()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Monic minimal polynomial, found as the first linear dependency among
/// I, A, A^2, ... (flattened).
inline FpPoly minimal_polynomial(const FpMatrix& a) {
  a.require_square("minimal_polynomial");
  const std::uint32_t p = a.modulus();
  const std::size_t n = a.rows();
  const std::size_t n2 = n * n;
  if (n == 0) return {{1}, p};

  std::vector<FpMatrix> powers{FpMatrix::identity(n, p)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * a);
    // Columns are vec(A^0) .. vec(A^k); a kernel vector gives the relation.
    FpMatrix sys(n2, k + 1, p);
    for (std::size_t j = 0; j <= k; ++j) {
      auto e = powers[j].entries();
      for (std::size_t i = 0; i < n2; ++i) sys.set(i, j, e[i]);
    }
    const FpMatrix ker = kernel(sys);
    if (ker.rows() == 0) continue;
    FpPoly m{ker.row_copy(0), p};
    m.trim();
    const std::uint32_t inv = inv_mod(m.coeffs.back(), p);
    for (auto& c : m.coeffs) c = mul_mod(c, inv, p);
    return m;
  }
  throw std::logic_error("minimal_polynomial: no relation found up to degree n");
}

inline bool is_squarefree(const FpPoly& f) {
  const FpPoly d = derivative(f);
  if (d.is_zero()) return f.degree() <= 0;
  return poly_gcd(f, d).degree() == 0;
}

/// Semisimple over F_p-bar: minimal polynomial squarefree.
inline bool is_semisimple_operator(const FpMatrix& a) { return is_squarefree(minimal_polynomial(a)); }

}  // namespace hecke
