#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

struct RowEchelon {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivoting takes the first nonzero entry at or
/// below the current row, so results are reproducible.
inline RowEchelon rref(FpMatrix m) {
  const std::uint32_t p = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint32_t> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return a[i * cols + j]; };

  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint32_t inv = inv_mod(at(r, c), p);
    for (std::size_t j = c; j < cols; ++j) at(r, j) = mul_mod(at(r, j), inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const std::uint64_t f = p - at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        at(i, j) = static_cast<std::uint32_t>((at(i, j) + f * at(r, j)) % p);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = FpMatrix(rows, cols, p);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.reduced.set(i, j, at(i, j));
  return out;
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

/// Basis (as rows) of the row space.
inline FpMatrix row_space(const FpMatrix& m) {
  auto e = rref(m);
  return e.reduced.block(0, 0, e.rank, m.cols());
}

/// Basis (as rows) of {x : m * x^T = 0}.
inline FpMatrix kernel(const FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    FpVector x(m.cols(), 0);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = reduce(-static_cast<std::int64_t>(e.reduced(i, f)), p);
    basis.push_back(std::move(x));
  }
  FpMatrix k(basis.size(), m.cols(), p);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.set(i, j, basis[i][j]);
  return k;
}

/// Basis (as rows) of {v : v * m = 0}.
inline FpMatrix left_kernel(const FpMatrix& m) { return kernel(m.transpose()); }

inline std::optional<FpMatrix> inverse(const FpMatrix& m) {
  m.require_square("inverse");
  const std::size_t n = m.rows();
  FpMatrix aug(n, 2 * n, m.modulus());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, FpMatrix::identity(n, m.modulus()));
  auto e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

inline bool is_invertible(const FpMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Solution set of A x = b: a particular solution (if consistent) plus a
/// kernel basis stored as rows.
struct SolutionSet {
  std::optional<FpVector> particular;
  FpMatrix kernel;

  [[nodiscard]] bool consistent() const { return particular.has_value(); }
};

inline SolutionSet solve_linear(const FpMatrix& a, const FpVector& b) {
  if (a.rows() != b.size()) throw dimension_error("solve_linear: A has " + std::to_string(a.rows()) + " rows, b has " + std::to_string(b.size()));
  const std::uint32_t p = a.modulus();
  FpMatrix aug(a.rows(), a.cols() + 1, p);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug.set(i, a.cols(), b[i]);
  auto e = rref(aug);

  SolutionSet s{std::nullopt, kernel(a)};
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return s;
  FpVector x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  s.particular = std::move(x);
  return s;
}

/// Coordinates of each row of `vectors` in the basis given by the rows of
/// `basis` (which must be linearly independent). Throws if a row lies outside
/// the span.
inline FpMatrix coordinates(const FpMatrix& basis, const FpMatrix& vectors) {
  basis.check_modulus(vectors);
  const std::uint32_t p = basis.modulus();
  const std::size_t k = basis.rows();
  FpMatrix out(vectors.rows(), k, p);
  if (vectors.rows() == 0) return out;
  if (basis.cols() != vectors.cols()) throw dimension_error("coordinates: ambient dimension mismatch");

  // Solve c * basis = v, i.e. basis^T c^T = v^T, for all v at once.
  const std::size_t n = basis.cols();
  FpMatrix aug(n, k + vectors.rows(), p);
  aug.set_block(0, 0, basis.transpose());
  aug.set_block(0, k, vectors.transpose());
  auto e = rref(aug);
  if (e.rank > k || (k > 0 && e.rank < k)) {
    throw std::domain_error("coordinates: vector outside span or dependent basis");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (e.pivots[i] != i) throw std::domain_error("coordinates: dependent basis");
  }
  for (std::size_t v = 0; v < vectors.rows(); ++v)
    for (std::size_t i = 0; i < k; ++i) out.set(v, i, e.reduced(i, k + v));
  if (k == 0 && !vectors.is_zero()) throw std::domain_error("coordinates: vector outside span");
  return out;
}

/// Matrix of the operator `op` restricted to the invariant subspace whose
/// basis is the rows of `basis`.
inline FpMatrix restrict_operator(const FpMatrix& basis, const FpMatrix& op) {
  return coordinates(basis, basis * op);
}

/// Fitting decomposition V = V_inv + V_nil of a square operator acting on
/// row vectors: V_inv is the stable image (row space of A^n) and V_nil the
/// stable kernel (left kernel of A^n).
struct FittingSplit {
  FpMatrix invertible;
  FpMatrix nilpotent;
};

inline FittingSplit fitting_split(const FpMatrix& a) {
  a.require_square("fitting_split");
  const FpMatrix an = a.pow(a.rows());
  return {row_space(an), left_kernel(an)};
}

/// Basis of {Phi : gens_m[i] * Phi = Phi * gens_n[i] for all i}, i.e. the
/// linear maps v -> v * Phi commuting with the right actions.
inline std::vector<FpMatrix> intertwiner_space(std::span<const FpMatrix> gens_m, std::span<const FpMatrix> gens_n) {
  if (gens_m.size() != gens_n.size()) throw dimension_error("intertwiner_space: generator lists differ in length");
  if (gens_m.empty()) throw dimension_error("intertwiner_space: no generators");
  const std::uint32_t p = gens_m.front().modulus();
  const std::size_t dm = gens_m.front().rows();
  const std::size_t dn = gens_n.front().rows();
  for (std::size_t i = 0; i < gens_m.size(); ++i) {
    gens_m[i].check_modulus(gens_n[i]);
    if (gens_m[i].modulus() != p) throw modulus_error("intertwiner_space: mixed moduli");
    if (!gens_m[i].is_square() || gens_m[i].rows() != dm || !gens_n[i].is_square() || gens_n[i].rows() != dn) {
      throw dimension_error("intertwiner_space: generator shapes disagree");
    }
  }

  const std::size_t unknowns = dm * dn;
  if (unknowns == 0) return {};
  FpMatrix sys(gens_m.size() * unknowns, unknowns, p);
  for (std::size_t g = 0; g < gens_m.size(); ++g) {
    const auto& a = gens_m[g];
    const auto& b = gens_n[g];
    for (std::size_t r = 0; r < dm; ++r) {
      for (std::size_t c = 0; c < dn; ++c) {
        const std::size_t eq = g * unknowns + r * dn + c;
        // (A Phi)[r][c] = sum_t A[r][t] Phi[t][c]
        for (std::size_t t = 0; t < dm; ++t) {
          sys.set(eq, t * dn + c, static_cast<std::int64_t>(sys(eq, t * dn + c)) + a(r, t));
        }
        // -(Phi B)[r][c] = -sum_t Phi[r][t] B[t][c]
        for (std::size_t t = 0; t < dn; ++t) {
          sys.set(eq, r * dn + t, static_cast<std::int64_t>(sys(eq, r * dn + t)) - b(t, c));
        }
      }
    }
  }
  const FpMatrix k = kernel(sys);
  std::vector<FpMatrix> basis;
  basis.reserve(k.rows());
  for (std::size_t i = 0; i < k.rows(); ++i) {
    FpMatrix phi(dm, dn, p);
    for (std::size_t j = 0; j < unknowns; ++j) phi.set(j / dn, j % dn, k(i, j));
    basis.push_back(std::move(phi));
  }
  return basis;
}

}  // namespace hecke
