#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hecke/h_module.hpp"
#include "hecke/ht_module.hpp"
#include "hecke/linalg.hpp"

namespace hecke {

/// Parabolic induction from H_T to H.
///
/// For an H_T-module V with U = T_{s1} T_{s0} acting on V as Y = X^-1, the
/// induced module V (x) H has basis {v (x) 1} + {v (x) T_{s1}} and
///   S1 = [[0, I], [0, C]],  S0 = [[C, 0], [Y, 0]],  G = diag(G, G^-1)
/// in row-vector convention, where C = sum_k G^k.
inline HModule induce(const HTModule& v) {
  const std::uint32_t p = v.modulus();
  const std::size_t d = v.dim();
  const FpMatrix y = *inverse(v.x());
  const FpMatrix c = omega_sum(v.g());
  const FpMatrix ginv = v.g().pow(p - 2);
  const FpMatrix id = FpMatrix::identity(d, p);

  FpMatrix s0(2 * d, 2 * d, p);
  s0.set_block(0, 0, c);
  s0.set_block(d, 0, y);
  FpMatrix s1(2 * d, 2 * d, p);
  s1.set_block(0, d, id);
  s1.set_block(d, d, c);
  return {std::move(s0), std::move(s1), direct_sum(v.g(), ginv)};
}

/// The right adjoint together with the embedding of its underlying space:
/// rows of `basis` span the stable image of U inside the H-module.
struct AdjointData {
  HTModule module;
  FpMatrix basis;
};

inline AdjointData right_adjoint_with_basis(const HModule& m) {
  const std::uint32_t p = m.modulus();
  const auto [u, g] = restrict_to_ht_positive(m);
  FpMatrix basis = fitting_split(u).invertible;
  if (basis.rows() == 0) return {HTModule::zero(p), FpMatrix(0, m.dim(), p)};
  const FpMatrix u_inv_part = restrict_operator(basis, u);
  // U realizes diag(1/p, p); X is the action of diag(p, 1/p).
  FpMatrix x = *inverse(u_inv_part);
  FpMatrix g_part = restrict_operator(basis, g);
  return {HTModule(std::move(x), std::move(g_part)), std::move(basis)};
}

/// Right adjoint of induction: the subspace on which U acts invertibly.
inline HTModule right_adjoint(const HModule& m) { return right_adjoint_with_basis(m).module; }

/// R applied to an H-linear map phi : M -> N (v -> v * phi).
inline FpMatrix right_adjoint_map(const HModule& m, const HModule& n, const FpMatrix& phi) {
  const auto rm = right_adjoint_with_basis(m);
  const auto rn = right_adjoint_with_basis(n);
  return coordinates(rn.basis, rm.basis * phi);
}

/// Dual module Hom(M, F_p) with right action through the anti-involution
/// T_s -> c - T_s, T_omega -> T_omega^-1; on matrices
///   S_i -> (C - S_i)^T,  G -> (G^-1)^T.
inline HModule dualize(const HModule& m) {
  const std::uint32_t p = m.modulus();
  const FpMatrix c = omega_sum(m.g);
  return {(c - m.s0).transpose(), (c - m.s1).transpose(), m.g.pow(p - 2).transpose()};
}

namespace detail {

/// Searches span(basis) for a map of full row rank (injective on row
/// vectors). Exhaustive when the coefficient space is small, otherwise a
/// fixed-seed random sample.
inline std::optional<FpMatrix> find_full_rank(const std::vector<FpMatrix>& basis, std::size_t rows, std::size_t cols,
                                              std::uint32_t p) {
  if (rows == 0) return FpMatrix(0, cols, p);
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  auto combine = [&](const std::vector<std::uint32_t>& coef) {
    FpMatrix acc(rows, cols, p);
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] != 0) acc += static_cast<std::int64_t>(coef[i]) * basis[i];
    }
    return acc;
  };

  constexpr std::uint64_t kExhaustiveLimit = 1U << 17U;
  std::uint64_t space = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < k; ++i) {
    space *= p;
    if (space > kExhaustiveLimit) {
      exhaustive = false;
      break;
    }
  }

  std::vector<std::uint32_t> coef(k, 0);
  if (exhaustive) {
    for (std::uint64_t idx = 1; idx < space; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < k; ++i) {
        coef[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      auto phi = combine(coef);
      if (rank(phi) == rows) return phi;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed'1e55ULL);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    for (auto& c : coef) c = dist(rng);
    auto phi = combine(coef);
    if (rank(phi) == rows) return phi;
  }
  return std::nullopt;
}

}  // namespace detail

/// An injective module map M -> N, if one exists.
template <std::size_t K>
std::optional<FpMatrix> find_embedding(const std::array<FpMatrix, K>& gens_m, const std::array<FpMatrix, K>& gens_n) {
  const std::size_t dm = gens_m.front().rows();
  const std::size_t dn = gens_n.front().rows();
  if (dm > dn) return std::nullopt;
  if (dm == 0) return FpMatrix(0, dn, gens_m.front().modulus());
  if (dn == 0) return std::nullopt;
  auto homs = intertwiner_space(std::span<const FpMatrix>(gens_m), std::span<const FpMatrix>(gens_n));
  return detail::find_full_rank(homs, dm, dn, gens_m.front().modulus());
}

template <std::size_t K>
std::optional<FpMatrix> find_isomorphism(const std::array<FpMatrix, K>& gens_m, const std::array<FpMatrix, K>& gens_n) {
  if (gens_m.front().rows() != gens_n.front().rows()) return std::nullopt;
  return find_embedding(gens_m, gens_n);
}

inline bool is_isomorphic(const HTModule& a, const HTModule& b) {
  return find_isomorphism(a.generators(), b.generators()).has_value();
}
inline bool is_isomorphic(const HModule& a, const HModule& b) {
  return find_isomorphism(a.generators(), b.generators()).has_value();
}

inline std::size_t hom_dim(const HTModule& a, const HTModule& b) {
  if (a.dim() == 0 || b.dim() == 0) return 0;
  const auto ga = a.generators();
  const auto gb = b.generators();
  return intertwiner_space(std::span<const FpMatrix>(ga), std::span<const FpMatrix>(gb)).size();
}
inline std::size_t hom_dim(const HModule& a, const HModule& b) {
  if (a.dim() == 0 || b.dim() == 0) return 0;
  const auto ga = a.generators();
  const auto gb = b.generators();
  return intertwiner_space(std::span<const FpMatrix>(ga), std::span<const FpMatrix>(gb)).size();
}

/// Extension module with `sub` as submodule and `quotient` as quotient:
/// generators [[gen_sub, 0], [D, gen_quot]] acting on row vectors.
inline HModule extension_module(const HModule& sub, const HModule& quotient, const std::array<FpMatrix, 3>& cocycle) {
  const auto gs = sub.generators();
  const auto gq = quotient.generators();
  std::array<FpMatrix, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    FpMatrix e(sub.dim() + quotient.dim(), sub.dim() + quotient.dim(), sub.modulus());
    e.set_block(0, 0, gs[i]);
    e.set_block(sub.dim(), 0, cocycle[i]);
    e.set_block(sub.dim(), sub.dim(), gq[i]);
    out[i] = std::move(e);
  }
  return {std::move(out[0]), std::move(out[1]), std::move(out[2])};
}

struct Ext1Result {
  std::size_t dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  /// One extension per basis class of Ext^1, in deterministic order.
  std::vector<HModule> representatives;
};

/// Ext^1_H(quotient, sub): extensions 0 -> sub -> E -> quotient -> 0.
///
/// Off-diagonal blocks D = (D_s0, D_s1, D_g) satisfying the linearised
/// relations form the cocycles; D = Phi*gen_sub - gen_quot*Phi are the
/// coboundaries.
inline Ext1Result ext1_h_modules(const HModule& sub, const HModule& quotient) {
  require_valid(sub, "ext1_h_modules(sub)");
  require_valid(quotient, "ext1_h_modules(quotient)");
  sub.g.check_modulus(quotient.g);
  const std::uint32_t p = sub.modulus();
  const std::size_t da = sub.dim();
  const std::size_t db = quotient.dim();
  const std::size_t block = db * da;
  if (block == 0) return {};
  const std::size_t unknowns = 3 * block;

  auto unpack = [&](auto&& value_at) {
    std::array<FpMatrix, 3> d{FpMatrix(db, da, p), FpMatrix(db, da, p), FpMatrix(db, da, p)};
    for (std::size_t j = 0; j < unknowns; ++j) d[j / block].set((j % block) / da, j % da, value_at(j));
    return d;
  };

  // Columns of the linearised relation map, one per unknown.
  std::vector<FpVector> columns;
  columns.reserve(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    auto d = unpack([&](std::size_t j) { return j == k ? 1 : 0; });
    const HModule e = extension_module(sub, quotient, d);
    FpVector col;
    for (const auto& r : relation_residuals(e.s0, e.s1, e.g)) {
      const auto off = r.residual.block(da, 0, db, da);
      col.insert(col.end(), off.entries().begin(), off.entries().end());
    }
    columns.push_back(std::move(col));
  }
  FpMatrix sys(columns.front().size(), unknowns, p);
  for (std::size_t j = 0; j < unknowns; ++j)
    for (std::size_t i = 0; i < columns[j].size(); ++i) sys.set(i, j, columns[j][i]);
  const FpMatrix cocycles = kernel(sys);

  const auto gs = sub.generators();
  const auto gq = quotient.generators();
  FpMatrix cob(block, unknowns, p);
  for (std::size_t k = 0; k < block; ++k) {
    FpMatrix phi(db, da, p);
    phi.set(k / da, k % da, 1);
    for (std::size_t g = 0; g < 3; ++g) {
      const FpMatrix d = phi * gs[g] - gq[g] * phi;
      for (std::size_t j = 0; j < block; ++j) cob.set(k, g * block + j, d.entries()[j]);
    }
  }
  FpMatrix span = row_space(cob);

  Ext1Result out;
  out.cocycle_dim = cocycles.rows();
  out.coboundary_dim = span.rows();
  out.dim = out.cocycle_dim - out.coboundary_dim;
  for (std::size_t i = 0; i < cocycles.rows() && out.representatives.size() < out.dim; ++i) {
    const FpMatrix candidate = vstack(span, cocycles.block(i, 0, 1, unknowns));
    if (rank(candidate) == span.rows()) continue;
    span = candidate;
    auto d = unpack([&](std::size_t j) { return cocycles(i, j); });
    out.representatives.push_back(extension_module(sub, quotient, d));
  }
  return out;
}

}  // namespace hecke
