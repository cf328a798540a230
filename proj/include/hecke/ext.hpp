#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/functors.hpp"
#include "hecke/ht_module.hpp"

namespace hecke {

/// A finite-length T-representation with trivial T_1-action, given either as
/// a semisimple sum of characters with multiplicities or (when `uniserial`)
/// as the uniserial self-extension of one character, of length equal to its
/// multiplicity.
struct CharMultiset {
  std::vector<std::pair<SmoothCharacter, std::size_t>> terms;
  bool uniserial = false;

  CharMultiset() = default;

  static CharMultiset character(const SmoothCharacter& chi, std::size_t mult = 1) {
    CharMultiset m;
    m.add(chi, mult);
    return m;
  }

  static CharMultiset chain(const SmoothCharacter& chi, std::size_t length) {
    CharMultiset m = character(chi, length);
    m.uniserial = length > 1;
    return m;
  }

  /// Adds `mult` copies of chi to a semisimple multiset, keeping terms sorted.
  CharMultiset& add(const SmoothCharacter& chi, std::size_t mult = 1) {
    if (mult == 0) return *this;
    if (uniserial) throw std::invalid_argument("cannot add a summand to a uniserial chain");
    auto it = std::lower_bound(terms.begin(), terms.end(), chi, [](const auto& t, const auto& c) { return t.first < c; });
    if (it != terms.end() && it->first == chi) {
      it->second += mult;
    } else {
      terms.insert(it, {chi, mult});
    }
    return *this;
  }

  [[nodiscard]] std::size_t length() const {
    std::size_t n = 0;
    for (const auto& [chi, m] : terms) n += m;
    return n;
  }
  [[nodiscard]] bool empty() const { return terms.empty(); }

  /// Composition factors with multiplicity.
  [[nodiscard]] std::map<SmoothCharacter, std::size_t> factors() const {
    std::map<SmoothCharacter, std::size_t> f;
    for (const auto& [chi, m] : terms) f[chi] += m;
    return f;
  }

  void validate() const {
    for (const auto& [chi, m] : terms) {
      if (m == 0) throw std::invalid_argument("multiplicities must be positive");
    }
    if (uniserial && terms.size() != 1) throw std::invalid_argument("a uniserial chain must involve a single character");
  }

  /// The H_T-module of T_1-invariants (the whole space): chains become one
  /// Jordan block in X.
  [[nodiscard]] HTModule realize(std::uint32_t p) const {
    validate();
    HTModule out = HTModule::zero(p);
    for (const auto& [chi, m] : terms) {
      if (chi.p() != p) throw modulus_error("character " + chi.to_string() + " is not over p=" + std::to_string(p));
      if (uniserial) return HTModule::uniserial(chi, m);
      for (std::size_t i = 0; i < m; ++i) out = direct_sum(out, HTModule::from_character(chi));
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [chi, m] : terms) {
      if (!s.empty()) s += " + ";
      s += chi.to_string();
      if (m > 1) s += (uniserial ? "^chain" : "^") + std::to_string(m);
    }
    return s;
  }

  friend bool operator==(const CharMultiset&, const CharMultiset&) = default;
};

using ExtTable = std::map<int, std::size_t>;

struct CompositionFactors {
  std::map<SmoothCharacter, std::size_t> characters;
  /// Dimension not accounted for by F_p-rational characters.
  std::size_t other = 0;

  friend bool operator==(const CompositionFactors&, const CompositionFactors&) = default;
};

/// Jordan-Holder factors of an H_T-module: joint generalized eigenspaces of
/// (X, G).
inline CompositionFactors composition_factors(const HTModule& m) {
  const std::uint32_t p = m.modulus();
  const std::uint32_t g = primitive_root(p);
  CompositionFactors out;
  std::size_t seen = 0;
  for (std::uint32_t e = 0; e + 1 < p; ++e) {
    const std::uint32_t lambda = pow_mod(g, e, p);
    const FpMatrix eig = left_kernel(m.g() - FpMatrix::scalar(m.dim(), lambda, p));
    if (eig.rows() == 0) continue;
    const FpMatrix xr = restrict_operator(eig, m.x());
    const std::size_t k = xr.rows();
    std::size_t here = 0;
    for (std::uint32_t u = 1; u < p; ++u) {
      const std::size_t mult = left_kernel((xr - FpMatrix::scalar(k, u, p)).pow(k)).rows();
      if (mult > 0) out.characters[SmoothCharacter(p, u, e)] += mult;
      here += mult;
    }
    out.other += k - here;
    seen += k;
  }
  out.other += m.dim() - seen;
  return out;
}

inline CompositionFactors composition_factors(const CharMultiset& c) { return {c.factors(), 0}; }

struct ExtResult {
  std::size_t dim = 0;
  /// Hom basis for n = 0; representatives of a complement to the image of
  /// the adjoint-difference map for n = 1.
  std::vector<FpMatrix> basis;
};

/// dim Ext^n over H_T = F_p[X^{+-1}] x F_p[F_p^x].
///
/// On Hom_{F_p^x}(M, N) the map Phi -> X_M Phi - Phi X_N has kernel
/// Hom_{H_T}(M, N) and cokernel Ext^1; H_T has global dimension 1.
inline ExtResult ext_ht(int n, const HTModule& m, const HTModule& nmod) {
  if (m.modulus() != nmod.modulus()) throw modulus_error("ext_ht: modules over different primes");
  if (n < 0 || n > 1 || m.dim() == 0 || nmod.dim() == 0) return {};
  const std::uint32_t p = m.modulus();
  if (n == 0) {
    const auto gm = m.generators();
    const auto gn = nmod.generators();
    auto basis = intertwiner_space(std::span<const FpMatrix>(gm), std::span<const FpMatrix>(gn));
    return {basis.size(), std::move(basis)};
  }

  const std::array<FpMatrix, 1> gm{m.g()};
  const std::array<FpMatrix, 1> gn{nmod.g()};
  const auto omega_homs = intertwiner_space(std::span<const FpMatrix>(gm), std::span<const FpMatrix>(gn));
  const std::size_t k = omega_homs.size();
  if (k == 0) return {};
  const std::size_t flat = m.dim() * nmod.dim();
  FpMatrix basis_rows(k, flat, p);
  FpMatrix image_rows(k, flat, p);
  for (std::size_t i = 0; i < k; ++i) {
    const FpMatrix img = m.x() * omega_homs[i] - omega_homs[i] * nmod.x();
    for (std::size_t j = 0; j < flat; ++j) {
      basis_rows.set(i, j, omega_homs[i].entries()[j]);
      image_rows.set(i, j, img.entries()[j]);
    }
  }
  FpMatrix span = row_space(image_rows);
  ExtResult out;
  out.dim = k - span.rows();
  for (std::size_t i = 0; i < k && out.basis.size() < out.dim; ++i) {
    const FpMatrix candidate = vstack(span, basis_rows.block(i, 0, 1, flat));
    if (rank(candidate) == span.rows()) continue;
    span = candidate;
    out.basis.push_back(omega_homs[i]);
  }
  return out;
}

inline ExtTable ext_ht_table(const HTModule& m, const HTModule& n) {
  return {{0, ext_ht(0, m, n).dim}, {1, ext_ht(1, m, n).dim}};
}

/// dim Ext^n_T(sigma, kappa) for trivial-T_1-action representations.
///
/// The spectral sequence Ext^i_{H_T}(sigma, H^j(T_1, kappa)) => Ext^{i+j}_T
/// degenerates, and H^0(T_1, kappa) = H^1(T_1, kappa) = kappa here, so the
/// answer is e_n + e_{n-1} with e_i = dim Ext^i_{H_T}(sigma, kappa).
inline std::size_t ext_t(int n, const CharMultiset& sigma, const CharMultiset& kappa, std::uint32_t p) {
  if (n < 0) return 0;
  const HTModule s = sigma.realize(p);
  const HTModule k = kappa.realize(p);
  auto e = [&](int i) -> std::size_t { return (i < 0 || i > 1) ? 0 : ext_ht(i, s, k).dim; };
  return e(n) + e(n - 1);
}

inline ExtTable ext_t_table(const CharMultiset& sigma, const CharMultiset& kappa, std::uint32_t p) {
  ExtTable t;
  for (int n = 0; n <= 2; ++n) t[n] = ext_t(n, sigma, kappa, p);
  return t;
}

/// dim Hom = dim Ext^1 over H_T (the adjoint-difference map is square).
inline bool euler_check(const HTModule& m, const HTModule& n) { return ext_ht(0, m, n).dim == ext_ht(1, m, n).dim; }

}  // namespace hecke
