#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/linalg.hpp"
#include "hecke/poly.hpp"

namespace hecke {

class invalid_module : public std::invalid_argument {
 public:
  invalid_module(const std::string& what, std::vector<std::string> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// sum_{k=0}^{p-2} G^k: the action of sum over omega in F_p^x of T_omega
/// when G is the action of the fixed generator.
inline FpMatrix omega_sum(const FpMatrix& g) {
  g.require_square("omega_sum");
  const std::uint32_t p = g.modulus();
  FpMatrix acc = FpMatrix::zero(g.rows(), g.cols(), p);
  FpMatrix pw = FpMatrix::identity(g.rows(), p);
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    acc += pw;
    pw = pw * g;
  }
  return acc;
}

/// A finite-dimensional right module over the Hecke algebra of the torus,
/// F_p[Z x F_p^x]: X is the action of diag(p, 1/p) and G the action of the
/// fixed generator of F_p^x.
class HTModule {
 public:
  HTModule(FpMatrix x, FpMatrix g) : x_(std::move(x)), g_(std::move(g)) {
    auto v = violations(x_, g_);
    if (!v.empty()) {
      std::string what = "invalid H_T-module: " + v.front();
      throw invalid_module(what, std::move(v));
    }
  }

  static HTModule zero(std::uint32_t p) { return {FpMatrix(0, 0, p), FpMatrix(0, 0, p)}; }

  static HTModule from_character(const SmoothCharacter& chi) {
    const auto p = chi.p();
    return {FpMatrix::scalar(1, chi.u.value, p), FpMatrix::scalar(1, chi.omega_value(), p)};
  }

  /// Uniserial self-extension of `chi` of length r: a single Jordan block in
  /// X with eigenvalue u and scalar torus action.
  static HTModule uniserial(const SmoothCharacter& chi, std::size_t length) {
    const auto p = chi.p();
    FpMatrix x = FpMatrix::scalar(length, chi.u.value, p);
    for (std::size_t i = 0; i + 1 < length; ++i) x.set(i, i + 1, 1);
    return {std::move(x), FpMatrix::scalar(length, chi.omega_value(), p)};
  }

  static std::vector<std::string> violations(const FpMatrix& x, const FpMatrix& g) {
    std::vector<std::string> out;
    if (!x.is_square() || !g.is_square() || x.rows() != g.rows()) {
      out.emplace_back("X and G must be square of equal size");
      return out;
    }
    if (x.modulus() != g.modulus()) {
      out.emplace_back("X and G have different moduli");
      return out;
    }
    const std::uint32_t p = x.modulus();
    const std::size_t n = x.rows();
    if (!is_invertible(x)) out.emplace_back("X is not invertible");
    if (g.pow(p - 1) != FpMatrix::identity(n, p)) out.emplace_back("G^(p-1) != 1");
    if (x * g != g * x) out.emplace_back("X and G do not commute");
    if (!is_semisimple_operator(g)) out.emplace_back("G is not semisimple (minimal polynomial not squarefree)");
    return out;
  }

  [[nodiscard]] std::size_t dim() const { return x_.rows(); }
  [[nodiscard]] std::uint32_t modulus() const { return x_.modulus(); }
  [[nodiscard]] const FpMatrix& x() const { return x_; }
  [[nodiscard]] const FpMatrix& g() const { return g_; }
  [[nodiscard]] std::array<FpMatrix, 2> generators() const { return {x_, g_}; }

  friend bool operator==(const HTModule&, const HTModule&) = default;

 private:
  FpMatrix x_;
  FpMatrix g_;
};

inline HTModule direct_sum(const HTModule& a, const HTModule& b) {
  return {direct_sum(a.x(), b.x()), direct_sum(a.g(), b.g())};
}

/// G is always semisimple and commutes with X, so this reduces to X.
inline bool is_semisimple(const HTModule& m) { return is_semisimple_operator(m.x()); }

}  // namespace hecke
