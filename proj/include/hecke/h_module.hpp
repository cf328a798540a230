#pragma once

#include <array>
#include <string>
#include <vector>

#include "hecke/ht_module.hpp"

namespace hecke {

/// A finite-dimensional right module over the pro-p Iwahori-Hecke algebra H
/// of SL_2(Q_p) in characteristic p.
///
/// H is generated by T_{s0}, T_{s1} and T_omega (omega in F_p^x) subject to
///   omega -> T_omega a group embedding,
///   T_omega T_s = T_s T_{omega^-1},
///   T_s^2 = T_s c   with c = sum_omega T_omega.
/// G is the action of T_omega for the smallest primitive root.
///
/// Construction only checks shapes; use verify_relations() for validity.
struct HModule {
  FpMatrix s0;
  FpMatrix s1;
  FpMatrix g;

  HModule(FpMatrix s0_, FpMatrix s1_, FpMatrix g_) : s0(std::move(s0_)), s1(std::move(s1_)), g(std::move(g_)) {
    const auto n = g.rows();
    for (const auto* m : {&s0, &s1, &g}) {
      if (!m->is_square() || m->rows() != n) throw dimension_error("H-module generators must be square of equal size");
      g.check_modulus(*m);
    }
  }

  static HModule zero(std::uint32_t p) { return {FpMatrix(0, 0, p), FpMatrix(0, 0, p), FpMatrix(0, 0, p)}; }

  [[nodiscard]] std::size_t dim() const { return g.rows(); }
  [[nodiscard]] std::uint32_t modulus() const { return g.modulus(); }
  [[nodiscard]] std::array<FpMatrix, 3> generators() const { return {s0, s1, g}; }

  friend bool operator==(const HModule&, const HModule&) = default;
};

inline HModule direct_sum(const HModule& a, const HModule& b) {
  return {direct_sum(a.s0, b.s0), direct_sum(a.s1, b.s1), direct_sum(a.g, b.g)};
}

struct RelationResidual {
  std::string name;
  FpMatrix residual;
};

/// Each defining relation written as "lhs - rhs", evaluated on the module's
/// matrices. A module is valid iff every residual vanishes.
inline std::vector<RelationResidual> relation_residuals(const FpMatrix& s0, const FpMatrix& s1, const FpMatrix& g) {
  const std::uint32_t p = g.modulus();
  const std::size_t n = g.rows();
  const FpMatrix c = omega_sum(g);
  std::vector<RelationResidual> out;
  out.push_back({"G^(p-1) = 1", g.pow(p - 1) - FpMatrix::identity(n, p)});
  const std::array<std::pair<const char*, const FpMatrix*>, 2> reflections{{{"S0", &s0}, {"S1", &s1}}};
  for (const auto& [label, s] : reflections) {
    const std::string name(label);
    // T_omega T_s = T_s T_omega^-1, multiplied through by T_omega on the right.
    out.push_back({"G " + name + " G = " + name, g * *s * g - *s});
    out.push_back({name + "^2 = " + name + " c", *s * *s - *s * c});
  }
  return out;
}

/// Names of violated relations; empty means the matrices define an H-module.
inline std::vector<std::string> verify_relations(const HModule& m) {
  std::vector<std::string> bad;
  for (auto& r : relation_residuals(m.s0, m.s1, m.g)) {
    if (!r.residual.is_zero()) bad.push_back(std::move(r.name));
  }
  return bad;
}

inline void require_valid(const HModule& m, const std::string& context) {
  auto bad = verify_relations(m);
  if (bad.empty()) return;
  std::string what = context + ": relation violated: " + bad.front();
  throw invalid_module(what, std::move(bad));
}

/// One-dimensional H-modules.
///
/// trivial: T_s -> 0 (the index q vanishes mod p); sign: T_s -> -1; both
/// with T_omega -> 1. A supersingular character is either T_{s0}, T_{s1}
/// acting by one each of {0, -1} with trivial torus part, or both acting by
/// 0 with a nontrivial torus character g -> g^e.
struct HCharacterKind {
  enum class Tag { trivial, sign, supersingular };
  Tag tag = Tag::trivial;
  int a0 = 0;
  int a1 = 0;
  std::uint32_t e = 0;

  static HCharacterKind trivial() { return {Tag::trivial, 0, 0, 0}; }
  static HCharacterKind sign() { return {Tag::sign, -1, -1, 0}; }
  static HCharacterKind supersingular(int a0, int a1, std::uint32_t e) { return {Tag::supersingular, a0, a1, e}; }

  [[nodiscard]] std::string to_string() const {
    switch (tag) {
      case Tag::trivial: return "chi_triv";
      case Tag::sign: return "chi_sign";
      case Tag::supersingular: break;
    }
    return "supersingular(" + std::to_string(a0) + "," + std::to_string(a1) + "," + std::to_string(e) + ")";
  }

  friend bool operator==(const HCharacterKind&, const HCharacterKind&) = default;
};

inline bool is_valid_kind(const HCharacterKind& k, std::uint32_t p) {
  if (k.tag != HCharacterKind::Tag::supersingular) return true;
  if (k.e >= p - 1) return false;
  const bool mixed = (k.a0 == 0 && k.a1 == -1) || (k.a0 == -1 && k.a1 == 0);
  if (mixed) return k.e == 0;
  return k.a0 == 0 && k.a1 == 0 && k.e != 0;
}

/// The 1x1 matrices of a character kind, without validation.
inline HModule raw_character_module(const HCharacterKind& k, std::uint32_t p) {
  const auto omega = pow_mod(primitive_root(p), k.e, p);
  return {FpMatrix::scalar(1, k.a0, p), FpMatrix::scalar(1, k.a1, p), FpMatrix::scalar(1, omega, p)};
}

inline HModule make_character_module(const HCharacterKind& k, std::uint32_t p) {
  require_supported_prime(p);
  if (!is_valid_kind(k, p)) throw std::invalid_argument("invalid character kind " + k.to_string() + " at p=" + std::to_string(p));
  return raw_character_module(k, p);
}

/// Every supersingular character at p, in a fixed order.
inline std::vector<HCharacterKind> supersingular_kinds(std::uint32_t p) {
  std::vector<HCharacterKind> out{HCharacterKind::supersingular(0, -1, 0), HCharacterKind::supersingular(-1, 0, 0)};
  for (std::uint32_t e = 1; e + 1 < p; ++e) out.push_back(HCharacterKind::supersingular(0, 0, e));
  return out;
}

/// The operator U = S1 * S0, the action of T_{s1} T_{s0} (the Iwahori-Matsumoto
/// element of the antidominant translation diag(1/p, p)), with the torus action.
struct PositivePart {
  FpMatrix u;
  FpMatrix g;
};

inline PositivePart restrict_to_ht_positive(const HModule& m) { return {m.s1 * m.s0, m.g}; }

}  // namespace hecke
