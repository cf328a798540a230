#include <gtest/gtest.h>

#include "hecke/hecke.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace hecke;

namespace {

std::vector<SmoothCharacter> all_characters(std::uint32_t p) {
  std::vector<SmoothCharacter> out;
  for (std::uint32_t u = 1; u < p; ++u)
    for (std::uint32_t e = 0; e + 1 < p; ++e) out.emplace_back(p, u, e);
  return out;
}

HTModule ht(const SmoothCharacter& c) { return HTModule::from_character(c); }

}  // namespace

// ---- characters

TEST(Character, Construction) {
  const SmoothCharacter c(5, 7, 5);
  EXPECT_EQ(c.u.value, 2U);
  EXPECT_EQ(c.e, 1U);
  EXPECT_THROW(SmoothCharacter(5, 0, 1), std::invalid_argument);
  EXPECT_THROW(SmoothCharacter(5, 10, 1), std::invalid_argument);
  EXPECT_THROW(SmoothCharacter(4, 1, 1), modulus_error);
}

TEST(Character, DualTwist) {
  EXPECT_EQ(dual_twist(rho_bar(5)), rho_bar(5));
  EXPECT_EQ(dual_twist(trivial_character(5)), alpha_bar(5));
  EXPECT_EQ(dual_twist(SmoothCharacter(5, 2, 3)), SmoothCharacter(5, 3, 3));
  EXPECT_EQ(rho_bar(7) * rho_bar(7), alpha_bar(7));
  for (const auto& c : all_characters(7)) EXPECT_EQ(dual_twist(dual_twist(c)), c);
}

TEST(Character, FixedPointsOfDualTwist) {
  // chi = chi^-1 alpha  <=>  u^2 = 1 and 2e = 2 mod (p-1).
  std::vector<SmoothCharacter> fixed;
  for (const auto& c : all_characters(5)) {
    if (dual_twist(c) == c) fixed.push_back(c);
  }
  const std::vector<SmoothCharacter> expected{{5, 1, 1}, {5, 1, 3}, {5, 4, 1}, {5, 4, 3}};
  EXPECT_EQ(fixed, expected);
}

// ---- H_T-modules

TEST(HTModule, ValidationRejectsBadInput) {
  EXPECT_THROW(HTModule(FpMatrix::scalar(1, 0, 5), FpMatrix::scalar(1, 1, 5)), invalid_module);
  EXPECT_THROW(HTModule(FpMatrix::scalar(1, 1, 5), FpMatrix::scalar(1, 0, 5)), invalid_module);  // G = 0
  const auto x = FpMatrix::from_rows(5, {{1, 1}, {0, 1}});
  const auto g = FpMatrix::from_rows(5, {{1, 0}, {0, 4}});
  EXPECT_THROW(HTModule(x, g), invalid_module);  // X, G do not commute
  try {
    HTModule bad(FpMatrix::scalar(1, 0, 5), FpMatrix::scalar(1, 0, 5));
    FAIL();
  } catch (const invalid_module& e) {
    EXPECT_GE(e.violations().size(), 2U);
  }
}

TEST(HTModule, Uniserial) {
  const auto m = HTModule::uniserial(SmoothCharacter(5, 3, 2), 3);
  EXPECT_EQ(m.dim(), 3U);
  EXPECT_FALSE(is_semisimple(m));
  EXPECT_TRUE(is_semisimple(HTModule::uniserial(SmoothCharacter(5, 3, 2), 1)));
  const auto f = composition_factors(m);
  EXPECT_EQ(f.other, 0U);
  EXPECT_EQ(f.characters.at(SmoothCharacter(5, 3, 2)), 3U);
}

// ---- H-modules

TEST(HModule, CharacterModules) {
  const std::uint32_t p = 5;
  const auto sign = make_character_module(HCharacterKind::sign(), p);
  EXPECT_EQ(sign.s0, FpMatrix::scalar(1, -1, p));
  EXPECT_EQ(sign.s1, FpMatrix::scalar(1, -1, p));
  EXPECT_EQ(sign.g, FpMatrix::scalar(1, 1, p));
  EXPECT_TRUE(verify_relations(sign).empty());

  const auto triv = make_character_module(HCharacterKind::trivial(), p);
  EXPECT_TRUE(triv.s0.is_zero());
  EXPECT_TRUE(triv.s1.is_zero());
  EXPECT_EQ(triv.g, FpMatrix::scalar(1, 1, p));
  EXPECT_TRUE(verify_relations(triv).empty());

  const auto ss = make_character_module(HCharacterKind::supersingular(0, -1, 0), p);
  EXPECT_EQ(ss.s0, FpMatrix::scalar(1, 0, p));
  EXPECT_EQ(ss.s1, FpMatrix::scalar(1, -1, p));
  EXPECT_EQ(ss.g, FpMatrix::scalar(1, 1, p));
  EXPECT_TRUE(verify_relations(ss).empty());

  const auto ss2 = make_character_module(HCharacterKind::supersingular(0, 0, 2), p);
  EXPECT_EQ(ss2.g, FpMatrix::scalar(1, 4, p));  // 2^2
}

TEST(HModule, AllCharacterModulesMatchOracle) {
  for (std::uint32_t p : {5U, 7U, 11U}) {
    for (int a0 : {0, -1}) {
      for (int a1 : {0, -1}) {
        for (std::uint32_t e = 0; e + 1 < p; ++e) {
          const HCharacterKind k{HCharacterKind::Tag::supersingular, a0, a1, e};
          const auto m = raw_character_module(k, p);
          EXPECT_EQ(verify_relations(m).empty(), oracle::relations_hold(m.s0, m.s1, m.g)) << k.to_string() << " p=" << p;
        }
      }
    }
  }
}

TEST(HModule, SupersingularWithSignNeedsTrivialTorus) {
  // T_s acting by -1 forces c_s to act by -1, i.e. the torus character to be trivial.
  EXPECT_FALSE(is_valid_kind(HCharacterKind::supersingular(0, -1, 2), 5));
  EXPECT_FALSE(verify_relations(raw_character_module(HCharacterKind::supersingular(0, -1, 2), 5)).empty());
  EXPECT_THROW((void)make_character_module(HCharacterKind::supersingular(0, -1, 2), 5), std::invalid_argument);
  // Two mixed kinds plus p-2 nontrivial torus characters.
  EXPECT_EQ(supersingular_kinds(5).size(), 5U);
  EXPECT_EQ(supersingular_kinds(7).size(), 7U);
}

TEST(HModule, CorruptModuleReportsViolation) {
  auto m = induce(ht(rho_bar(5)));
  m.s0.set(0, 0, static_cast<std::int64_t>(m.s0(0, 0)) + 1);
  const auto v = verify_relations(m);
  ASSERT_FALSE(v.empty());
  EXPECT_NE(std::find(v.begin(), v.end(), "S0^2 = S0 c"), v.end());
  EXPECT_THROW(require_valid(m, "test"), invalid_module);
}

TEST(HModule, PositivePartOnCharacters) {
  const std::uint32_t p = 5;
  EXPECT_EQ(restrict_to_ht_positive(make_character_module(HCharacterKind::sign(), p)).u, FpMatrix::scalar(1, 1, p));
  EXPECT_EQ(restrict_to_ht_positive(make_character_module(HCharacterKind::trivial(), p)).u, FpMatrix::scalar(1, 0, p));
  for (std::uint32_t e = 0; e < 4; ++e) {
    EXPECT_EQ(restrict_to_ht_positive(raw_character_module(HCharacterKind::supersingular(0, -1, e), p)).u,
              FpMatrix::scalar(1, 0, p));
  }
}

TEST(HModule, RelationNegativeControls) {
  for (std::uint32_t p : {5U, 7U}) {
    const auto r = props::relation_negative_controls(p, 99 + p);
    EXPECT_TRUE(r.ok) << r.failure;
  }
}

// ---- induction, right adjoint, duality

TEST(Functors, InduceIsTwoDimensionalAndValid) {
  for (const auto& c : all_characters(5)) {
    const auto m = induce(ht(c));
    EXPECT_EQ(m.dim(), 2U);
    EXPECT_TRUE(verify_relations(m).empty()) << c.to_string();
    EXPECT_TRUE(oracle::relations_hold(m.s0, m.s1, m.g));
  }
}

TEST(Functors, InduceIsAdditive) {
  const auto a = SmoothCharacter(5, 2, 1);
  const auto b = SmoothCharacter(5, 3, 0);
  const auto lhs = induce(direct_sum(ht(a), ht(b)));
  const auto rhs = direct_sum(induce(ht(a)), induce(ht(b)));
  EXPECT_TRUE(is_isomorphic(lhs, rhs));
  EXPECT_EQ(oracle::intertwiner_dim({lhs.s0, lhs.s1, lhs.g}, {rhs.s0, rhs.s1, rhs.g}), 2U);
}

TEST(Functors, UnitIsIsomorphism) {
  for (std::uint32_t p : {5U, 7U}) {
    for (const auto& c : all_characters(p)) {
      const auto r = right_adjoint(induce(ht(c)));
      EXPECT_TRUE(is_isomorphic(r, ht(c))) << c.to_string();
      EXPECT_EQ(r, ht(c)) << c.to_string();
    }
  }
}

TEST(Functors, RightAdjointOfCharacters) {
  const std::uint32_t p = 5;
  EXPECT_EQ(right_adjoint(make_character_module(HCharacterKind::sign(), p)), ht(trivial_character(p)));
  EXPECT_EQ(right_adjoint(make_character_module(HCharacterKind::trivial(), p)).dim(), 0U);
  for (const auto& k : supersingular_kinds(p)) EXPECT_EQ(right_adjoint(make_character_module(k, p)).dim(), 0U) << k.to_string();
}

TEST(Functors, DualOfInduced) {
  for (const auto& c : all_characters(5)) {
    const auto m = induce(ht(c));
    const auto d = dualize(m);
    EXPECT_EQ(d.dim(), m.dim());
    EXPECT_TRUE(verify_relations(d).empty());
    EXPECT_TRUE(is_isomorphic(dualize(d), m));
    EXPECT_EQ(dualize(d), m);
    const auto tw = dual_twist(c);
    EXPECT_TRUE(is_isomorphic(right_adjoint(dualize(induce(ht(tw)))), ht(tw))) << c.to_string();
  }
}

TEST(Functors, InducedTrivialHasSignQuotient) {
  const std::uint32_t p = 7;
  const auto ind = induce(ht(trivial_character(p)));
  EXPECT_EQ(hom_dim(make_character_module(HCharacterKind::trivial(), p), ind), 1U);
  EXPECT_EQ(hom_dim(ind, make_character_module(HCharacterKind::sign(), p)), 1U);
  EXPECT_EQ(hom_dim(ind, make_character_module(HCharacterKind::trivial(), p)), 0U);
}

TEST(Functors, RightAdjointMapIsFunctorial) {
  const std::uint32_t p = 5;
  const auto ind = induce(ht(trivial_character(p)));
  const auto st = make_character_module(HCharacterKind::sign(), p);
  const auto ga = ind.generators();
  const auto gb = st.generators();
  const auto homs = intertwiner_space(std::span<const FpMatrix>(ga), std::span<const FpMatrix>(gb));
  ASSERT_EQ(homs.size(), 1U);
  const auto r = right_adjoint_map(ind, st, homs.front());
  EXPECT_EQ(r.rows(), 1U);
  EXPECT_EQ(r.cols(), 1U);
  EXPECT_EQ(rank(r), 1U);
  const auto id = right_adjoint_map(ind, ind, FpMatrix::identity(2, p));
  EXPECT_EQ(id, FpMatrix::identity(1, p));
}

TEST(Functors, AdjunctionOverCorpus) {
  const auto r = props::adjunction_corpus(5);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_GT(r.checked, 300U);
}

// ---- Ext^1 over H

TEST(Ext1H, SignSelfExtensionsAreWellFormed) {
  const auto sign = make_character_module(HCharacterKind::sign(), 5);
  const auto e = ext1_h_modules(sign, sign);
  EXPECT_EQ(e.dim, e.representatives.size());
  EXPECT_EQ(e.cocycle_dim - e.coboundary_dim, e.dim);
  for (const auto& m : e.representatives) EXPECT_TRUE(verify_relations(m).empty());
  // The zero cocycle is the split class.
  const std::array<FpMatrix, 3> zero{FpMatrix(1, 1, 5), FpMatrix(1, 1, 5), FpMatrix(1, 1, 5)};
  EXPECT_EQ(extension_module(sign, sign, zero), direct_sum(sign, sign));
}

TEST(Ext1H, NonsplitOnlyAtSelfDualPoints) {
  const std::uint32_t p = 5;
  for (const auto& c : all_characters(p)) {
    const auto sub = induce(ht(c));
    const auto quot = dualize(induce(ht(dual_twist(c))));
    const auto e = ext1_h_modules(sub, quot);
    EXPECT_EQ(e.dim, dual_twist(c) == c ? 1U : 0U) << c.to_string();
  }
}

TEST(Ext1H, NonsplitExtensionAtRhoBar) {
  const std::uint32_t p = 5;
  const auto chi = rho_bar(p);
  const auto sub = induce(ht(chi));
  const auto quot = dualize(induce(ht(chi)));
  const auto e = ext1_h_modules(sub, quot);
  ASSERT_EQ(e.representatives.size(), 1U);
  const auto& ext = e.representatives.front();
  EXPECT_TRUE(verify_relations(ext).empty());
  EXPECT_TRUE(oracle::relations_hold(ext.s0, ext.s1, ext.g));
  EXPECT_FALSE(is_isomorphic(ext, direct_sum(sub, quot)));
  const auto r = right_adjoint(ext);
  EXPECT_EQ(r.dim(), 2U);
  EXPECT_FALSE(is_semisimple(r));
  EXPECT_TRUE(is_isomorphic(r, HTModule::uniserial(chi, 2)));
  // The split sum has semisimple image.
  EXPECT_TRUE(is_semisimple(right_adjoint(direct_sum(sub, quot))));
}
