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

}  // namespace

TEST(ExtHT, CharacterTableIsBinomialOneTimesDelta) {
  const std::uint32_t p = 5;
  for (const auto& a : all_characters(p)) {
    for (const auto& b : all_characters(p)) {
      const auto ma = HTModule::from_character(a);
      const auto mb = HTModule::from_character(b);
      for (int n = 0; n <= 3; ++n) {
        const std::size_t expected = a == b ? oracle::binom(1, static_cast<std::uint64_t>(n)) : 0;
        EXPECT_EQ(ext_ht(n, ma, mb).dim, expected) << a.to_string() << " " << b.to_string() << " n=" << n;
      }
    }
  }
}

TEST(ExtHT, JordanBlockSelfExt) {
  const auto j = HTModule::uniserial(SmoothCharacter(7, 3, 0), 2);
  EXPECT_EQ(ext_ht(0, j, j).dim, 2U);
  EXPECT_EQ(ext_ht(1, j, j).dim, 2U);
  EXPECT_EQ(oracle::intertwiner_dim({j.x(), j.g()}, {j.x(), j.g()}), 2U);
}

TEST(ExtHT, IdentityGivesNonzeroHom) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const auto m = props::random_ht_module(rng, 1 + t % 4, 7);
    EXPECT_GE(ext_ht(0, m, m).dim, 1U);
  }
}

TEST(ExtHT, ZeroModuleAndNegativeDegrees) {
  const auto z = HTModule::zero(5);
  const auto c = HTModule::from_character(rho_bar(5));
  EXPECT_EQ(ext_ht(0, z, c).dim, 0U);
  EXPECT_EQ(ext_ht(1, c, z).dim, 0U);
  EXPECT_EQ(ext_ht(-1, c, c).dim, 0U);
  EXPECT_THROW((void)ext_ht(0, c, HTModule::from_character(rho_bar(7))), modulus_error);
}

TEST(ExtHT, Ext1RepresentativesGiveNonsplitExtensions) {
  // Each basis class D of Ext^1(chi, chi) glues to [[X, 0], [D, X]], which
  // must then be a Jordan block.
  const auto chi = SmoothCharacter(5, 2, 1);
  const auto m = HTModule::from_character(chi);
  const auto e = ext_ht(1, m, m);
  ASSERT_EQ(e.basis.size(), 1U);
  FpMatrix x(2, 2, 5);
  x.set_block(0, 0, m.x());
  x.set_block(1, 0, e.basis.front());
  x.set_block(1, 1, m.x());
  const HTModule glued(x, direct_sum(m.g(), m.g()));
  EXPECT_FALSE(is_semisimple(glued));
}

TEST(ExtHT, EulerCheck) {
  const auto c = HTModule::from_character(rho_bar(5));
  const auto d = HTModule::from_character(alpha_bar(5));
  EXPECT_TRUE(euler_check(c, c));
  EXPECT_TRUE(euler_check(c, d));
  const auto r = props::euler_random(100, 31337);
  EXPECT_TRUE(r.ok) << r.failure;
  EXPECT_EQ(r.checked, 100U);
}

TEST(ExtT, CharacterTableIsBinomialTwoTimesDelta) {
  const std::uint32_t p = 5;
  for (const auto& a : all_characters(p)) {
    for (const auto& b : all_characters(p)) {
      for (int n = 0; n <= 3; ++n) {
        const std::size_t expected = a == b ? oracle::binom(2, static_cast<std::uint64_t>(n)) : 0;
        EXPECT_EQ(ext_t(n, CharMultiset::character(a), CharMultiset::character(b), p), expected);
      }
    }
  }
}

TEST(ExtT, ChainAgainstCharacterIsBinomialTwo) {
  const std::uint32_t p = 5;
  for (const auto& c : all_characters(p)) {
    const auto sigma = CharMultiset::chain(c, 2);
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(ext_t(n, sigma, CharMultiset::character(c), p), oracle::binom(2, static_cast<std::uint64_t>(n)));
    }
    EXPECT_EQ(ext_t(0, sigma, sigma, p), 2U);
  }
}

TEST(ExtT, VanishesAboveTwoOnCorpus) {
  const std::uint32_t p = 5;
  std::vector<CharMultiset> corpus;
  for (const auto& c : all_characters(p)) {
    corpus.push_back(CharMultiset::character(c));
    corpus.push_back(CharMultiset::chain(c, 2));
  }
  CharMultiset mixed = CharMultiset::character(rho_bar(p));
  mixed.add(alpha_bar(p), 2);
  corpus.push_back(mixed);
  for (const auto& s : corpus) {
    for (const auto& k : corpus) {
      EXPECT_EQ(ext_t(3, s, k, p), 0U);
      EXPECT_EQ(ext_t(4, s, k, p), 0U);
    }
  }
}

TEST(ExtT, TableHelper) {
  const auto c = CharMultiset::character(rho_bar(5));
  EXPECT_EQ(ext_t_table(c, c, 5), (ExtTable{{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_EQ(ext_t_table(c, CharMultiset::character(alpha_bar(5)), 5), (ExtTable{{0, 0}, {1, 0}, {2, 0}}));
  const auto h = HTModule::from_character(rho_bar(5));
  EXPECT_EQ(ext_ht_table(h, h), (ExtTable{{0, 1}, {1, 1}}));
}

TEST(CharMultiset, CompositionFactorsOfSums) {
  const std::uint32_t p = 7;
  CharMultiset m = CharMultiset::character(SmoothCharacter(p, 2, 1), 2);
  m.add(SmoothCharacter(p, 5, 3));
  const auto f = composition_factors(m.realize(p));
  EXPECT_EQ(f, composition_factors(m));
  EXPECT_EQ(m.length(), 3U);
  EXPECT_THROW(CharMultiset::chain(rho_bar(p), 2).add(alpha_bar(p)), std::invalid_argument);
}

TEST(CharMultiset, IrrationalEigenvaluesCountAsOther) {
  // X with characteristic polynomial x^2 + 2 has no F_5-rational eigenvalue.
  const HTModule m(FpMatrix::from_rows(5, {{0, 1}, {3, 0}}), FpMatrix::identity(2, 5));
  const auto f = composition_factors(m);
  EXPECT_TRUE(f.characters.empty());
  EXPECT_EQ(f.other, 2U);
}
