#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coxinv/ringanalysis.hpp"

using namespace coxinv;

namespace {

constexpr std::uint32_t kSeed = 20240611;

const char* const kTypes[] = {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"};

RootSystem pick(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> d(0, std::size(kTypes) - 1);
  const char* name = kTypes[d(rng)];
  return build(name[0], name[1] - '0');
}

Weight random_weight(std::mt19937& rng, const RootSystem& rs, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Weight w{IntVec(rs.n(), 0)};
  for (auto& x : w.coords) x = d(rng);
  return w;
}

WeylElement random_element(std::mt19937& rng, const RootSystem& rs, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(1, rs.rank());
  std::vector<int> word(static_cast<std::size_t>(len(rng)));
  for (auto& i : word) i = letter(rng);
  return element_from_word(rs, word);
}

DominantCharacter random_dominant_root_lattice(std::mt19937& rng, const RootSystem& rs) {
  while (true) {
    const Weight w = random_weight(rng, rs, 0, 3);
    if (!w.is_zero() && rs.in_root_lattice(w)) return DominantCharacter::from_weight(rs, w);
  }
}

}  // namespace

TEST(Properties, FormIsWeylInvariant) {
  std::mt19937 rng(kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = pick(rng);
    const auto w = random_element(rng, rs, 12);
    const auto x = random_weight(rng, rs, -4, 4);
    const auto y = random_weight(rng, rs, -4, 4);
    EXPECT_EQ(rs.bilinear_form(w.apply(x), w.apply(y)), rs.bilinear_form(x, y)) << rs.spec().name();
  }
}

TEST(Properties, WeylMatricesPermuteRoots) {
  std::mt19937 rng(kSeed + 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rs = pick(rng);
    const auto w = random_element(rng, rs, 15);
    std::set<Weight> all;
    for (const auto& r : rs.positive_root_weights()) {
      all.insert(r);
      all.insert(Weight(IntVec(rs.n(), 0)) - r);
    }
    std::set<Weight> image;
    for (const auto& r : all) image.insert(w.apply(r));
    EXPECT_EQ(image, all) << rs.spec().name();
  }
}

TEST(Properties, MultiplicityIsWeylInvariant) {
  std::mt19937 rng(kSeed + 2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rs = pick(rng);
    if (rs.rank() > 3) continue;
    const auto lambda = random_weight(rng, rs, 0, 2);
    FreudenthalMultiplicities table(rs, lambda);
    const auto w = random_element(rng, rs, 10);
    for (const auto& [mu, m] : table.character()) {
      EXPECT_EQ(table.multiplicity(w.apply(mu)), m) << rs.spec().name();
    }
  }
}

TEST(Properties, DualCharacterIsDominantInvolution) {
  std::mt19937 rng(kSeed + 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rs = pick(rng);
    const auto chi = random_weight(rng, rs, 0, 5);
    const auto dual = dual_character(rs, chi);
    EXPECT_TRUE(rs.is_dominant(dual));
    EXPECT_EQ(dual_character(rs, dual), chi) << rs.spec().name();
    EXPECT_EQ(weyl_dim(rs, dual), weyl_dim(rs, chi));
  }
}

TEST(Properties, DominantRootLatticeElementsAreStrictlyPositive) {
  std::mt19937 rng(kSeed + 4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rs = pick(rng);
    const auto chi = random_dominant_root_lattice(rng, rs);
    for (auto x : chi.root_coords.coeffs) EXPECT_GE(x, 1) << rs.spec().name();
  }
}

TEST(Properties, SemistabilityIsScaleInvariant) {
  std::mt19937 rng(kSeed + 5);
  std::uniform_int_distribution<std::int64_t> scale(2, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rs = pick(rng);
    if (rs.rank() > 4) continue;
    const auto chi = random_dominant_root_lattice(rng, rs);
    const auto k = scale(rng);
    const auto big = DominantCharacter::from_weight(rs, k * chi.weight);
    for (const auto& w : enumerate_coxeter_elements(rs))
      EXPECT_EQ(coxeter_semistable(rs, w, chi), coxeter_semistable(rs, w, big)) << rs.spec().name();
  }
}

TEST(Properties, DualOfSemistableIsSemistable) {
  std::mt19937 rng(kSeed + 6);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rs = pick(rng);
    if (rs.rank() > 4) continue;
    const auto chi = random_dominant_root_lattice(rng, rs);
    const auto dual = DominantCharacter::from_weight(rs, dual_character(rs, chi.weight));
    EXPECT_EQ(find_semistable_coxeter(rs, chi).empty(), find_semistable_coxeter(rs, dual).empty())
        << rs.spec().name();
  }
}

TEST(Properties, CoxeterElementsHaveLengthRankAndADescent) {
  for (const auto& name : kTypes) {
    const auto rs = build(name[0], name[1] - '0');
    for (const auto& c : enumerate_coxeter_elements(rs)) {
      EXPECT_EQ(length(rs, c.element), rs.rank()) << name;
      const auto d = right_descents(rs, c.element);
      EXPECT_FALSE(d.empty()) << name;
      EXPECT_TRUE(std::find(d.begin(), d.end(), c.word().back()) != d.end()) << name;
    }
  }
}

TEST(Properties, RandomWordLengthBoundedByWordSize) {
  std::mt19937 rng(kSeed + 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rs = pick(rng);
    const auto w = random_element(rng, rs, 12);
    const auto len = length(rs, w);
    EXPECT_LE(len, static_cast<std::int64_t>(w.word.size()));
    EXPECT_EQ(len % 2, static_cast<std::int64_t>(w.word.size()) % 2);
  }
}

TEST(Properties, HilbertPrefixMatchesDirectMultiplicity) {
  std::mt19937 rng(kSeed + 8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rs = pick(rng);
    if (rs.rank() > 3) continue;
    const auto chi = random_dominant_root_lattice(rng, rs);
    const auto h = hilbert_prefix(rs, chi, 2);
    const Weight zero{IntVec(rs.n(), 0)};
    EXPECT_EQ(h.values[1], weight_multiplicity(rs, chi.weight, zero));
    EXPECT_EQ(h.values[2], weight_multiplicity(rs, 2 * chi.weight, zero));
  }
}

TEST(Properties, GeneratorInferenceRecoversRandomFreeAlgebras) {
  std::mt19937 rng(kSeed + 9);
  std::uniform_int_distribution<int> count(1, 5), degree(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> degs(static_cast<std::size_t>(count(rng)));
    for (auto& d : degs) d = degree(rng);
    std::sort(degs.begin(), degs.end());
    const int top = 8;
    std::vector<std::int64_t> h(top + 1, 0);
    h[0] = 1;
    for (int d : degs)
      for (int j = d; j <= top; ++j) h[static_cast<std::size_t>(j)] += h[static_cast<std::size_t>(j - d)];
    const auto g = infer_free_generators(h);
    EXPECT_TRUE(g.consistent);
    EXPECT_EQ(g.degrees, degs);
  }
}
