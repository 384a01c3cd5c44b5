#include <gtest/gtest.h>

#include <functional>

#include "coxinv/ringanalysis.hpp"

using namespace coxinv;

namespace {

DominantCharacter chi_w(const RootSystem& rs, Weight w) { return DominantCharacter::from_weight(rs, w); }

}  // namespace

TEST(Parabolic, SupportOfWeight) {
  EXPECT_EQ(ParabolicSupport::of(Weight{2, 0, 1, 0}).indices, (std::vector<int>{1, 3}));
  EXPECT_TRUE(ParabolicSupport::of(Weight{0, 0}).empty());
}

TEST(Parabolic, DimensionExamples) {
  const auto a4 = build('A', 4);
  EXPECT_EQ(dim_G_mod_P(a4, {{1}}), 4);
  EXPECT_EQ(dim_G_mod_P(a4, {{2}}), 6);
  // A4 with J = {1, 3}: only a2, a4 and the A1 x A1 Levi roots are excluded
  EXPECT_EQ(dim_G_mod_P(a4, {{1, 3}}), 8);
  EXPECT_EQ(dim_G_mod_P(a4, {{1, 2, 3, 4}}), 10);
  EXPECT_EQ(dim_G_mod_P(build('B', 3), {{1}}), 5);
  EXPECT_EQ(dim_G_mod_P(build('D', 4), {{2}}), 9);
  EXPECT_EQ(dim_G_mod_P(build('E', 6), {{2}}), 21);
  EXPECT_EQ(dim_G_mod_P(build('E', 7), {{1}}), 33);
  EXPECT_EQ(dim_G_mod_P(build('E', 8), {{8}}), 57);
  EXPECT_EQ(dim_G_mod_P(build('F', 4), {{1}}), 15);
  EXPECT_EQ(dim_G_mod_P(build('G', 2), {{2}}), 5);
}

TEST(Parabolic, ErrorsOnEmptyOrBadSupport) {
  const auto rs = build('A', 3);
  try {
    dim_G_mod_P(rs, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
  }
  EXPECT_THROW(dim_G_mod_P(rs, {{4}}), Error);
}

TEST(Krull, Examples) {
  EXPECT_EQ(krull_dim_invariant_ring(build('A', 2), chi_w(build('A', 2), {1, 1})), 2);
  const auto a4 = build('A', 4);
  EXPECT_EQ(krull_dim_invariant_ring(a4, chi_w(a4, {5, 0, 0, 0})), 1);
  EXPECT_EQ(krull_dim_invariant_ring(a4, chi_w(a4, {2, 0, 1, 0})), 5);
  const auto b3 = build('B', 3);
  EXPECT_EQ(krull_dim_invariant_ring(b3, chi_w(b3, {1, 0, 0})), 3);
  EXPECT_EQ(krull_dim_invariant_ring(b3, chi_w(b3, {0, 1, 0})), 5);
  EXPECT_THROW(krull_dim_invariant_ring(b3, chi_w(b3, {0, 0, 0})), Error);
}

TEST(Hilbert, PrefixExamples) {
  const auto a2 = build('A', 2);
  EXPECT_EQ(hilbert_prefix(a2, chi_w(a2, {1, 1}), 3).values, (std::vector<std::int64_t>{1, 2, 3, 4}));
  const auto a4 = build('A', 4);
  EXPECT_EQ(hilbert_prefix(a4, chi_w(a4, {5, 0, 0, 0}), 3).values, (std::vector<std::int64_t>{1, 1, 1, 1}));
  const auto b3 = build('B', 3);
  const auto h = hilbert_prefix(b3, chi_w(b3, {1, 0, 0}), 2);
  EXPECT_EQ(h.values, (std::vector<std::int64_t>{1, 1, 3}));
  EXPECT_EQ(h.degree_bound(), 2);
  EXPECT_THROW(hilbert_prefix(b3, chi_w(b3, {1, 0, 0}), 0), Error);
}

TEST(Hilbert, FreeGeneratorInference) {
  auto g = infer_free_generators(std::vector<std::int64_t>{1, 2, 3, 4});
  EXPECT_TRUE(g.consistent);
  EXPECT_EQ(g.degrees, (std::vector<int>{1, 1}));
  g = infer_free_generators(std::vector<std::int64_t>{1, 1, 1, 1});
  EXPECT_EQ(g.degrees, (std::vector<int>{1}));
  g = infer_free_generators(std::vector<std::int64_t>{1, 0, 2, 0, 3});
  EXPECT_TRUE(g.consistent);
  EXPECT_EQ(g.degrees, (std::vector<int>{2, 2}));
  g = infer_free_generators(std::vector<std::int64_t>{1, 1, 3});
  EXPECT_EQ(g.degrees, (std::vector<int>{1, 2, 2}));
}

TEST(Hilbert, InconsistentPrefixes) {
  auto g = infer_free_generators(std::vector<std::int64_t>{1, 2, 2});
  EXPECT_FALSE(g.consistent);
  EXPECT_EQ(g.failed_degree, 2);
  g = infer_free_generators(std::vector<std::int64_t>{2, 1});
  EXPECT_FALSE(g.consistent);
  EXPECT_EQ(g.failed_degree, 0);
  EXPECT_FALSE(infer_free_generators(std::vector<std::int64_t>{}).consistent);
}

TEST(Hilbert, FreeAlgebraPrefixRoundTrip) {
  for (int n = 1; n <= 6; ++n) {
    const auto h = free_algebra_prefix(n, 5);
    const auto g = infer_free_generators(h);
    EXPECT_TRUE(g.consistent);
    EXPECT_EQ(g.degrees, std::vector<int>(n, 1));
  }
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Verdict, PolynomialExamples) {
  const auto a2 = build('A', 2);
  const auto v = verdict(a2, chi_w(a2, {1, 1}));
  EXPECT_TRUE(v.polynomial_by_theorem);
  EXPECT_TRUE(v.hilbert_consistent);
  EXPECT_EQ(v.zero_weight_dim, 2);
  EXPECT_EQ(v.krull_dim, 2);
  EXPECT_TRUE(theorem_coherent(v));

  for (int n = 2; n <= 4; ++n) {
    const auto rs = build('B', n);
    const auto w = verdict(rs, DominantCharacter::from_weight(rs, rs.fundamental_weight(1)), 4);
    EXPECT_TRUE(w.polynomial_by_theorem) << n;
    std::vector<int> want{1};
    want.insert(want.end(), static_cast<std::size_t>(n - 1), 2);
    EXPECT_EQ(w.generators.degrees, want) << n;
    EXPECT_TRUE(theorem_coherent(w)) << n;
  }
}

TEST(Verdict, NonPolynomialExamples) {
  const auto a4 = build('A', 4);
  const auto v = verdict(a4, chi_w(a4, {2, 0, 1, 0}), 4);
  EXPECT_FALSE(v.polynomial_by_theorem);
  EXPECT_EQ(v.zero_weight_dim, 6);
  EXPECT_EQ(v.krull_dim, 5);
  EXPECT_TRUE(theorem_coherent(v));

  const auto a3 = build('A', 3);
  const auto u = verdict(a3, chi_w(a3, {0, 2, 0}), 4);
  EXPECT_EQ(u.zero_weight_dim, 2);
  EXPECT_TRUE(u.polynomial_by_theorem);
  EXPECT_TRUE(theorem_coherent(u));
}

TEST(Verdict, NotApplicable) {
  const auto a2 = build('A', 2);
  const auto b3 = build('B', 3);
  for (auto f : std::vector<std::function<void()>>{
           [&] { verdict(a2, chi_w(a2, {0, 0})); },
           [&] { verdict(a2, chi_w(a2, {2, 2})); },  // decomposable
           [&] { verdict(b3, chi_w(b3, {0, 1, 0})); },  // no witness
       }) {
    try {
      f();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotApplicable);
    }
  }
}

TEST(HighestRoot, KrullDimensionVersusRank) {
  // For chi = alpha_0, E = g and h(1) = rank; the ring is polynomial exactly when
  // the Krull dimension equals the rank.
  for (const char* name : {"A2", "A3", "B2", "C3"}) {
    const auto rs = build(name[0], name[1] - '0');
    const auto chi = DominantCharacter::from_weight(rs, rs.highest_long_root());
    EXPECT_EQ(krull_dim_invariant_ring(rs, chi), rs.rank()) << name;
  }
  for (const char* name : {"B3", "B4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const auto rs = build(name[0], name[1] - '0');
    const auto chi = DominantCharacter::from_weight(rs, rs.highest_long_root());
    EXPECT_GT(krull_dim_invariant_ring(rs, chi), rs.rank()) << name;
  }
}
