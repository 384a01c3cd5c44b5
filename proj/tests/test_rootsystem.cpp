#include <gtest/gtest.h>

#include <map>
#include <string>

#include "coxinv/rootsystem.hpp"

using namespace coxinv;

namespace {

RootCoords rc(std::initializer_list<Rational> v) { return RootCoords(std::vector<Rational>(v)); }

}  // namespace

TEST(RootSystem, A2HasThreePositiveRoots) {
  const auto rs = build('A', 2);
  ASSERT_EQ(rs.positive_roots().size(), 3u);
  EXPECT_EQ(rs.positive_roots()[0], (RootVec{1, 0}));
  EXPECT_EQ(rs.positive_roots()[1], (RootVec{0, 1}));
  EXPECT_EQ(rs.positive_roots()[2], (RootVec{1, 1}));
}

TEST(RootSystem, G2ClosureMatchesHandEnumeration) {
  const auto rs = build('G', 2);
  // alpha_1 short: a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2
  std::set<RootVec> got(rs.positive_roots().begin(), rs.positive_roots().end());
  std::set<RootVec> want{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(rs.cartan(0, 1), -3);
  EXPECT_EQ(rs.cartan(1, 0), -1);
  EXPECT_EQ(rs.symmetrizers(), (IntVec{1, 3}));
}

TEST(RootSystem, B3HighestRootIsVarpi2) {
  const auto rs = build('B', 3);
  EXPECT_EQ(rs.highest_long_root_coords(), (RootVec{1, 2, 2}));
  EXPECT_EQ(rs.highest_long_root(), (Weight{0, 1, 0}));
}

TEST(RootSystem, HighestRootWeightsByFamily) {
  // alpha_0 = varpi_2 for B_n (n >= 3), D_n, E6, G2; 2 varpi_1 for C_n; varpi_1 for E7, F4; varpi_8 for E8;
  // varpi_1 + varpi_n for A_n.
  const std::map<std::string, Weight> want = {
      {"A1", {2}},          {"A3", {1, 0, 1}},          {"B2", {0, 2}},
      {"B4", {0, 1, 0, 0}}, {"C3", {2, 0, 0}},          {"D5", {0, 1, 0, 0, 0}},
      {"E6", {0, 1, 0, 0, 0, 0}}, {"E7", {1, 0, 0, 0, 0, 0, 0}}, {"E8", {0, 0, 0, 0, 0, 0, 0, 1}},
      {"F4", {1, 0, 0, 0}}, {"G2", {0, 1}},
  };
  for (const auto& [name, w] : want) {
    const auto rs = build(name[0], name[1] - '0');
    EXPECT_EQ(rs.highest_long_root(), w) << name;
  }
}

TEST(RootSystem, InadmissibleRanksThrowInvalidRank) {
  for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 0}, {'B', 1}, {'C', 1}, {'D', 3}, {'E', 5}, {'E', 9},
                                                      {'F', 3}, {'G', 3}, {'A', kMaxRank + 1}}) {
    try {
      build(f, r);
      FAIL() << f << r;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRank) << f << r;
    }
  }
}

TEST(RootSystem, UnknownFamilyIsInvalidArgument) {
  try {
    build('H', 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(RootSystem, ToRootCoordsExamples) {
  EXPECT_EQ(build('A', 2).to_root_coords(Weight{1, 1}), rc({1, 1}));
  EXPECT_EQ(build('A', 3).to_root_coords(Weight{0, 2, 0}), rc({1, 2, 1}));
  EXPECT_EQ(build('C', 3).to_root_coords(Weight{2, 0, 0}), rc({2, 2, 1}));
  EXPECT_EQ(build('A', 2).to_root_coords(Weight{1, 0}), rc({Rational(2, 3), Rational(1, 3)}));
}

TEST(RootSystem, RoundTripWeightRootCoords) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    for (std::size_t i = 0; i < rs.n(); ++i) {
      Weight w{IntVec(rs.n(), 0)};
      w[i] = 3;
      if (i + 1 < rs.n()) w[i + 1] = -2;
      EXPECT_EQ(rs.to_weight(rs.to_root_coords(w)), w) << s.name();
    }
  }
}

TEST(RootSystem, FundamentalWeightsInvertCartan) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    for (std::size_t i = 0; i < rs.n(); ++i) {
      const auto& f = rs.fundamental_weights()[i];
      for (int j = 1; j <= rs.rank(); ++j)
        EXPECT_EQ(rs.pairing(f, j), Rational(static_cast<std::size_t>(j - 1) == i ? 1 : 0)) << s.name();
    }
  }
}

TEST(RootSystem, PairingExamples) {
  EXPECT_EQ(build('A', 2).pairing(rc({1, 0}), 1), Rational(2));
  EXPECT_EQ(build('B', 3).pairing(rc({1, 2, 2}), 2), Rational(1));
  EXPECT_EQ(build('A', 4).pairing(Weight{2, 0, 1, 0}, 2), Rational(0));
  EXPECT_THROW(build('A', 2).pairing(Weight{1, 1}, 3), Error);
}

TEST(RootSystem, BilinearFormNormalization) {
  const auto a2 = build('A', 2);
  EXPECT_EQ(a2.bilinear_form(rc({1, 0}), rc({1, 0})), Rational(2));
  const auto b2 = build('B', 2);
  EXPECT_EQ(b2.bilinear_form(rc({1, 0}), rc({1, 0})), Rational(2));
  EXPECT_EQ(b2.bilinear_form(rc({0, 1}), rc({0, 1})), Rational(1));
  // (alpha_1, alpha_2) = d_1 A[1][2] / d_max = 1 * (-3) / 3.
  const auto g2 = build('G', 2);
  EXPECT_EQ(g2.bilinear_form(rc({1, 0}), rc({1, 0})), Rational(2, 3));
  EXPECT_EQ(g2.bilinear_form(rc({0, 1}), rc({0, 1})), Rational(2));
  EXPECT_EQ(g2.bilinear_form(rc({1, 0}), rc({0, 1})), Rational(-1));
}

TEST(RootSystem, HighestRootHasLongNormalization) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    const RootCoords a0(rs.highest_long_root_coords());
    EXPECT_EQ(rs.bilinear_form(a0, a0), Rational(2)) << s.name();
    EXPECT_EQ(rs.bilinear_form(rs.highest_long_root(), rs.highest_long_root()), Rational(2)) << s.name();
  }
}

TEST(RootSystem, HighestRootIsUniqueMaximum) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    const auto& top = rs.highest_long_root_coords();
    for (const auto& beta : rs.positive_roots()) {
      EXPECT_TRUE((top - beta).nonnegative()) << s.name();
      if (beta != top) {
        bool strictly_below_nothing = true;  // beta must lie below some other root
        for (const auto& gamma : rs.positive_roots())
          if (gamma != beta && (gamma - beta).nonnegative()) strictly_below_nothing = false;
        EXPECT_FALSE(strictly_below_nothing) << s.name();
      }
    }
  }
}

TEST(RootSystem, CartanInvariantsAndSymmetrizers) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    const auto& d = rs.symmetrizers();
    for (std::size_t i = 0; i < rs.n(); ++i) {
      EXPECT_EQ(rs.cartan(i, i), 2);
      for (std::size_t j = 0; j < rs.n(); ++j) {
        if (i != j) {
          EXPECT_LE(rs.cartan(i, j), 0);
        }
        EXPECT_EQ(d[i] * rs.cartan(i, j), d[j] * rs.cartan(j, i)) << s.name();
      }
    }
    EXPECT_EQ(*std::min_element(d.begin(), d.end()), 1) << s.name();
  }
}

TEST(RootSystem, RootsAreSimpleOrExtendSmallerRoots) {
  for (const auto& s : supported_specs(8)) {
    const auto rs = build(s);
    for (const auto& beta : rs.positive_roots()) {
      if (beta.height() == 1) continue;
      bool ok = false;
      for (std::size_t i = 0; i < rs.n() && !ok; ++i) {
        RootVec down = beta;
        down[i] -= 1;
        ok = rs.is_positive_root(down);
      }
      EXPECT_TRUE(ok) << s.name();
    }
  }
}

TEST(RootSystem, RootLatticeMembership) {
  const auto a2 = build('A', 2);
  EXPECT_FALSE(a2.in_root_lattice(Weight{1, 0}));
  EXPECT_TRUE(a2.in_root_lattice(Weight{3, 0}));
  const auto g2 = build('G', 2);
  EXPECT_TRUE(g2.in_root_lattice(Weight{1, 0}));
  const auto d4 = build('D', 4);
  EXPECT_FALSE(d4.in_root_lattice(Weight{1, 0, 0, 0}));
  EXPECT_TRUE(d4.in_root_lattice(Weight{2, 0, 0, 0}));
}

TEST(RootSystem, DynkinEdgeCounts) {
  EXPECT_EQ(build('A', 1).dynkin_edges(), 0u);
  EXPECT_EQ(build('A', 6).dynkin_edges(), 5u);
  EXPECT_EQ(build('D', 4).dynkin_edges(), 3u);
  EXPECT_EQ(build('E', 8).dynkin_edges(), 7u);
  EXPECT_EQ(build('G', 2).dynkin_edges(), 1u);
}
