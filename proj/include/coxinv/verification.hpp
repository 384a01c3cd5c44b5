#ifndef COXINV_VERIFICATION_HPP
#define COXINV_VERIFICATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxinv/characters.hpp"
#include "coxinv/multiplicity.hpp"
#include "coxinv/report.hpp"
#include "coxinv/ringanalysis.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

struct VerificationOptions {
  int max_rank = 6;
  int rank_cap = kDefaultRankCap;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  int degree_bound = kDefaultDegreeBound;
  std::int64_t sweep_height_bound = 20;
  std::int64_t oracle_height_bound = 8;
};

/// Dominant weights (not necessarily in the root lattice) whose root-basis
/// height is at most `bound`. Sorted.
inline std::vector<Weight> dominant_weights_up_to_height(const RootSystem& rs, std::int64_t bound) {
  const auto n = rs.n();
  std::vector<Rational> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = rs.fundamental_weights()[i].height();
  std::vector<Weight> out;
  Weight cur{IntVec(n, 0)};
  auto rec = [&](auto&& self, std::size_t i, Rational remaining) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t c = 0; Rational(c) * h[i] <= remaining; ++c) {
      cur[i] = c;
      self(self, i + 1, remaining - Rational(c) * h[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, Rational(bound));
  std::sort(out.begin(), out.end());
  return out;
}

struct OracleComparison {
  std::int64_t pairs = 0;
  std::int64_t mismatches = 0;
};

/// Freudenthal against the Kostant alternating sum for every dominant lambda of
/// height <= bound and every dominant mu below it.
inline OracleComparison compare_multiplicity_oracles(const RootSystem& rs, std::int64_t height_bound,
                                                     std::uint64_t weyl_cap = kDefaultWeylCap) {
  KostantOracle oracle(rs, weyl_cap);
  OracleComparison out;
  for (const auto& lambda : dominant_weights_up_to_height(rs, height_bound)) {
    FreudenthalMultiplicities table(rs, lambda);
    for (const auto& mu : dominant_weights_below(rs, lambda)) {
      ++out.pairs;
      if (table.multiplicity(mu) != oracle.multiplicity(lambda, mu)) ++out.mismatches;
    }
  }
  return out;
}

namespace detail {

inline std::vector<RootSystemSpec> specs(const std::string& list) {
  // "A1 B2 ..." -> specs
  std::vector<RootSystemSpec> out;
  std::size_t pos = 0;
  while (pos < list.size()) {
    const auto end = std::min(list.find(' ', pos), list.size());
    const std::string tok = list.substr(pos, end - pos);
    out.push_back(RootSystemSpec::parse(tok[0], std::stoi(tok.substr(1))));
    pos = end + 1;
  }
  return out;
}

// The rank limit applies to the classical families; exceptional types have fixed rank.
inline std::vector<RootSystemSpec> capped(std::vector<RootSystemSpec> in, int max_rank) {
  std::erase_if(in, [&](const RootSystemSpec& s) {
    const bool classical = s.family <= Family::D;
    return classical && s.rank > max_rank;
  });
  return in;
}

inline Json sorted_root_coord_set(std::vector<IntVec> v) {
  std::sort(v.begin(), v.end());
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r);
  return out;
}

inline Json sorted_root_coord_set(const std::vector<SemistabilityWitness>& found) {
  std::vector<IntVec> v;
  for (const auto& f : found) v.push_back(f.chi.root_coords.coeffs);
  return sorted_root_coord_set(std::move(v));
}

}  // namespace detail

struct VerificationResult {
  std::vector<Check> checks;
  Json rows = Json::array();  // verdicts quoted by the checks
  Json parameters = Json::object();
};

inline VerificationResult run_verification(const VerificationOptions& opt) {
  VerificationResult res;
  auto& checks = res.checks;
  const int D = opt.degree_bound;
  auto add = [&](Check c) { checks.push_back(std::move(c)); };

  // Positive root counts.
  {
    Json expected = Json::object(), actual = Json::object();
    for (const auto& s : supported_specs(std::max(8, opt.max_rank))) {
      expected[s.name()] = expected_positive_root_count(s);
      actual[s.name()] = build(s).positive_roots().size();
    }
    add(Check::equal("positive_root_counts", "|R+| = n(n+1)/2, n^2, n^2, n(n-1), 36, 63, 120, 24, 6 for A, B, C, D, E6, E7, E8, F4, G2",
                     expected, actual));
  }

  // Coxeter element counts.
  {
    Json expected = Json::object(), actual = Json::object();
    for (const auto& s : detail::capped(detail::specs("A1 A2 A3 A4 A5 A6 B2 B3 B4 C2 C3 C4 D4 G2"), opt.max_rank)) {
      const auto rs = build(s);
      expected[s.name()] = std::int64_t{1} << rs.dynkin_edges();
      actual[s.name()] = enumerate_coxeter_elements(rs, opt.rank_cap).size();
    }
    add(Check::equal("coxeter_counts", "Coxeter elements are counted by acyclic orientations: 2^(Dynkin edges) on a tree",
                     expected, actual));
  }

  // Freudenthal against Kostant.
  {
    Json expected = Json::object(), actual = Json::object();
    bool ok = true;
    for (const auto& s : detail::capped(detail::specs("A2 A3 B2 B3 C3 G2"), opt.max_rank)) {
      const auto rs = build(s);
      const auto cmp = compare_multiplicity_oracles(rs, opt.oracle_height_bound, opt.weyl_cap);
      expected[s.name()] = {{"mismatches", 0}};
      actual[s.name()] = {{"mismatches", cmp.mismatches}, {"pairs", cmp.pairs}};
      ok = ok && cmp.mismatches == 0 && cmp.pairs > 0;
    }
    add({"freudenthal_equals_kostant",
         "m_lambda(mu) by Freudenthal equals sum_w (-1)^l(w) P(w(lambda+rho) - (mu+rho)), dominant lambda of height <= " +
             std::to_string(opt.oracle_height_bound),
         expected, actual, ok});
  }

  // Dimensions for V(2 varpi_1).
  for (int n = 2; n <= 4; ++n) {
    const auto rs = build('B', n);
    const Weight two_w1 = 2 * rs.fundamental_weight(1);
    const auto dim = weyl_dim(rs, two_w1);
    add(Check::equal(rs.spec().name() + "_weyl_dim_2w1", "dim V(2 varpi_1) = n(2n+3)", n * (2 * n + 3), to_json(dim)));
    add(Check::equal(rs.spec().name() + "_sym2_identity", "dim V(2 varpi_1) + 1 = dim Sym^2(C^{2n+1}) = (n+1)(2n+1)",
                     (n + 1) * (2 * n + 1), to_json(BigInt(dim + 1))));
    add(Check::equal(rs.spec().name() + "_zero_weight_2w1", "dim V(2 varpi_1)^T = n", n, invariant_dim(rs, two_w1, 1)));
  }
  {
    const auto rs = build('D', 4);
    const Weight two_w1 = 2 * rs.fundamental_weight(1);
    const auto dim = weyl_dim(rs, two_w1);
    add(Check::equal("D4_weyl_dim_2w1", "dim V(2 varpi_1) is 35", 35, to_json(dim)));
    add(Check::equal("D4_sym2_identity", "dim Sym^2((C^8)^*) = 36", 36, to_json(BigInt(dim + 1))));
    add(Check::equal("D4_zero_weight_2w1", "dim V(2 varpi_1)^T = 3", 3, invariant_dim(rs, two_w1, 1)));
  }
  {
    Json expected = Json::object(), actual = Json::object();
    for (const auto& s : supported_specs(std::max(8, opt.max_rank))) {
      const auto rs = build(s);
      expected[s.name()] = s.rank;
      actual[s.name()] = invariant_dim(rs, rs.highest_long_root(), 1);
    }
    add(Check::equal("adjoint_zero_weight", "dim V(alpha_0)^T = dim h = rank", expected, actual));
  }

  // Binomial law in type A_{n-1}.
  for (int n : {5, 6}) {
    if (n - 1 > opt.max_rank) continue;
    const auto rs = build('A', n - 1);
    for (int i = 2; i <= n - 3; ++i) {
      const Weight chi = i * rs.fundamental_weight(1) + rs.fundamental_weight(n - i);
      const Weight dual = dual_character(rs, chi);
      const auto name = rs.spec().name() + "_binomial_i" + std::to_string(i);
      add(Check::equal(name, "dim H^0(L_chi)^T = C(n-1, i) for chi = i varpi_1 + varpi_{n-i}",
                       binomial(n - 1, i), invariant_dim(rs, chi, 1)));
      add(Check::equal(name + "_dual", "same dimension for -w0 chi = varpi_i + i varpi_{n-1}", binomial(n - 1, i),
                       invariant_dim(rs, dual, 1)));
    }
  }

  // dim G/P_J ledger.
  struct DimCase {
    const char* spec;
    std::vector<int> J;
    std::int64_t expected;
    const char* anchor;
  };
  const std::vector<DimCase> dim_cases = {
      {"B4", {2}, 11, "dim G/P_2 = 4n-5 for B_n"},      {"D4", {2}, 9, "dim G/P_2 = 4n-7 for D_n"},
      {"D5", {2}, 13, "dim G/P_2 = 4n-7 for D_n"},      {"E6", {2}, 21, "dim(G/P) = 21"},
      {"E7", {1}, 33, "dim(G/P) = 33"},                 {"E8", {8}, 57, "dim(G/P) = 57"},
      {"G2", {2}, 5, "dim(G/P) = 5"},
  };
  for (const auto& c : dim_cases) {
    const auto s = detail::specs(c.spec).front();
    const auto rs = build(s);
    add(Check::equal(s.name() + "_dimGP", c.anchor, c.expected, dim_G_mod_P(rs, {c.J})));
  }
  {
    const auto rs = build('F', 4);
    const auto v = dim_G_mod_P(rs, {{1}});
    add({"F4_dimGP", "dim(G/P) >= 8", ">= 8", v, v >= 8});
  }

  // Coxeter gate for alpha_0.
  {
    Json expected = Json::object(), actual = Json::object();
    for (const auto& s : detail::capped(detail::specs("A1 A2 A3 A4 A5 A6 B2 B3 B4 C2 C3 C4 D4 D5 E6 F4 G2"), opt.max_rank)) {
      const auto rs = build(s);
      const bool listed = s.family == Family::A || s.family == Family::C || (s.family == Family::B && s.rank == 2);
      const auto chi = DominantCharacter::from_weight(rs, rs.highest_long_root());
      expected[s.name()] = listed;
      actual[s.name()] = !find_semistable_coxeter(rs, chi, opt.rank_cap).empty();
    }
    add(Check::equal("alpha0_gate", "alpha_0 admits a semistable Coxeter element iff G is of type A_n, B_2 or C_n",
                     expected, actual));
  }

  // Hilbert function of the alpha_0 ring against Sym(h).
  {
    Json expected = Json::object(), actual = Json::object();
    for (const auto& s : detail::capped(detail::specs("A2 A3 B2 C3"), opt.max_rank)) {
      const auto rs = build(s);
      const auto h = hilbert_prefix(rs, DominantCharacter::from_weight(rs, rs.highest_long_root()), D);
      expected[s.name()] = free_algebra_prefix(s.rank, D);
      actual[s.name()] = h.values;
    }
    add(Check::equal("alpha0_hilbert_isomorphism", "C[h] -> sum_d H^0(L_alpha_0^d)^T is an isomorphism: h(d) = C(n+d-1, d)",
                     expected, actual));
  }
  {
    Json expected = Json::object(), actual = Json::object();
    bool ok = true;
    for (const auto& s : detail::capped(detail::specs("B3 D4 G2"), opt.max_rank)) {
      const auto rs = build(s);
      const auto h = hilbert_prefix(rs, DominantCharacter::from_weight(rs, rs.highest_long_root()), D);
      const auto sym = free_algebra_prefix(s.rank, D);
      bool injective = true, strict = false;
      for (int d = 0; d <= D; ++d) {
        injective = injective && h.values[d] >= sym[d];
        if (d <= 3 && h.values[d] > sym[d]) strict = true;
      }
      ok = ok && injective && strict;
      expected[s.name()] = {{"at_least", sym}, {"strictly_greater_for_some_d_le", 3}};
      actual[s.name()] = h.values;
    }
    add({"alpha0_hilbert_not_isomorphism", "C[h] -> sum_d H^0(L_alpha_0^d)^T is injective but not surjective", expected,
         actual, ok});
  }
  {
    Json expected = Json::object(), actual = Json::object();
    bool ok = true;
    for (const auto& s : detail::capped(detail::specs("B3 B4 D4 D5 E6 E7 E8 F4 G2"), opt.max_rank)) {
      const auto rs = build(s);
      const auto k = krull_dim_invariant_ring(rs, DominantCharacter::from_weight(rs, rs.highest_long_root()));
      expected[s.name()] = "> " + std::to_string(s.rank);
      actual[s.name()] = k;
      ok = ok && k > s.rank;
    }
    add({"alpha0_krull_gap", "dim of the alpha_0 invariant ring exceeds n outside A_n, B_2, C_n", expected, actual, ok});
  }

  // Exact enumeration lists.
  struct ListCase {
    const char* spec;
    std::int64_t bound;
    std::vector<IntVec> expected;
    const char* anchor;
  };
  const std::vector<ListCase> lists = {
      {"A2", 12, {{1, 1}, {2, 1}, {1, 2}}, "chi is one of alpha_1+alpha_2, 2alpha_1+alpha_2, alpha_1+2alpha_2"},
      {"B2", 12, {{1, 1}, {1, 2}}, "chi is one of alpha_1+alpha_2, alpha_1+2alpha_2"},
      {"A3", 16, {{1, 1, 1}, {3, 2, 1}, {1, 2, 1}, {1, 2, 3}},
       "chi is one of alpha_1+alpha_2+alpha_3, 3alpha_1+2alpha_2+alpha_3, alpha_1+2alpha_2+alpha_3, alpha_1+2alpha_2+3alpha_3"},
  };
  for (const auto& c : lists) {
    const auto s = detail::specs(c.spec).front();
    if (s.rank > opt.max_rank) continue;
    const auto rs = build(s);
    const auto found = enumerate_semistable_indecomposables(rs, c.bound, opt.rank_cap);
    add(Check::equal(s.name() + "_indecomposables", std::string(c.anchor) + " (height <= " + std::to_string(c.bound) + ")",
                     detail::sorted_root_coord_set(c.expected), detail::sorted_root_coord_set(found)));
  }

  // Polynomiality criterion against the Hilbert data.
  for (const auto& s : detail::capped(detail::specs("A2 A3 A4 B2 B3 C3 D4"), opt.max_rank)) {
    const auto rs = build(s);
    const auto found = enumerate_semistable_indecomposables(rs, opt.sweep_height_bound, opt.rank_cap);
    std::vector<std::optional<RingVerdict>> verdicts(found.size());
    parallel_for(found.size(), [&](std::size_t i) { verdicts[i] = verdict(rs, found[i], D); });
    Json incoherent = Json::array();
    for (const auto& v : verdicts)
      if (!theorem_coherent(*v)) incoherent.push_back(to_json(v->chi.root_coords));
    add(Check::equal(s.name() + "_polynomiality_coherence",
                     "polynomial iff dim H^0(L_chi)^T <= rank, matched by Hilbert prefix and Krull dimension (height <= " +
                         std::to_string(opt.sweep_height_bound) + ", D = " + std::to_string(D) + ")",
                     Json::array(), incoherent));
  }

  auto verdict_summary = [](const RingVerdict& v) {
    Json g = v.generators.consistent ? Json(v.generators.degrees) : Json("inconsistent");
    return Json{{"zero_weight_dim", v.zero_weight_dim},
                {"krull_dim", v.krull_dim},
                {"polynomial_by_theorem", v.polynomial_by_theorem},
                {"inferred_generator_degrees", g}};
  };
  if (opt.max_rank >= 4) {
    const auto rs = build('A', 4);
    const Weight chi = 2 * rs.fundamental_weight(1) + rs.fundamental_weight(3);
    const auto v = verdict(rs, DominantCharacter::from_weight(rs, chi), D, opt.rank_cap);
    res.rows.push_back(verdict_row(rs, v));
    Json got = verdict_summary(v);
    got.erase("inferred_generator_degrees");
    add(Check::equal("A4_2w1+w3_verdict", "dim H^0(L_chi)^T = 6 > 4 and Krull dimension 1+i(n-1-i) = 5: not polynomial",
                     {{"zero_weight_dim", 6}, {"krull_dim", 5}, {"polynomial_by_theorem", false}}, got));
  }
  if (opt.max_rank >= 3) {
    const auto rs = build('A', 3);
    const auto v = verdict(rs, DominantCharacter::from_weight(rs, 2 * rs.fundamental_weight(2)), D, opt.rank_cap);
    res.rows.push_back(verdict_row(rs, v));
    add(Check::equal("A3_2w2_verdict", "C[p13 p24, p12 p34] is the invariant ring; Krull dimension two",
                     {{"zero_weight_dim", 2}, {"krull_dim", 2}, {"polynomial_by_theorem", true},
                      {"inferred_generator_degrees", {1, 1}}},
                     verdict_summary(v)));
  }
  for (int n = 2; n <= std::min(opt.max_rank, 4); ++n) {
    const auto rs = build('B', n);
    const auto v = verdict(rs, DominantCharacter::from_weight(rs, rs.fundamental_weight(1)), D, opt.rank_cap);
    res.rows.push_back(verdict_row(rs, v));
    // Under the varpi_1 grading X_{n+1} is a degree-one invariant, so the free
    // generators are one linear form and n-1 quadrics.
    std::vector<int> gens{1};
    gens.insert(gens.end(), static_cast<std::size_t>(n - 1), 2);
    add(Check::equal(rs.spec().name() + "_w1_verdict", "polynomial ring of Krull dimension 2n-n = n",
                     {{"zero_weight_dim", 1}, {"krull_dim", n}, {"polynomial_by_theorem", true},
                      {"inferred_generator_degrees", gens}},
                     verdict_summary(v)));
    const auto h2 = hilbert_prefix(rs, DominantCharacter::from_weight(rs, 2 * rs.fundamental_weight(1)), D);
    Json row = character_fields(h2.chi);
    row["grading"] = "2 varpi_1";
    row["hilbert_prefix"] = h2.values;
    res.rows.push_back(row);
  }

  // Descent sets of semistable Coxeter elements in type A.
  for (const auto& s : detail::capped(detail::specs("A2 A4 A5"), opt.max_rank)) {
    const auto rs = build(s);
    const auto bad = descent_lemma_violations(rs, opt.sweep_height_bound, opt.rank_cap);
    add(Check::equal(s.name() + "_descent_lemma",
                     "{i : l(w s_i) = l(w) - 1} is contained in {1, n-1} for semistable Coxeter w (height <= " +
                         std::to_string(opt.sweep_height_bound) + ")",
                     0, bad.size()));
  }
  if (opt.max_rank >= 3) {
    const auto rs = build('A', 3);
    const auto bad = descent_lemma_violations(rs, opt.sweep_height_bound, opt.rank_cap);
    const auto target = CoxeterElement::from_word(rs, {1, 3, 2});
    const Weight chi = 2 * rs.fundamental_weight(2);
    Json actual = Json::array();
    for (const auto& v : bad)
      if (v.chi.weight == chi && v.w == target) actual.push_back({{"word", word_string(v.w.word())}, {"right_descents", v.descents}});
    add(Check::equal("A3_descent_exception", "the special case chi = 2 varpi_2 in A_3 with Coxeter element w = s1 s3 s2",
                     Json::array({{{"word", word_string(target.word())}, {"right_descents", right_descents(rs, target.element)}}}),
                     actual));
  }

  res.parameters = {{"max_rank", opt.max_rank},
                    {"rank_cap", opt.rank_cap},
                    {"weyl_cap", opt.weyl_cap},
                    {"degree_bound", D},
                    {"sweep_height_bound", opt.sweep_height_bound},
                    {"oracle_height_bound", opt.oracle_height_bound},
                    {"enumeration_height_bounds", {{"A2", 12}, {"B2", 12}, {"A3", 16}}}};
  return res;
}

}  // namespace coxinv

#endif  // COXINV_VERIFICATION_HPP
