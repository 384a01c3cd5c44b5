#ifndef COXINV_RINGANALYSIS_HPP
#define COXINV_RINGANALYSIS_HPP

#include <cstdint>
#include <vector>

#include "coxinv/characters.hpp"
#include "coxinv/error.hpp"
#include "coxinv/multiplicity.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/rootsystem.hpp"

namespace coxinv {

inline constexpr int kDefaultDegreeBound = 4;

/// J = {i : <chi, coroot_i> >= 1}, one-based.
struct ParabolicSupport {
  std::vector<int> indices;

  static ParabolicSupport of(const Weight& chi) {
    ParabolicSupport j;
    for (std::size_t i = 0; i < chi.size(); ++i)
      if (chi[i] >= 1) j.indices.push_back(static_cast<int>(i + 1));
    return j;
  }
  bool empty() const { return indices.empty(); }
};

/// dim G/P_J: positive roots with a nonzero coefficient on some alpha_j, j in J.
inline std::int64_t dim_G_mod_P(const RootSystem& rs, const ParabolicSupport& support) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "parabolic support is empty");
  for (int j : support.indices) rs.check_index(j);
  std::int64_t count = 0;
  for (const auto& beta : rs.positive_roots()) {
    for (int j : support.indices) {
      if (beta[static_cast<std::size_t>(j - 1)] >= 1) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// dim(G/P_J) + 1 - rank, where one is the cone direction and the torus
/// quotient removes rank dimensions.
inline std::int64_t krull_dim_invariant_ring(const RootSystem& rs, const DominantCharacter& chi) {
  if (chi.is_zero()) throw Error(ErrorCode::ZeroCharacter, "Krull dimension needs a nonzero character");
  return dim_G_mod_P(rs, ParabolicSupport::of(chi.weight)) + 1 - rs.rank();
}

struct HilbertPrefix {
  DominantCharacter chi;
  std::vector<std::int64_t> values;  // values[d] = h(d), values[0] = 1

  int degree_bound() const { return static_cast<int>(values.size()) - 1; }
};

inline HilbertPrefix hilbert_prefix(const RootSystem& rs, const DominantCharacter& chi, int degree_bound) {
  if (degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 1");
  HilbertPrefix h{chi, std::vector<std::int64_t>(static_cast<std::size_t>(degree_bound) + 1, 0)};
  h.values[0] = 1;
  parallel_for(static_cast<std::size_t>(degree_bound), [&](std::size_t k) {
    h.values[k + 1] = invariant_dim(rs, chi.weight, static_cast<std::int64_t>(k + 1));
  });
  return h;
}

struct GeneratorInference {
  bool consistent = true;
  std::vector<int> degrees;  // ascending
  int failed_degree = -1;    // first degree with a negative shortfall
};

/// Greedy fit of a free algebra to a Hilbert prefix: at each degree, the excess
/// of h(d) over the series of the generators found so far becomes new degree-d
/// generators. A deficit means no polynomial ring has this prefix.
inline GeneratorInference infer_free_generators(const std::vector<std::int64_t>& h) {
  GeneratorInference out;
  if (h.empty() || h[0] != 1) {
    out.consistent = false;
    out.failed_degree = 0;
    return out;
  }
  const std::size_t top = h.size() - 1;
  std::vector<std::int64_t> series(h.size(), 0);
  series[0] = 1;
  for (std::size_t d = 1; d <= top; ++d) {
    const std::int64_t shortfall = h[d] - series[d];
    if (shortfall < 0) {
      out.consistent = false;
      out.failed_degree = static_cast<int>(d);
      return out;
    }
    for (std::int64_t g = 0; g < shortfall; ++g) {
      out.degrees.push_back(static_cast<int>(d));
      for (std::size_t j = d; j <= top; ++j) series[j] += series[j - d];
    }
  }
  return out;
}

inline GeneratorInference infer_free_generators(const HilbertPrefix& h) { return infer_free_generators(h.values); }

struct RingVerdict {
  DominantCharacter chi;
  std::vector<CoxeterElement> witnesses;
  int rank = 0;
  std::int64_t zero_weight_dim = 0;  // h(1)
  std::int64_t krull_dim = 0;
  HilbertPrefix hilbert;
  GeneratorInference generators;
  bool polynomial_by_theorem = false;
  bool hilbert_consistent = false;
};

/// Verdict for an indecomposable character with at least one Coxeter witness.
inline RingVerdict verdict(const RootSystem& rs, const SemistabilityWitness& found, int degree_bound = kDefaultDegreeBound) {
  if (found.empty())
    throw Error(ErrorCode::NotApplicable, "character admits no semistable Coxeter element");
  if (found.chi.is_zero() || !is_indecomposable(rs, found.chi))
    throw Error(ErrorCode::NotApplicable, "character is not indecomposable");
  RingVerdict v;
  v.chi = found.chi;
  v.witnesses = found.witnesses;
  v.rank = rs.rank();
  v.hilbert = hilbert_prefix(rs, found.chi, degree_bound);
  v.zero_weight_dim = v.hilbert.values[1];
  v.krull_dim = krull_dim_invariant_ring(rs, found.chi);
  v.generators = infer_free_generators(v.hilbert);
  v.polynomial_by_theorem = v.zero_weight_dim <= v.rank;
  v.hilbert_consistent =
      v.generators.consistent && static_cast<std::int64_t>(v.generators.degrees.size()) == v.krull_dim;
  return v;
}

inline RingVerdict verdict(const RootSystem& rs, const DominantCharacter& chi, int degree_bound = kDefaultDegreeBound,
                           int rank_cap = kDefaultRankCap) {
  if (chi.is_zero()) throw Error(ErrorCode::NotApplicable, "zero character");
  return verdict(rs, find_semistable_coxeter(rs, chi, rank_cap), degree_bound);
}

/// The numerical shadow of the polynomiality criterion: a polynomial verdict
/// must come with a consistent free-generator fit of size krull_dim; a
/// non-polynomial one must show h(1) > krull_dim or a failed fit.
inline bool theorem_coherent(const RingVerdict& v) {
  if (v.polynomial_by_theorem) return v.hilbert_consistent;
  const bool count_mismatch =
      !v.generators.consistent || static_cast<std::int64_t>(v.generators.degrees.size()) != v.krull_dim;
  return v.zero_weight_dim > v.krull_dim || count_mismatch;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h(d) = C(n + d - 1, d): Hilbert function of n variables in degree one.
inline std::vector<std::int64_t> free_algebra_prefix(std::int64_t variables, int degree_bound) {
  std::vector<std::int64_t> out;
  for (int d = 0; d <= degree_bound; ++d) out.push_back(binomial(variables + d - 1, d));
  return out;
}

}  // namespace coxinv

#endif  // COXINV_RINGANALYSIS_HPP
