#ifndef COXINV_CHARACTERS_HPP
#define COXINV_CHARACTERS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "coxinv/error.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

/// Dominant weight in the root lattice (a dominant character of the adjoint torus).
struct DominantCharacter {
  Weight weight;
  RootVec root_coords;

  static DominantCharacter from_weight(const RootSystem& rs, const Weight& w) {
    if (w.size() != rs.n()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
    if (!rs.is_dominant(w)) throw Error(ErrorCode::NonDominant, "character is not dominant");
    auto r = rs.root_lattice_coords(w);
    if (!r) throw Error(ErrorCode::InvalidArgument, "character is not in the root lattice");
    return {w, *r};
  }
  static DominantCharacter from_root_coords(const RootSystem& rs, const RootVec& r) {
    if (r.size() != rs.n()) throw Error(ErrorCode::InvalidArgument, "root vector has wrong length");
    return from_weight(rs, rs.to_weight(r));
  }

  bool is_zero() const { return weight.is_zero(); }
  std::int64_t height() const { return root_coords.height(); }

  /// Canonical order: height, then root coordinates.
  friend bool operator<(const DominantCharacter& a, const DominantCharacter& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.root_coords < b.root_coords;
  }
  friend bool operator==(const DominantCharacter& a, const DominantCharacter& b) { return a.weight == b.weight; }
};

inline bool is_dominant_root_lattice(const RootSystem& rs, const Weight& w) {
  return w.size() == rs.n() && rs.is_dominant(w) && rs.in_root_lattice(w);
}

/// w(chi) <= 0 coefficientwise in the simple-root basis. For a Coxeter element
/// this is the criterion for X(w) to carry T-semistable points for L_chi.
inline bool weyl_image_nonpositive(const RootSystem& rs, const WeylElement& w, const DominantCharacter& chi) {
  auto image = rs.root_lattice_coords(w.apply(chi.weight));
  if (!image) throw Error(ErrorCode::Internal, "Weyl image left the root lattice");
  return image->nonpositive();
}

inline bool coxeter_semistable(const RootSystem& rs, const CoxeterElement& w, const DominantCharacter& chi) {
  return weyl_image_nonpositive(rs, w.element, chi);
}

struct SemistabilityWitness {
  DominantCharacter chi;
  std::vector<CoxeterElement> witnesses;  // canonical (matrix) order

  bool empty() const { return witnesses.empty(); }
};

inline SemistabilityWitness find_semistable_coxeter(const RootSystem& rs, const DominantCharacter& chi,
                                                    const std::vector<CoxeterElement>& coxeter) {
  SemistabilityWitness out{chi, {}};
  for (const auto& w : coxeter)
    if (coxeter_semistable(rs, w, chi)) out.witnesses.push_back(w);
  return out;
}

inline SemistabilityWitness find_semistable_coxeter(const RootSystem& rs, const DominantCharacter& chi,
                                                    int rank_cap = kDefaultRankCap) {
  return find_semistable_coxeter(rs, chi, enumerate_coxeter_elements(rs, rank_cap));
}

/// Not a sum of two nonzero dominant root-lattice characters. Nonzero dominant
/// root-lattice elements have every root coordinate >= 1, so a summand lies in
/// the box 1 <= x_j <= chi_j - 1.
inline bool is_indecomposable(const RootSystem& rs, const DominantCharacter& chi) {
  if (chi.is_zero()) throw Error(ErrorCode::ZeroCharacter, "indecomposability is undefined for the zero character");
  const auto n = rs.n();
  for (std::size_t j = 0; j < n; ++j)
    if (chi.root_coords[j] < 2) return true;

  RootVec part(IntVec(n, 1));
  while (true) {
    const Weight w1 = rs.to_weight(part);
    if (rs.is_dominant(w1) && rs.is_dominant(chi.weight - w1)) return false;
    std::size_t j = 0;
    while (j < n && part[j] == chi.root_coords[j] - 1) {
      part[j] = 1;
      ++j;
    }
    if (j == n) return true;
    ++part[j];
  }
}

/// Nonzero dominant root-lattice characters of height <= height_bound, canonical order.
inline std::vector<DominantCharacter> dominant_characters_up_to(const RootSystem& rs, std::int64_t height_bound) {
  const auto n = rs.n();
  std::vector<DominantCharacter> out;
  RootVec cur(IntVec(n, 1));
  auto rec = [&](auto&& self, std::size_t j, std::int64_t remaining) -> void {
    if (j == n) {
      const Weight w = rs.to_weight(cur);
      if (rs.is_dominant(w)) out.push_back({w, cur});
      return;
    }
    // every later coordinate needs at least 1
    const auto later = static_cast<std::int64_t>(n - j - 1);
    for (std::int64_t c = 1; c <= remaining - later; ++c) {
      cur[j] = c;
      self(self, j + 1, remaining - c);
    }
    cur[j] = 1;
  };
  if (height_bound >= static_cast<std::int64_t>(n)) rec(rec, 0, height_bound);
  std::sort(out.begin(), out.end());
  return out;
}

/// All indecomposable dominant root-lattice characters of height <= height_bound
/// admitting at least one semistable Coxeter element, with all witnesses.
inline std::vector<SemistabilityWitness> enumerate_semistable_indecomposables(const RootSystem& rs,
                                                                              std::int64_t height_bound,
                                                                              int rank_cap = kDefaultRankCap) {
  const auto coxeter = enumerate_coxeter_elements(rs, rank_cap);
  const auto candidates = dominant_characters_up_to(rs, height_bound);
  std::vector<std::optional<SemistabilityWitness>> slots(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    auto found = find_semistable_coxeter(rs, candidates[i], coxeter);
    if (found.empty() || !is_indecomposable(rs, candidates[i])) return;
    slots[i] = std::move(found);
  });
  std::vector<SemistabilityWitness> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

struct DescentViolation {
  DominantCharacter chi;
  CoxeterElement w;
  std::vector<int> descents;
};

/// Type A only. Over every dominant root-lattice chi up to the height bound and
/// every Coxeter w with w(chi) <= 0, reports w whose right descents are not
/// contained in {1, rank}.
inline std::vector<DescentViolation> descent_lemma_violations(const RootSystem& rs, std::int64_t height_bound,
                                                              int rank_cap = kDefaultRankCap) {
  if (rs.spec().family != Family::A)
    throw Error(ErrorCode::WrongType, "descent check applies to type A only, got " + rs.spec().name());
  const auto coxeter = enumerate_coxeter_elements(rs, rank_cap);
  std::vector<std::vector<int>> descents;
  descents.reserve(coxeter.size());
  for (const auto& w : coxeter) descents.push_back(right_descents(rs, w.element));
  auto allowed = [&](int i) { return i == 1 || i == rs.rank(); };

  const auto candidates = dominant_characters_up_to(rs, height_bound);
  std::vector<std::vector<DescentViolation>> slots(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < coxeter.size(); ++k) {
      if (std::all_of(descents[k].begin(), descents[k].end(), allowed)) continue;
      if (coxeter_semistable(rs, coxeter[k], candidates[i]))
        slots[i].push_back({candidates[i], coxeter[k], descents[k]});
    }
  });
  std::vector<DescentViolation> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

inline bool verify_descent_lemma(const RootSystem& rs, std::int64_t height_bound, int rank_cap = kDefaultRankCap) {
  return descent_lemma_violations(rs, height_bound, rank_cap).empty();
}

}  // namespace coxinv

#endif  // COXINV_CHARACTERS_HPP
