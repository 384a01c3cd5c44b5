#ifndef COXINV_WEYL_HPP
#define COXINV_WEYL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "coxinv/error.hpp"
#include "coxinv/rootsystem.hpp"

namespace coxinv {

// Default bound on the rank for n!-word enumerations.
inline constexpr int kDefaultRankCap = 9;
inline constexpr std::uint64_t kDefaultWeylCap = 2000;

/// Dense integer square matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t n() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const IntVec& data() const { return data_; }

  IntVec apply(const IntVec& v) const {
    IntVec out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += data_[i * n_ + j] * v[j];
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        const auto x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  IntVec data_;
};

/// Weyl group element acting on weight coordinates. The word (one-based simple
/// reflection indices, leftmost acts last) is provenance only: equality and
/// ordering use the matrix.
struct WeylElement {
  RootSystemSpec spec;
  IntMatrix matrix;
  std::vector<int> word;

  Weight apply(const Weight& w) const { return Weight(matrix.apply(w.coords)); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.spec == b.spec && a.matrix == b.matrix;
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.matrix < b.matrix; }
};

inline std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

inline WeylElement identity_element(const RootSystem& rs) {
  return {rs.spec(), IntMatrix::identity(rs.n()), {}};
}

namespace detail {

// m <- m * s_i, touching only column i.
inline void right_multiply_reflection(const RootSystem& rs, IntMatrix& m, std::size_t i) {
  const auto n = rs.n();
  IntVec col(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) s += m(r, j) * rs.cartan(j, i);
    col[r] = m(r, i) - s;
  }
  for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
}

}  // namespace detail

inline WeylElement simple_reflection(const RootSystem& rs, int index) {
  rs.check_index(index);
  WeylElement w = identity_element(rs);
  detail::right_multiply_reflection(rs, w.matrix, static_cast<std::size_t>(index - 1));
  w.word = {index};
  return w;
}

inline WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (!(a.spec == b.spec))
    throw Error(ErrorCode::MixedRootSystem, "cannot compose elements of " + a.spec.name() + " and " + b.spec.name());
  WeylElement c{a.spec, a.matrix * b.matrix, a.word};
  c.word.insert(c.word.end(), b.word.begin(), b.word.end());
  return c;
}

inline WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity_element(rs);
  for (int i : word) {
    rs.check_index(i);
    detail::right_multiply_reflection(rs, w.matrix, static_cast<std::size_t>(i - 1));
  }
  w.word = word;
  return w;
}

inline RootVec apply_to_root(const RootSystem& rs, const WeylElement& w, const RootVec& r) {
  auto coords = rs.root_lattice_coords(w.apply(rs.to_weight(r)));
  if (!coords) throw Error(ErrorCode::Internal, "Weyl image left the root lattice");
  return *coords;
}

/// Number of positive roots sent to negative roots.
inline std::int64_t length(const RootSystem& rs, const WeylElement& w) {
  std::int64_t len = 0;
  for (const auto& beta : rs.positive_root_weights())
    if (rs.is_negative_root_image(w.apply(beta))) ++len;
  return len;
}

inline bool is_right_descent(const RootSystem& rs, const WeylElement& w, int index) {
  return rs.is_negative_root_image(w.apply(rs.simple_root_weight(static_cast<std::size_t>(index - 1))));
}

/// {i : l(w s_i) = l(w) - 1}, one-based, ascending.
inline std::vector<int> right_descents(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (is_right_descent(rs, w, i)) out.push_back(i);
  return out;
}

inline std::uint64_t weyl_group_order(const RootSystemSpec& spec) {
  auto fact = [](std::uint64_t k) {
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const auto n = static_cast<std::uint64_t>(spec.rank);
  switch (spec.family) {
    case Family::A: return n + 1 > 20 ? UINT64_MAX : fact(n + 1);
    case Family::B:
    case Family::C: return n > 15 ? UINT64_MAX : (std::uint64_t{1} << n) * fact(n);
    case Family::D: return n > 15 ? UINT64_MAX : (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

struct GroupElement {
  WeylElement element;
  std::int64_t length = 0;
};

/// Whole group by breadth-first search on right multiplication; BFS depth is
/// the Coxeter length.
inline std::vector<GroupElement> enumerate_weyl_group(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap) {
  const auto order = weyl_group_order(rs.spec());
  if (order > weyl_cap)
    throw Error(ErrorCode::WeylGroupCapExceeded, "|W(" + rs.spec().name() + ")| = " + std::to_string(order) +
                                                     " exceeds cap " + std::to_string(weyl_cap));
  std::vector<GroupElement> out{{identity_element(rs), 0}};
  std::set<IntMatrix> seen{out.front().element.matrix};
  std::size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    const std::size_t frontier_end = out.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      for (int i = 1; i <= rs.rank(); ++i) {
        WeylElement next = out[k].element;
        detail::right_multiply_reflection(rs, next.matrix, static_cast<std::size_t>(i - 1));
        if (!seen.insert(next.matrix).second) continue;
        next.word.push_back(i);
        out.push_back({std::move(next), out[k].length + 1});
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

/// A product of all simple reflections, each used once.
struct CoxeterElement {
  WeylElement element;

  static CoxeterElement from_word(const RootSystem& rs, const std::vector<int>& word) {
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(static_cast<std::size_t>(rs.rank()));
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected)
      throw Error(ErrorCode::InvalidArgument, "word " + word_string(word) + " is not a permutation of the simple reflections");
    return {element_from_word(rs, word)};
  }

  const std::vector<int>& word() const { return element.word; }
  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) { return a.element == b.element; }
  friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) { return a.element < b.element; }
};

inline void check_rank_cap(const RootSystem& rs, int rank_cap) {
  if (rs.rank() > rank_cap)
    throw Error(ErrorCode::RankCapExceeded,
                "rank " + std::to_string(rs.rank()) + " exceeds enumeration cap " + std::to_string(rank_cap));
}

/// One representative per distinct group element, sorted by matrix. The
/// representative word is the lexicographically first ordering producing it.
inline std::vector<CoxeterElement> enumerate_coxeter_elements(const RootSystem& rs, int rank_cap = kDefaultRankCap) {
  check_rank_cap(rs, rank_cap);
  const auto n = rs.n();
  std::map<IntMatrix, std::vector<int>> found;
  std::vector<int> word;
  std::vector<bool> used(n, false);
  std::vector<IntMatrix> prefix{IntMatrix::identity(n)};

  // Depth-first over orderings, sharing prefix products.
  auto dfs = [&](auto&& self) -> void {
    if (word.size() == n) {
      found.emplace(prefix.back(), word);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      word.push_back(static_cast<int>(i + 1));
      IntMatrix m = prefix.back();
      detail::right_multiply_reflection(rs, m, i);
      prefix.push_back(std::move(m));
      self(self);
      prefix.pop_back();
      word.pop_back();
      used[i] = false;
    }
  };
  dfs(dfs);

  std::vector<CoxeterElement> out;
  out.reserve(found.size());
  for (auto& [m, w] : found) out.push_back({WeylElement{rs.spec(), m, w}});
  return out;
}

/// w0 by greedy ascent: right-multiply by any non-descent until none is left.
inline WeylElement longest_element(const RootSystem& rs, int rank_cap = kDefaultRankCap) {
  check_rank_cap(rs, rank_cap);
  WeylElement w = identity_element(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (is_right_descent(rs, w, i)) continue;
      detail::right_multiply_reflection(rs, w.matrix, static_cast<std::size_t>(i - 1));
      w.word.push_back(i);
      grew = true;
    }
  }
  return w;
}

/// -w0(chi).
inline Weight dual_character(const RootSystem& rs, const Weight& chi) {
  const WeylElement w0 = longest_element(rs, kMaxRank);
  Weight out = w0.apply(chi);
  for (auto& x : out.coords) x = -x;
  return out;
}

/// Unique dominant weight in the W-orbit of w.
inline Weight dominant_representative(const RootSystem& rs, Weight w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rs.n(); ++i) {
      if (w[i] < 0) {
        w = rs.reflect(w, static_cast<int>(i + 1));
        changed = true;
      }
    }
  }
  return w;
}

inline std::vector<Weight> weight_orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::vector<Weight> queue{w};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight next = rs.reflect(queue[k], i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace coxinv

#endif  // COXINV_WEYL_HPP
