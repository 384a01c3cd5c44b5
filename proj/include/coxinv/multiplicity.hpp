#ifndef COXINV_MULTIPLICITY_HPP
#define COXINV_MULTIPLICITY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "coxinv/error.hpp"
#include "coxinv/rational.hpp"
#include "coxinv/rootsystem.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

inline void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.n())
    throw Error(ErrorCode::InvalidArgument, "weight has " + std::to_string(lambda.size()) + " coordinates, rank is " +
                                                std::to_string(rs.rank()));
  if (!rs.is_dominant(lambda)) throw Error(ErrorCode::NonDominant, "highest weight must be dominant");
}

/// Weyl dimension formula, exact: prod over R+ of <lambda+rho, a^> / <rho, a^>.
inline BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  const Weight shifted = lambda + rs.rho();
  const Weight rho = rs.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    num *= rs.coroot_pairing(shifted, k);
    den *= rs.coroot_pairing(rho, k);
  }
  if (num % den != 0) throw Error(ErrorCode::Internal, "Weyl dimension formula gave a non-integer");
  return num / den;
}

/// Dominant weights mu <= lambda. Grown from lambda by subtracting positive
/// roots; dominant covers in the dominance order differ by a positive root.
inline std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda);
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& beta : rs.positive_root_weights()) {
      Weight next = queue[k] - beta;
      if (!rs.is_dominant(next)) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Weight multiplicities of V(lambda) by Freudenthal's recursion, memoized on
/// dominant weights. The instance owns its memo; it is not shared across threads.
class FreudenthalMultiplicities {
 public:
  FreudenthalMultiplicities(const RootSystem& rs, Weight lambda) : rs_(rs), lambda_(std::move(lambda)) {
    require_dominant(rs_, lambda_);
    const Weight top = lambda_ + rs_.rho();
    top_norm_ = rs_.scaled_form(top, top);
  }

  const Weight& highest_weight() const { return lambda_; }

  std::int64_t multiplicity(const Weight& mu) {
    if (mu.size() != rs_.n()) throw Error(ErrorCode::InvalidArgument, "weight has wrong length");
    return dominant_multiplicity(dominant_representative(rs_, mu));
  }

  /// Full character: every weight with nonzero multiplicity.
  std::map<Weight, std::int64_t> character() {
    std::map<Weight, std::int64_t> out;
    for (const auto& mu : dominant_weights_below(rs_, lambda_)) {
      const auto m = dominant_multiplicity(mu);
      if (m == 0) continue;
      for (auto& nu : weight_orbit(rs_, mu)) out.emplace(std::move(nu), m);
    }
    return out;
  }

 private:
  // lambda - mu in the nonnegative integer cone of simple roots.
  bool below_highest(const Weight& mu) const {
    auto diff = rs_.root_lattice_coords(lambda_ - mu);
    return diff && diff->nonnegative();
  }

  std::int64_t dominant_multiplicity(const Weight& mu) {
    if (mu == lambda_) return 1;
    if (!below_highest(mu)) return 0;
    if (auto it = memo_.find(mu); it != memo_.end()) return it->second;

    // (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{k>=1} (mu+k a, a) m(mu+k a)
    std::int64_t rhs = 0;
    const auto& roots = rs_.positive_roots();
    const auto& root_weights = rs_.positive_root_weights();
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight shifted = mu;
      while (true) {
        shifted = shifted + root_weights[r];
        if (!below_highest(shifted)) break;
        const auto m = dominant_multiplicity(dominant_representative(rs_, shifted));
        if (m != 0) rhs += m * rs_.scaled_form(shifted, roots[r]);
      }
    }
    rhs *= 2;
    const Weight low = mu + rs_.rho();
    const std::int64_t gap = top_norm_ - rs_.scaled_form(low, low);
    if (gap <= 0 || rhs % gap != 0)
      throw Error(ErrorCode::Internal, "Freudenthal recursion produced a non-integral multiplicity");
    const std::int64_t m = rhs / gap;
    memo_.emplace(mu, m);
    return m;
  }

  const RootSystem& rs_;
  Weight lambda_;
  std::int64_t top_norm_ = 0;
  std::map<Weight, std::int64_t> memo_;
};

inline std::int64_t weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  FreudenthalMultiplicities table(rs, lambda);
  return table.multiplicity(mu);
}

/// Kostant partition function P(v): number of ways to write v as a
/// nonnegative integer combination of positive roots.
class KostantPartitionFunction {
 public:
  explicit KostantPartitionFunction(const RootSystem& rs) : roots_(rs.positive_roots()) {}

  std::uint64_t operator()(const RootVec& v) { return count(roots_.size(), v.coeffs); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::size_t, IntVec>& k) const {
      std::size_t h = boost::hash_range(k.second.begin(), k.second.end());
      boost::hash_combine(h, k.first);
      return h;
    }
  };

  // Partitions of v using only the first `k` roots.
  std::uint64_t count(std::size_t k, const IntVec& v) {
    for (auto x : v)
      if (x < 0) return 0;
    if (k == 0) {
      for (auto x : v)
        if (x != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(k, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t total = count(k - 1, v);
    const auto& beta = roots_[k - 1].coeffs;
    IntVec rest = v;
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= beta[i];
    total += count(k, rest);
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<RootVec> roots_;
  std::unordered_map<std::pair<std::size_t, IntVec>, std::uint64_t, KeyHash> memo_;
};

/// Independent multiplicity route: m(mu) = sum_w (-1)^l(w) P(w(lambda+rho) - (mu+rho)).
class KostantOracle {
 public:
  explicit KostantOracle(const RootSystem& rs, std::uint64_t weyl_cap = kDefaultWeylCap)
      : rs_(rs), group_(enumerate_weyl_group(rs, weyl_cap)), partitions_(rs) {}

  std::int64_t multiplicity(const Weight& lambda, const Weight& mu) {
    require_dominant(rs_, lambda);
    if (!rs_.in_root_lattice(lambda - mu)) return 0;
    const Weight top = lambda + rs_.rho();
    const Weight low = mu + rs_.rho();
    std::int64_t total = 0;
    for (const auto& g : group_) {
      auto diff = rs_.root_lattice_coords(g.element.apply(top) - low);
      if (!diff || !diff->nonnegative()) continue;
      const auto p = static_cast<std::int64_t>(partitions_(*diff));
      total += (g.length % 2 == 0) ? p : -p;
    }
    return total;
  }

  std::size_t group_order() const { return group_.size(); }

 private:
  const RootSystem& rs_;
  std::vector<GroupElement> group_;
  KostantPartitionFunction partitions_;
};

inline std::int64_t kostant_multiplicity_oracle(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                                std::uint64_t weyl_cap = kDefaultWeylCap) {
  KostantOracle oracle(rs, weyl_cap);
  return oracle.multiplicity(lambda, mu);
}

/// dim H^0(G/B, L_chi^d)^T = zero-weight multiplicity of V(d chi); zero when
/// chi is outside the root lattice.
inline std::int64_t invariant_dim(const RootSystem& rs, const Weight& chi, std::int64_t d) {
  require_dominant(rs, chi);
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  if (d == 0) return 1;
  if (!rs.in_root_lattice(chi)) return 0;
  return weight_multiplicity(rs, d * chi, Weight(IntVec(rs.n(), 0)));
}

}  // namespace coxinv

#endif  // COXINV_MULTIPLICITY_HPP
