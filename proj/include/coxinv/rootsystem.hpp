#ifndef COXINV_ROOTSYSTEM_HPP
#define COXINV_ROOTSYSTEM_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxinv/error.hpp"
#include "coxinv/rational.hpp"

namespace coxinv {

using IntVec = std::vector<std::int64_t>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Ranks above this are refused; every table in the library is dense in the rank.
inline constexpr int kMaxRank = 64;

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  char letter() const { return static_cast<char>(family); }
  std::string name() const { return std::string(1, letter()) + std::to_string(rank); }

  bool admissible() const {
    if (rank < 1 || rank > kMaxRank) return false;
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B:
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  static RootSystemSpec parse(char letter, int rank) {
    switch (letter) {
      case 'A': case 'a': return {Family::A, rank};
      case 'B': case 'b': return {Family::B, rank};
      case 'C': case 'c': return {Family::C, rank};
      case 'D': case 'd': return {Family::D, rank};
      case 'E': case 'e': return {Family::E, rank};
      case 'F': case 'f': return {Family::F, rank};
      case 'G': case 'g': return {Family::G, rank};
      default: break;
    }
    throw Error(ErrorCode::InvalidArgument, std::string("unknown family '") + letter + "'");
  }

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Integral weight in the fundamental-weight basis: coords[i] = <lambda, coroot_{i+1}>.
struct Weight {
  IntVec coords;

  Weight() = default;
  explicit Weight(IntVec c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
  }

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Weight operator-(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

/// Integer vector in the simple-root basis (an element of the root lattice).
struct RootVec {
  IntVec coeffs;

  RootVec() = default;
  explicit RootVec(IntVec c) : coeffs(std::move(c)) {}
  RootVec(std::initializer_list<std::int64_t> c) : coeffs(c) {}

  std::size_t size() const { return coeffs.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs[i]; }
  std::int64_t& operator[](std::size_t i) { return coeffs[i]; }
  std::int64_t height() const { return std::accumulate(coeffs.begin(), coeffs.end(), std::int64_t{0}); }
  bool nonnegative() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x >= 0; });
  }
  bool nonpositive() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x <= 0; });
  }

  friend auto operator<=>(const RootVec&, const RootVec&) = default;
};

inline RootVec operator+(RootVec a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline RootVec operator-(RootVec a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Exact rational coordinates in the simple-root basis.
struct RootCoords {
  std::vector<Rational> coeffs;

  RootCoords() = default;
  explicit RootCoords(std::vector<Rational> c) : coeffs(std::move(c)) {}
  explicit RootCoords(const RootVec& v) : coeffs(v.coeffs.begin(), v.coeffs.end()) {}

  std::size_t size() const { return coeffs.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs[i]; }

  bool is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return is_integer(q); });
  }
  RootVec to_integers() const {
    if (!is_integral()) throw Error(ErrorCode::InvalidArgument, "root coordinates are not integral");
    RootVec out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& q : coeffs) out.coeffs.push_back(q.numerator());
    return out;
  }
  Rational height() const {
    Rational h{0};
    for (const auto& q : coeffs) h += q;
    return h;
  }

  friend bool operator==(const RootCoords&, const RootCoords&) = default;
};

/// Root datum of one simple type, Bourbaki labelling. Immutable after build().
class RootSystem {
 public:
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  std::size_t n() const { return static_cast<std::size_t>(spec_.rank); }

  /// cartan(i, j) = <alpha_j, coroot_i>, zero-based.
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i * n() + j]; }
  std::vector<IntVec> cartan_rows() const {
    std::vector<IntVec> rows(n());
    for (std::size_t i = 0; i < n(); ++i) rows[i].assign(cartan_.begin() + i * n(), cartan_.begin() + (i + 1) * n());
    return rows;
  }
  std::int64_t cartan_det() const { return det_; }
  std::int64_t adjugate(std::size_t i, std::size_t j) const { return adj_[i * n() + j]; }

  /// d_i with d_i A[i][j] = d_j A[j][i]; short roots have d = 1.
  const IntVec& symmetrizers() const { return sym_; }
  std::int64_t long_symmetrizer() const { return *std::max_element(sym_.begin(), sym_.end()); }

  const std::vector<RootVec>& positive_roots() const { return roots_; }
  const std::vector<Weight>& positive_root_weights() const { return root_weights_; }
  /// Coefficients of the coroot of positive root k on the simple coroots.
  const IntVec& coroot_coeffs(std::size_t k) const { return coroots_[k]; }
  /// Squared length of positive root k in symmetrizer units, halved.
  std::int64_t root_half_norm(std::size_t k) const { return half_norms_[k]; }

  const std::vector<RootCoords>& fundamental_weights() const { return fundamentals_; }
  Weight rho() const { return Weight(IntVec(n(), 1)); }
  const Weight& highest_long_root() const { return root_weights_.back(); }
  const RootVec& highest_long_root_coords() const { return roots_.back(); }

  Weight simple_root_weight(std::size_t i) const {
    Weight w{IntVec(n(), 0)};
    for (std::size_t j = 0; j < n(); ++j) w[j] = cartan(j, i);
    return w;
  }
  Weight fundamental_weight(int index) const {
    check_index(index);
    Weight w(IntVec(n(), 0));
    w[static_cast<std::size_t>(index - 1)] = 1;
    return w;
  }

  std::size_t dynkin_edges() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = i + 1; j < n(); ++j)
        if (cartan(i, j) != 0) ++e;
    return e;
  }

  void check_index(int index) const {
    if (index < 1 || index > rank())
      throw Error(ErrorCode::IndexOutOfRange,
                  "simple index " + std::to_string(index) + " outside 1.." + std::to_string(rank()));
  }

  Weight to_weight(const RootVec& r) const {
    Weight w(IntVec(n(), 0));
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) w[i] += cartan(i, j) * r[j];
    return w;
  }
  Weight to_weight(const RootCoords& r) const {
    IntVec c(n(), 0);
    for (std::size_t i = 0; i < n(); ++i) {
      Rational s{0};
      for (std::size_t j = 0; j < n(); ++j) s += Rational(cartan(i, j)) * r[j];
      if (!is_integer(s)) throw Error(ErrorCode::InvalidArgument, "root coordinates do not define an integral weight");
      c[i] = s.numerator();
    }
    return Weight(std::move(c));
  }

  RootCoords to_root_coords(const Weight& w) const {
    std::vector<Rational> out(n());
    for (std::size_t i = 0; i < n(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n(); ++j) s += adjugate(i, j) * w[j];
      out[i] = Rational(s, det_);
    }
    return RootCoords(std::move(out));
  }

  /// Root-basis coordinates when w lies in the root lattice.
  std::optional<RootVec> root_lattice_coords(const Weight& w) const {
    RootVec out(IntVec(n(), 0));
    for (std::size_t i = 0; i < n(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n(); ++j) s += adjugate(i, j) * w[j];
      if (s % det_ != 0) return std::nullopt;
      out[i] = s / det_;
    }
    return out;
  }
  bool in_root_lattice(const Weight& w) const { return root_lattice_coords(w).has_value(); }

  /// det(A) times the height of w; its sign decides positivity for roots.
  std::int64_t scaled_height(const Weight& w) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n(); ++j) s += adj_colsum_[j] * w[j];
    return s;
  }
  bool is_negative_root_image(const Weight& root_weight) const { return scaled_height(root_weight) < 0; }

  bool is_dominant(const Weight& w) const {
    return std::all_of(w.coords.begin(), w.coords.end(), [](auto x) { return x >= 0; });
  }

  // <lambda, coroot_i>, one-based index.
  Rational pairing(const Weight& w, int index) const {
    check_index(index);
    return Rational(w[static_cast<std::size_t>(index - 1)]);
  }
  Rational pairing(const RootCoords& r, int index) const {
    check_index(index);
    const auto i = static_cast<std::size_t>(index - 1);
    Rational s{0};
    for (std::size_t j = 0; j < n(); ++j) s += Rational(cartan(i, j)) * r[j];
    return s;
  }

  /// <lambda, coroot of positive root k>.
  std::int64_t coroot_pairing(const Weight& w, std::size_t k) const {
    const auto& c = coroots_[k];
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n(); ++i) s += c[i] * w[i];
    return s;
  }

  /// W-invariant form normalized so that long roots have squared length 2.
  Rational bilinear_form(const RootCoords& x, const RootCoords& y) const {
    Rational s{0};
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < n(); ++j) s += x[i] * y[j] * Rational(sym_[i] * cartan(i, j));
    return s / Rational(long_symmetrizer());
  }
  Rational bilinear_form(const Weight& x, const Weight& y) const {
    return Rational(scaled_form(x, y), det_ * long_symmetrizer());
  }

  /// Integer multiple det(A) * long_symmetrizer of bilinear_form, on weights.
  std::int64_t scaled_form(const Weight& x, const Weight& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n(); ++i) {
      std::int64_t ax = 0;
      for (std::size_t j = 0; j < n(); ++j) ax += adjugate(i, j) * x[j];
      s += ax * sym_[i] * y[i];
    }
    return s;
  }
  /// Same scale as scaled_form, with the second argument a root-lattice vector.
  std::int64_t scaled_form(const Weight& x, const RootVec& r) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n(); ++i) s += r[i] * sym_[i] * x[i];
    return s * det_;
  }

  /// s_i(lambda) in weight coordinates, one-based index.
  Weight reflect(const Weight& w, int index) const {
    const auto i = static_cast<std::size_t>(index - 1);
    Weight out = w;
    const auto p = w[i];
    if (p != 0)
      for (std::size_t j = 0; j < n(); ++j) out[j] -= p * cartan(j, i);
    return out;
  }

  std::size_t root_index(const RootVec& r) const {
    auto it = std::lower_bound(sorted_roots_.begin(), sorted_roots_.end(), std::make_pair(r, std::size_t{0}));
    if (it != sorted_roots_.end() && it->first == r) return it->second;
    return roots_.size();
  }
  bool is_positive_root(const RootVec& r) const { return root_index(r) < roots_.size(); }

 private:
  RootSystem() = default;

  RootSystemSpec spec_;
  IntVec cartan_;
  IntVec adj_;
  IntVec adj_colsum_;
  std::int64_t det_ = 1;
  IntVec sym_;
  std::vector<RootVec> roots_;
  std::vector<Weight> root_weights_;
  std::vector<IntVec> coroots_;
  IntVec half_norms_;
  std::vector<RootCoords> fundamentals_;
  std::vector<std::pair<RootVec, std::size_t>> sorted_roots_;
};

namespace detail {

inline IntVec cartan_matrix(const RootSystemSpec& spec) {
  const auto n = static_cast<std::size_t>(spec.rank);
  IntVec a(n * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  auto link = [&](std::size_t i, std::size_t j) { at(i, j) = -1; at(j, i) = -1; };
  for (std::size_t i = 0; i < n; ++i) at(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      at(0, 1) = -3;  // alpha_1 short
      at(1, 0) = -1;
      break;
  }
  return a;
}

// Gauss-Jordan over the rationals; returns (det, inverse), row-major.
inline std::pair<Rational, std::vector<Rational>> invert(const IntVec& m, std::size_t n) {
  std::vector<Rational> a(m.begin(), m.end());
  std::vector<Rational> inv(n * n, Rational{0});
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  Rational det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col].numerator() == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::Internal, "singular Cartan matrix");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a[piv * n + k], a[col * n + k]);
        std::swap(inv[piv * n + k], inv[col * n + k]);
      }
      det = -det;
    }
    const Rational p = a[col * n + col];
    det *= p;
    for (std::size_t k = 0; k < n; ++k) {
      a[col * n + k] /= p;
      inv[col * n + k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].numerator() == 0) continue;
      const Rational f = a[r * n + col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r * n + k] -= f * a[col * n + k];
        inv[r * n + k] -= f * inv[col * n + k];
      }
    }
  }
  return {det, inv};
}

}  // namespace detail

inline RootSystem RootSystem::build(const RootSystemSpec& spec) {
  if (!spec.admissible())
    throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(spec.rank) + " is not admissible for family " +
                                            std::string(1, spec.letter()));
  RootSystem rs;
  rs.spec_ = spec;
  const auto n = rs.n();
  rs.cartan_ = detail::cartan_matrix(spec);

  auto [det, inv] = detail::invert(rs.cartan_, n);
  if (!is_integer(det) || det.numerator() <= 0) throw Error(ErrorCode::Internal, "unexpected Cartan determinant");
  rs.det_ = det.numerator();
  rs.adj_.resize(n * n);
  rs.adj_colsum_.assign(n, 0);
  for (std::size_t i = 0; i < n * n; ++i) {
    const Rational v = inv[i] * det;
    if (!is_integer(v)) throw Error(ErrorCode::Internal, "non-integral adjugate");
    rs.adj_[i] = v.numerator();
    rs.adj_colsum_[i % n] += rs.adj_[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = inv[k * n + i];
    rs.fundamentals_.emplace_back(std::move(col));
  }

  // Symmetrizers by propagation along the (connected) Dynkin diagram.
  std::vector<Rational> d(n, Rational{0});
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || rs.cartan(i, j) == 0 || d[j].numerator() != 0) continue;
      d[j] = d[i] * Rational(rs.cartan(i, j), rs.cartan(j, i));
      stack.push_back(j);
    }
  }
  std::int64_t lcm_den = 1;
  for (const auto& q : d) lcm_den = std::lcm(lcm_den, q.denominator());
  std::int64_t g = 0;
  for (const auto& q : d) g = std::gcd(g, (q * lcm_den).numerator());
  for (const auto& q : d) rs.sym_.push_back((q * lcm_den).numerator() / g);

  // Positive roots by closure, one height level at a time, via alpha_i-strings.
  std::set<RootVec> known;
  std::vector<RootVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    RootVec e(IntVec(n, 0));
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  while (!level.empty()) {
    rs.roots_.insert(rs.roots_.end(), level.begin(), level.end());
    std::set<RootVec> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;
        for (std::size_t j = 0; j < n; ++j) p += rs.cartan(i, j) * beta[j];
        std::int64_t r = 0;
        RootVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++r;
        }
        if (r - p > 0) {
          RootVec up = beta;
          up[i] += 1;
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }

  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    const auto& a = rs.roots_[k];
    rs.root_weights_.push_back(rs.to_weight(a));
    std::int64_t norm = 0;  // (alpha, alpha) in symmetrizer units
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += a[i] * a[j] * rs.sym_[i] * rs.cartan(i, j);
    const std::int64_t half = norm / 2;
    IntVec co(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((a[i] * rs.sym_[i]) % half != 0) throw Error(ErrorCode::Internal, "non-integral coroot");
      co[i] = a[i] * rs.sym_[i] / half;
    }
    rs.half_norms_.push_back(half);
    rs.coroots_.push_back(std::move(co));
    rs.sorted_roots_.emplace_back(a, k);
  }
  std::sort(rs.sorted_roots_.begin(), rs.sorted_roots_.end());
  return rs;
}

inline RootSystem build(const RootSystemSpec& spec) { return RootSystem::build(spec); }
inline RootSystem build(char family, int rank) { return RootSystem::build(RootSystemSpec::parse(family, rank)); }

/// Closed-form |R+| for each family.
inline std::int64_t expected_positive_root_count(const RootSystemSpec& spec) {
  const std::int64_t n = spec.rank;
  switch (spec.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

/// All simple types with rank at most max_rank, in family order.
inline std::vector<RootSystemSpec> supported_specs(int max_rank) {
  std::vector<RootSystemSpec> out;
  for (char f : std::string("ABCDEFG")) {
    for (int r = 1; r <= max_rank; ++r) {
      auto s = RootSystemSpec::parse(f, r);
      if (s.admissible()) out.push_back(s);
    }
  }
  return out;
}

}  // namespace coxinv

#endif  // COXINV_ROOTSYSTEM_HPP
