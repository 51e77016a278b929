#pragma once

// Finite balleans given by explicit ball tables, and the constructions on
// them: iteration and cellularization, products, coproducts, components and
// the exponential hyperballean.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ballean {

using PointSet = boost::dynamic_bitset<>;

inline constexpr std::size_t kDefaultProductLimit = 4096;
inline constexpr std::size_t kDefaultExpLimit = 12;

class ExplicitBallean {
public:
  ExplicitBallean() = default;

  /// Raw table: balls[r][x] is B(x, r). Only shapes are checked; run
  /// validate_ballean() to check the axioms.
  ExplicitBallean(std::vector<std::string> support, std::vector<std::string> radii,
                  std::vector<std::vector<PointSet>> balls)
      : support_(std::move(support)), radii_(std::move(radii)), balls_(std::move(balls)) {
    if (radii_.empty()) throw std::invalid_argument("ballean: the radius set must be nonempty");
    if (balls_.size() != radii_.size()) throw std::invalid_argument("ballean: one ball row per radius required");
    for (const auto& row : balls_) {
      if (row.size() != support_.size()) throw std::invalid_argument("ballean: one ball per point required");
      for (const auto& b : row)
        if (b.size() != support_.size()) throw std::invalid_argument("ballean: ball universe size mismatch");
    }
    for (std::size_t i = 0; i < support_.size(); ++i)
      if (!point_index_.emplace(support_[i], i).second) throw std::invalid_argument("ballean: duplicate point " + support_[i]);
    for (std::size_t i = 0; i < radii_.size(); ++i)
      if (!radius_index_.emplace(radii_[i], i).second) throw std::invalid_argument("ballean: duplicate radius " + radii_[i]);
  }

  std::size_t size() const { return support_.size(); }
  std::size_t radius_count() const { return radii_.size(); }
  const std::vector<std::string>& support() const { return support_; }
  const std::vector<std::string>& radii() const { return radii_; }

  const PointSet& ball(std::size_t x, std::size_t r) const { return balls_.at(r).at(x); }

  std::size_t point(const std::string& name) const {
    auto it = point_index_.find(name);
    if (it == point_index_.end()) throw std::invalid_argument("unknown point " + name);
    return it->second;
  }

  std::size_t radius(const std::string& name) const {
    auto it = radius_index_.find(name);
    if (it == radius_index_.end()) throw std::invalid_argument("unknown radius " + name);
    return it->second;
  }

  PointSet empty_set() const { return PointSet(size()); }

  PointSet singleton(std::size_t x) const {
    PointSet s(size());
    s.set(x);
    return s;
  }

  /// B(A, r) = union of B(y, r) over y in A.
  PointSet ball_of_set(const PointSet& a, std::size_t r) const {
    PointSet out(size());
    for (auto y = a.find_first(); y != PointSet::npos; y = a.find_next(y)) out |= balls_[r][y];
    return out;
  }

  const std::vector<std::vector<PointSet>>& table() const { return balls_; }

  friend bool operator==(const ExplicitBallean& a, const ExplicitBallean& b) {
    return a.support_ == b.support_ && a.radii_ == b.radii_ && a.balls_ == b.balls_;
  }

private:
  std::vector<std::string> support_;
  std::vector<std::string> radii_;
  std::vector<std::vector<PointSet>> balls_;
  std::map<std::string, std::size_t> point_index_;
  std::map<std::string, std::size_t> radius_index_;
};

inline std::vector<std::string> numbered_points(std::size_t n, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// One radius, every ball a singleton.
inline ExplicitBallean discrete_ballean(std::vector<std::string> support) {
  const std::size_t n = support.size();
  std::vector<PointSet> row;
  for (std::size_t x = 0; x < n; ++x) {
    PointSet s(n);
    s.set(x);
    row.push_back(s);
  }
  return ExplicitBallean(std::move(support), {"*"}, {row});
}

/// One radius, every ball the whole support.
inline ExplicitBallean bounded_ballean(std::vector<std::string> support) {
  const std::size_t n = support.size();
  PointSet all(n);
  all.set();
  return ExplicitBallean(std::move(support), {"*"}, {std::vector<PointSet>(n, all)});
}

struct BalleanViolation {
  enum class Kind { Containment, Symmetry, UpperMultiplicativity } kind;
  std::size_t point = 0;
  std::size_t other = 0; // second point (symmetry)
  std::size_t alpha = 0;
  std::size_t beta = 0; // second radius (upper multiplicativity)

  std::string kind_name() const {
    switch (kind) {
    case Kind::Containment: return "containment";
    case Kind::Symmetry: return "symmetry";
    case Kind::UpperMultiplicativity: return "upper_multiplicativity";
    }
    return {};
  }
};

struct ValidationReport {
  std::optional<BalleanViolation> violation;
  bool valid() const { return !violation.has_value(); }
};

/// Checks containment, symmetry and upper multiplicativity in that order and
/// reports the first failure. For upper multiplicativity the reported point
/// is where B(B(x,α),β) escapes B(x,α), the first candidate radius.
inline ValidationReport validate_ballean(const ExplicitBallean& b) {
  using K = BalleanViolation::Kind;
  const std::size_t n = b.size(), r = b.radius_count();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t x = 0; x < n; ++x)
      if (!b.ball(x, a).test(x)) return {BalleanViolation{K::Containment, x, x, a, a}};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (b.ball(y, a).test(x) != b.ball(x, a).test(y)) return {BalleanViolation{K::Symmetry, x, y, a, a}};
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t be = 0; be < r; ++be) {
      std::vector<PointSet> twice;
      for (std::size_t x = 0; x < n; ++x) twice.push_back(b.ball_of_set(b.ball(x, a), be));
      bool witnessed = false;
      for (std::size_t g = 0; g < r && !witnessed; ++g) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = twice[x].is_subset_of(b.ball(x, g));
        witnessed = ok;
      }
      if (!witnessed) {
        std::size_t x = 0;
        while (x < n && twice[x].is_subset_of(b.ball(x, a))) ++x;
        return {BalleanViolation{K::UpperMultiplicativity, x < n ? x : 0, x < n ? x : 0, a, be}};
      }
    }
  return {};
}

/// B^n(A, α) for a set of centres.
inline PointSet ball_iterate_set(const ExplicitBallean& b, PointSet a, std::size_t alpha, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) a = b.ball_of_set(a, alpha);
  return a;
}

/// B^n(x, α): n-fold ball composition; n = 1 is the ball itself.
inline PointSet ball_iterate(const ExplicitBallean& b, std::size_t x, std::size_t alpha, std::size_t n) {
  if (x >= b.size()) throw std::invalid_argument("unknown point");
  if (alpha >= b.radius_count()) throw std::invalid_argument("unknown radius");
  if (n == 0) throw std::invalid_argument("ball_iterate: n must be positive");
  return ball_iterate_set(b, b.singleton(x), alpha, n);
}

/// B^□(A, α): the fixpoint of repeated balls around a set of centres.
inline PointSet cellular_closure(const ExplicitBallean& b, const PointSet& a, std::size_t alpha) {
  PointSet cur = b.ball_of_set(a, alpha);
  for (;;) {
    PointSet next = b.ball_of_set(cur, alpha);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

inline ExplicitBallean cellularization(const ExplicitBallean& b) {
  std::vector<std::vector<PointSet>> balls(b.radius_count());
  for (std::size_t a = 0; a < b.radius_count(); ++a)
    for (std::size_t x = 0; x < b.size(); ++x) balls[a].push_back(cellular_closure(b, b.singleton(x), a));
  return ExplicitBallean(b.support(), b.radii(), std::move(balls));
}

/// Cellular as a ballean structure: every B^□(·,α) sits inside some
/// B(·,β). Weaker than cellularization(b) == b, which compares tables.
inline bool is_cellular(const ExplicitBallean& b) {
  auto cell = cellularization(b);
  for (std::size_t a = 0; a < b.radius_count(); ++a) {
    bool found = false;
    for (std::size_t be = 0; be < b.radius_count() && !found; ++be) {
      bool ok = true;
      for (std::size_t x = 0; x < b.size() && ok; ++x) ok = cell.ball(x, a).is_subset_of(b.ball(x, be));
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

/// Points sharing a component, via union-find over every ball.
inline std::vector<std::vector<std::size_t>> connected_components(const ExplicitBallean& b) {
  std::vector<std::size_t> parent(b.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < b.radius_count(); ++a)
    for (std::size_t x = 0; x < b.size(); ++x) {
      const auto& s = b.ball(x, a);
      for (auto y = s.find_first(); y != PointSet::npos; y = s.find_next(y)) parent[find(y)] = find(x);
    }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < b.size(); ++x) classes[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

inline std::string tuple_name(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

/// Product ballean: points and radii are tuples, balls are products.
inline ExplicitBallean product_ballean(const std::vector<ExplicitBallean>& bs,
                                       std::size_t limit = kDefaultProductLimit) {
  if (bs.empty()) throw std::invalid_argument("product: empty family");
  std::size_t points = 1, radii = 1;
  for (const auto& b : bs) {
    if (b.size() != 0 && points > limit / b.size()) throw std::invalid_argument("product: size limit exceeded");
    points *= b.size();
    radii *= b.radius_count();
  }
  if (points > limit) throw std::invalid_argument("product: size limit exceeded");
  const std::size_t k = bs.size();
  auto decode = [&](std::size_t idx, auto extent) {
    std::vector<std::size_t> digits(k);
    for (std::size_t i = k; i-- > 0;) {
      digits[i] = idx % extent(bs[i]);
      idx /= extent(bs[i]);
    }
    return digits;
  };
  auto pt_extent = [](const ExplicitBallean& b) { return b.size(); };
  auto rad_extent = [](const ExplicitBallean& b) { return b.radius_count(); };

  std::vector<std::string> support, radius_names;
  for (std::size_t p = 0; p < points; ++p) {
    auto d = decode(p, pt_extent);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(bs[i].support()[d[i]]);
    support.push_back(tuple_name(parts));
  }
  for (std::size_t r = 0; r < radii; ++r) {
    auto d = decode(r, rad_extent);
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < k; ++i) parts.push_back(bs[i].radii()[d[i]]);
    radius_names.push_back(tuple_name(parts));
  }
  std::vector<std::vector<PointSet>> balls(radii, std::vector<PointSet>(points, PointSet(points)));
  for (std::size_t r = 0; r < radii; ++r) {
    auto rd = decode(r, rad_extent);
    for (std::size_t p = 0; p < points; ++p) {
      auto pd = decode(p, pt_extent);
      for (std::size_t q = 0; q < points; ++q) {
        auto qd = decode(q, pt_extent);
        bool in = true;
        for (std::size_t i = 0; i < k && in; ++i) in = bs[i].ball(pd[i], rd[i]).test(qd[i]);
        if (in) balls[r][p].set(q);
      }
    }
  }
  return ExplicitBallean(std::move(support), std::move(radius_names), std::move(balls));
}

/// Coproduct ballean. Radii are finite partial tuples (α_k)_{k∈K}; a point
/// of summand j gets its own ball when j ∈ K and a singleton otherwise.
/// Points are named "j:x"; radii list "j=α" entries, "()" for K = ∅.
inline ExplicitBallean coproduct_ballean(const std::vector<ExplicitBallean>& bs) {
  if (bs.empty()) throw std::invalid_argument("coproduct: empty family");
  std::vector<std::string> support;
  std::vector<std::size_t> offset;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    offset.push_back(support.size());
    for (const auto& x : bs[j].support()) support.push_back(std::to_string(j) + ":" + x);
  }
  const std::size_t n = support.size();
  // each summand contributes either "absent" or one of its radii
  std::size_t total = 1;
  for (const auto& b : bs) total *= b.radius_count() + 1;
  std::vector<std::string> radius_names;
  std::vector<std::vector<PointSet>> balls;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::optional<std::size_t>> choice(bs.size());
    std::size_t c = code;
    std::vector<std::string> parts;
    for (std::size_t j = bs.size(); j-- > 0;) {
      std::size_t digit = c % (bs[j].radius_count() + 1);
      c /= bs[j].radius_count() + 1;
      if (digit > 0) choice[j] = digit - 1;
    }
    for (std::size_t j = 0; j < bs.size(); ++j)
      if (choice[j]) parts.push_back(std::to_string(j) + "=" + bs[j].radii()[*choice[j]]);
    radius_names.push_back(tuple_name(parts));
    std::vector<PointSet> row;
    for (std::size_t j = 0; j < bs.size(); ++j)
      for (std::size_t x = 0; x < bs[j].size(); ++x) {
        PointSet s(n);
        if (choice[j]) {
          const auto& inner = bs[j].ball(x, *choice[j]);
          for (auto y = inner.find_first(); y != PointSet::npos; y = inner.find_next(y)) s.set(offset[j] + y);
        } else {
          s.set(offset[j] + x);
        }
        row.push_back(std::move(s));
      }
    balls.push_back(std::move(row));
  }
  return ExplicitBallean(std::move(support), std::move(radius_names), std::move(balls));
}

/// Name of a nonempty subset given as a bit mask over the support.
inline std::string subset_name(const ExplicitBallean& b, std::uint64_t mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (mask >> i & 1) {
      s += (first ? "" : ",") + b.support()[i];
      first = false;
    }
  return s + "}";
}

/// exp B on all nonempty subsets: Z ∈ exp B(Y, α) iff Z ⊆ B(Y, α) and
/// Y ⊆ B(Z, α). The subset with bit mask m is point m - 1.
inline ExplicitBallean exp_hyperballean_of(const ExplicitBallean& b, std::size_t limit = kDefaultExpLimit) {
  if (b.size() > limit || b.size() > 20) throw std::invalid_argument("exp: support exceeds size limit");
  const std::size_t n = b.size();
  const std::uint64_t count = (std::uint64_t{1} << n) - 1;
  std::vector<std::string> support;
  for (std::uint64_t m = 1; m <= count; ++m) support.push_back(subset_name(b, m));

  std::vector<std::vector<PointSet>> balls(b.radius_count());
  for (std::size_t a = 0; a < b.radius_count(); ++a) {
    std::vector<std::uint64_t> ball_mask(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (b.ball(x, a).test(y)) ball_mask[x] |= std::uint64_t{1} << y;
    std::vector<std::uint64_t> around(count + 1, 0);
    for (std::uint64_t m = 1; m <= count; ++m) {
      std::uint64_t low = m & (~m + 1);
      std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(low));
      around[m] = around[m ^ low] | ball_mask[bit];
    }
    balls[a].assign(count, PointSet(count));
    for (std::uint64_t y = 1; y <= count; ++y)
      for (std::uint64_t z = 1; z <= count; ++z)
        if ((z & ~around[y]) == 0 && (y & ~around[z]) == 0) balls[a][y - 1].set(z - 1);
  }
  return ExplicitBallean(std::move(support), b.radii(), std::move(balls));
}

/// Induced subballean on the points listed in `keep`, in that order.
inline ExplicitBallean subballean(const ExplicitBallean& b, const std::vector<std::size_t>& keep) {
  std::vector<std::string> support;
  for (auto x : keep) support.push_back(b.support().at(x));
  std::vector<std::vector<PointSet>> balls(b.radius_count());
  for (std::size_t a = 0; a < b.radius_count(); ++a)
    for (auto x : keep) {
      PointSet s(keep.size());
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (b.ball(x, a).test(keep[j])) s.set(j);
      balls[a].push_back(std::move(s));
    }
  return ExplicitBallean(std::move(support), b.radii(), std::move(balls));
}

/// f: X -> Y given pointwise. For every α there is a β with
/// f(B(x,α)) ⊆ B(f(x),β) for all x.
inline bool is_bornologous(const std::vector<std::size_t>& f, const ExplicitBallean& from, const ExplicitBallean& to) {
  if (f.size() != from.size()) throw std::invalid_argument("bornologous: map size mismatch");
  for (std::size_t a = 0; a < from.radius_count(); ++a) {
    bool found = false;
    for (std::size_t be = 0; be < to.radius_count() && !found; ++be) {
      bool ok = true;
      for (std::size_t x = 0; x < from.size() && ok; ++x) {
        const auto& s = from.ball(x, a);
        for (auto y = s.find_first(); y != PointSet::npos && ok; y = s.find_next(y)) ok = to.ball(f[x], be).test(f[y]);
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

/// Bijection bornologous in both directions.
inline bool is_asymorphism(const std::vector<std::size_t>& f, const ExplicitBallean& from, const ExplicitBallean& to) {
  if (f.size() != from.size() || from.size() != to.size()) return false;
  std::vector<std::size_t> inv(to.size(), to.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= to.size() || inv[f[x]] != to.size()) return false;
    inv[f[x]] = x;
  }
  return is_bornologous(f, from, to) && is_bornologous(inv, to, from);
}

} // namespace ballean
