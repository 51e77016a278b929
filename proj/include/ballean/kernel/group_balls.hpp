#pragma once

// Balls of the finitary ballean of an abelian group and of the hyperballeans
// built on its finite subsets: exp- and G-exp balls and the covering number
// behind the logarithmic distance.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballean/extnat.hpp"
#include "ballean/groups/finite_abelian.hpp"
#include "ballean/kernel/set_cover.hpp"

namespace ballean {

/// Additive group interface used by the subset balls.
template <class G>
concept AdditiveGroup = requires(const G& g, const typename G::value_type& a) {
  { g.zero() } -> std::convertible_to<typename G::value_type>;
  { g.plus(a, a) } -> std::convertible_to<typename G::value_type>;
  { g.minus(a) } -> std::convertible_to<typename G::value_type>;
  { g.admits(a) } -> std::convertible_to<bool>;
};

/// Z restricted to the working window [-W, W]. Operations refuse to answer
/// when a ball leaves the window instead of truncating it.
class IntegerWindow {
public:
  using value_type = std::int64_t;

  explicit IntegerWindow(std::int64_t half_width) : w_(half_width) {
    if (w_ < 0) throw std::invalid_argument("window: negative width");
  }

  std::int64_t half_width() const { return w_; }
  value_type zero() const { return 0; }
  value_type plus(value_type a, value_type b) const { return a + b; }
  value_type minus(value_type a) const { return -a; }
  bool admits(value_type a) const { return a >= -w_ && a <= w_; }
  friend bool operator==(const IntegerWindow&, const IntegerWindow&) = default;

private:
  std::int64_t w_;
};

/// FiniteAbelianGroup seen through the AdditiveGroup interface.
class FiniteGroupOps {
public:
  using value_type = Element;
  explicit FiniteGroupOps(FiniteAbelianGroup g) : g_(std::move(g)) {}
  const FiniteAbelianGroup& group() const { return g_; }
  value_type zero() const { return g_.zero(); }
  value_type plus(const value_type& a, const value_type& b) const { return g_.add(a, b); }
  value_type minus(const value_type& a) const { return g_.neg(a); }
  bool admits(const value_type& a) const { return g_.is_element(a); }
  friend bool operator==(const FiniteGroupOps& a, const FiniteGroupOps& b) { return a.g_ == b.g_; }

private:
  FiniteAbelianGroup g_;
};

template <AdditiveGroup G>
using Subset = std::set<typename G::value_type>;

namespace detail {
template <AdditiveGroup G>
void require_members(const G& g, const Subset<G>& s, bool nonempty) {
  if (nonempty && s.empty()) throw std::invalid_argument("exp excludes the empty set");
  for (const auto& x : s)
    if (!g.admits(x)) throw std::invalid_argument("subset element outside the group");
}
} // namespace detail

namespace detail {
template <AdditiveGroup G>
typename G::value_type inside(const G& g, const typename G::value_type& x) {
  if (!g.admits(x)) throw std::out_of_range("ball exits the working window");
  return x;
}
} // namespace detail

/// F ∪ (−F) ∪ {0}
template <AdditiveGroup G>
Subset<G> symmetric_radius(const G& g, const Subset<G>& f) {
  detail::require_members(g, f, false);
  Subset<G> out{g.zero()};
  for (const auto& x : f) {
    out.insert(x);
    out.insert(detail::inside(g, g.minus(x)));
  }
  return out;
}

/// B(Y, F) = {y} ∪ (F + y) ∪ (−F + y) over y ∈ Y.
template <AdditiveGroup G>
Subset<G> group_ball(const G& g, const Subset<G>& y, const Subset<G>& f) {
  Subset<G> radius = symmetric_radius(g, f);
  Subset<G> out;
  for (const auto& a : y)
    for (const auto& r : radius) out.insert(detail::inside(g, g.plus(r, a)));
  return out;
}

template <class S>
bool is_subset(const S& small, const S& big) {
  for (const auto& x : small)
    if (!big.count(x)) return false;
  return true;
}

/// Z ∈ exp B(Y, F): Z ⊆ B(Y, F) and Y ⊆ B(Z, F).
template <AdditiveGroup G>
bool exp_ball_membership(const G& g, const Subset<G>& z, const Subset<G>& y, const Subset<G>& f) {
  detail::require_members(g, z, true);
  detail::require_members(g, y, true);
  return is_subset(z, group_ball(g, y, f)) && is_subset(y, group_ball(g, z, f));
}

/// Every member of exp B({0}, F). Members lie inside F ∪ (−F) ∪ {0}, so the
/// candidates are the nonempty subsets of that set.
template <AdditiveGroup G>
std::vector<Subset<G>> exp_ball_enumerate_centered_identity(const G& g, const Subset<G>& f) {
  Subset<G> radius = symmetric_radius(g, f);
  std::vector<typename G::value_type> pool(radius.begin(), radius.end());
  if (pool.size() > 24) throw std::invalid_argument("exp ball: radius too large to enumerate");
  const Subset<G> centre{g.zero()};
  std::vector<Subset<G>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << pool.size()); ++m) {
    Subset<G> z;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (m >> i & 1) z.insert(pool[i]);
    if (exp_ball_membership(g, z, centre, f)) out.push_back(std::move(z));
  }
  return out;
}

template <AdditiveGroup G>
Subset<G> translate(const G& g, const Subset<G>& y, const typename G::value_type& by) {
  Subset<G> out;
  for (const auto& a : y) out.insert(detail::inside(g, g.plus(by, a)));
  return out;
}

/// G-exp B(Y, A) = {Y} ∪ {g + Y : g ∈ A}.
template <AdditiveGroup G>
std::set<Subset<G>> g_exp_ball(const G& g, const Subset<G>& y, const Subset<G>& a) {
  detail::require_members(g, y, true);
  detail::require_members(g, a, false);
  std::set<Subset<G>> out{y};
  for (const auto& x : a) out.insert(translate(g, y, x));
  return out;
}

struct MuResult {
  /// min max(|F|, |S|) over F, S ∋ 0 with F + Y ⊇ Z and S + Z ⊇ Y
  ExtNat mu;
  /// min |S| over one S ∋ 0 with S + Y ⊇ Z and S + Z ⊇ Y
  ExtNat single_set;
  std::size_t nodes = 0;
};

namespace detail {

/// min |F| with 0 ∈ F and F + from ⊇ to.
template <AdditiveGroup G>
std::size_t directed_cover(const G& g, const Subset<G>& from, const Subset<G>& to, std::size_t& nodes) {
  std::vector<typename G::value_type> universe;
  for (const auto& z : to)
    if (!from.count(z)) universe.push_back(z);
  if (universe.empty()) return 1;
  std::map<typename G::value_type, std::size_t> where;
  for (std::size_t i = 0; i < universe.size(); ++i) where[universe[i]] = i;
  std::map<typename G::value_type, SetCoverSolver::Set> candidates;
  for (const auto& z : universe)
    for (const auto& y : from) {
      auto f = g.plus(z, g.minus(y));
      auto [it, fresh] = candidates.try_emplace(f, SetCoverSolver::Set(universe.size()));
      it->second.set(where[z]);
    }
  std::vector<SetCoverSolver::Set> sets;
  for (auto& [f, s] : candidates) sets.push_back(std::move(s));
  SetCoverSolver solver(universe.size(), std::move(sets));
  std::size_t k = solver.solve();
  nodes += solver.nodes_visited();
  return k + 1;
}

template <AdditiveGroup G>
std::size_t joint_cover(const G& g, const Subset<G>& y, const Subset<G>& z, std::size_t& nodes) {
  // universe: Z \ Y followed by Y \ Z
  std::vector<typename G::value_type> need_z, need_y;
  for (const auto& a : z)
    if (!y.count(a)) need_z.push_back(a);
  for (const auto& a : y)
    if (!z.count(a)) need_y.push_back(a);
  const std::size_t n = need_z.size() + need_y.size();
  if (n == 0) return 1;
  std::map<typename G::value_type, SetCoverSolver::Set> candidates;
  auto mark = [&](const typename G::value_type& s, std::size_t pos) {
    auto [it, fresh] = candidates.try_emplace(s, SetCoverSolver::Set(n));
    it->second.set(pos);
  };
  for (std::size_t i = 0; i < need_z.size(); ++i)
    for (const auto& b : y) mark(g.plus(need_z[i], g.minus(b)), i);
  for (std::size_t i = 0; i < need_y.size(); ++i)
    for (const auto& b : z) mark(g.plus(need_y[i], g.minus(b)), need_z.size() + i);
  candidates.erase(g.zero());
  std::vector<SetCoverSolver::Set> sets;
  for (auto& [s, bits] : candidates) sets.push_back(std::move(bits));
  SetCoverSolver solver(n, std::move(sets));
  std::size_t k = solver.solve();
  nodes += solver.nodes_visited();
  return k + 1;
}

} // namespace detail

/// Exact covering numbers between two nonempty finite subsets. Finite
/// subsets of one group always share a component of exp B_G, so both values
/// are finite.
template <AdditiveGroup G>
MuResult mu_set_distance(const G& g, const Subset<G>& y, const Subset<G>& z) {
  detail::require_members(g, y, true);
  detail::require_members(g, z, true);
  std::size_t nodes = 0;
  std::size_t forward = detail::directed_cover(g, y, z, nodes);
  std::size_t backward = detail::directed_cover(g, z, y, nodes);
  std::size_t joint = detail::joint_cover(g, y, z, nodes);
  return {ExtNat(static_cast<long>(std::max(forward, backward))), ExtNat(static_cast<long>(joint)), nodes};
}

template <AdditiveGroup G>
Subset<G> subset_of(const G& g, std::initializer_list<typename G::value_type> xs) {
  Subset<G> s(xs);
  detail::require_members(g, s, false);
  return s;
}

} // namespace ballean
