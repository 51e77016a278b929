#pragma once

// Explicit maps and enumerators that realize the coarse structure of concrete
// subgroup hyperballeans: prime-power subgroups of Z against the taxicab
// lattice, the staircase embedding into Hamming space, coordinate subgroups
// of elementary abelian groups, the cyclic-subgroup tree of a p-group, and
// the balls of L(Z), l-L(Z) and l-L(Z(p^inf)).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ballean/extnat.hpp"
#include "ballean/groups/finite_abelian.hpp"
#include "ballean/groups/prufer.hpp"
#include "ballean/kernel/hamming.hpp"
#include "ballean/lattice.hpp"

namespace ballean {

/// Distinct primes p1 < ... < pn and an integer logarithm base b with
/// 2 <= b <= p1.
class PrimeTuple {
public:
  explicit PrimeTuple(std::vector<std::uint64_t> primes, std::uint64_t log_base = 2)
      : primes_(std::move(primes)), base_(log_base) {
    if (primes_.empty()) throw std::invalid_argument("prime tuple: empty");
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (!is_prime(primes_[i])) throw std::invalid_argument("prime tuple: " + std::to_string(primes_[i]) + " is not prime");
      if (i && primes_[i] <= primes_[i - 1]) throw std::invalid_argument("prime tuple: primes must be distinct and increasing");
    }
    if (base_ < 2 || base_ > primes_.front())
      throw std::invalid_argument("prime tuple: log base must satisfy 2 <= base <= smallest prime");
  }

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint64_t log_base() const { return base_; }

private:
  std::vector<std::uint64_t> primes_;
  std::uint64_t base_;
};

using TaxiPoint = std::vector<std::uint64_t>;

namespace detail {
inline void require_dims(const PrimeTuple& pt, const TaxiPoint& m) {
  if (m.size() != pt.size()) throw std::invalid_argument("taxi point length does not match the prime tuple");
}

inline Integer prime_power_product(const PrimeTuple& pt, const TaxiPoint& m) {
  Integer v = 1, t;
  for (std::size_t i = 0; i < m.size(); ++i) {
    mpz_ui_pow_ui(t.get_mpz_t(), pt.primes()[i], m[i]);
    v *= t;
  }
  return v;
}
} // namespace detail

/// m̄ ↦ (p1^m1 ⋯ pn^mn) Z
inline Lattice iota(const PrimeTuple& pt, const TaxiPoint& m) {
  detail::require_dims(pt, m);
  IntMatrix g(1, 1);
  g(0, 0) = detail::prime_power_product(pt, m);
  return Lattice::from_generators(1, g);
}

/// Closed form of max(|A : A∩A'|, |A' : A∩A'|) for A = iota(m̄), A' = iota(m̄'):
/// the product of p_i^max(m_i - m'_i, 0) when A's generator is the larger
/// one, and the mirrored product otherwise.
inline ExtNat dlog_closed_form(const PrimeTuple& pt, const TaxiPoint& m, const TaxiPoint& mp) {
  detail::require_dims(pt, m);
  detail::require_dims(pt, mp);
  const bool first_larger = detail::prime_power_product(pt, m) >= detail::prime_power_product(pt, mp);
  Integer v = 1, t;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t e = first_larger ? (m[i] > mp[i] ? m[i] - mp[i] : 0) : (mp[i] > m[i] ? mp[i] - m[i] : 0);
    mpz_ui_pow_ui(t.get_mpz_t(), pt.primes()[i], e);
    v *= t;
  }
  return ExtNat(v);
}

inline std::uint64_t taxi_distance(const TaxiPoint& a, const TaxiPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("taxi_distance: length mismatch");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return d;
}

struct QuasiIsometryReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// max of d_log / (K d_T) over pairs with d_T > 0, K = max log p_i
  double max_upper_ratio = 0.0;
  /// max of d_T / (n d_log) over pairs with d_log > 0
  double max_lower_ratio = 0.0;
  std::vector<std::pair<TaxiPoint, TaxiPoint>> violating_pairs;
};

/// Checks d_log <= K d_T and d_T <= n d_log for every sampled pair, where
/// d_log = log_b μ' and K = max log_b p_i. Both are decided exactly:
/// μ' <= p_max^d_T and b^d_T <= μ'^n.
inline QuasiIsometryReport verify_iota_quasi_isometry(const PrimeTuple& pt,
                                                       const std::vector<std::pair<TaxiPoint, TaxiPoint>>& samples) {
  QuasiIsometryReport r;
  const std::uint64_t pmax = pt.primes().back();
  const double b = static_cast<double>(pt.log_base());
  const double k = std::log(static_cast<double>(pmax)) / std::log(b);
  const auto n = static_cast<unsigned long>(pt.size());
  for (const auto& [m, mp] : samples) {
    ++r.samples;
    const std::uint64_t dt = taxi_distance(m, mp);
    const ExtNat mu = dlog_closed_form(pt, m, mp);
    Integer upper, lower, mun;
    mpz_ui_pow_ui(upper.get_mpz_t(), pmax, dt);
    mpz_ui_pow_ui(lower.get_mpz_t(), pt.log_base(), dt);
    mpz_pow_ui(mun.get_mpz_t(), mu.value().get_mpz_t(), n);
    const bool ok = mu.value() <= upper && lower <= mun;
    if (!ok) {
      ++r.violations;
      r.violating_pairs.emplace_back(m, mp);
    }
    const double dlog = mu.log(b);
    if (dt > 0) r.max_upper_ratio = std::max(r.max_upper_ratio, dlog / (k * static_cast<double>(dt)));
    if (dlog > 0) r.max_lower_ratio = std::max(r.max_lower_ratio, static_cast<double>(dt) / (static_cast<double>(n) * dlog));
  }
  return r;
}

/// Index streams W^1..W^n partitioning the naturals: the k-th element of
/// stream i is k*n + i (residue classes mod n).
struct ResidueStreams {
  std::size_t streams = 1;
  std::uint64_t element(std::size_t stream, std::uint64_t k) const { return k * streams + stream; }
};

/// φ(m̄) = ⋃_i {a^i_0, ..., a^i_{m_i}}
inline HammingPoint hamming_embed(const ResidueStreams& layout, const TaxiPoint& m) {
  if (m.size() != layout.streams) throw std::invalid_argument("hamming_embed: length mismatch");
  HammingPoint out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::uint64_t k = 0; k <= m[i]; ++k) out.insert(layout.element(i, k));
  return out;
}

/// H_F = ⊕_{i ∈ F} Z(p) e_i inside Z(p)^(N+1).
inline FAGSubgroup coordinate_subgroup(std::uint64_t p, std::uint64_t working_range, const std::set<std::uint64_t>& f) {
  FiniteAbelianGroup g(std::vector<std::int64_t>(working_range + 1, static_cast<std::int64_t>(p)));
  std::vector<Element> gens;
  for (auto i : f) {
    if (i > working_range) throw std::invalid_argument("coordinate subgroup: index outside the working range");
    Element e = g.zero();
    e[i] = 1;
    gens.push_back(e);
  }
  return fag_subgroup_from_elements(g, gens);
}

struct CorrespondenceCheck {
  ExtNat mu;
  ExtNat expected;
  bool holds() const { return mu == expected; }
};

/// μ' between H_F and H_F' computed on the realized subgroups, against
/// p^max(|F \ F'|, |F' \ F|).
inline CorrespondenceCheck elementary_abelian_correspondence(std::uint64_t p, const std::set<std::uint64_t>& f,
                                                             const std::set<std::uint64_t>& fp,
                                                             std::uint64_t working_range) {
  if (!is_prime(p)) throw std::invalid_argument("elementary abelian: p must be prime");
  auto a = coordinate_subgroup(p, working_range, f);
  auto b = coordinate_subgroup(p, working_range, fp);
  std::size_t only_f = 0, only_fp = 0;
  for (auto x : f) only_f += fp.count(x) ? 0 : 1;
  for (auto x : fp) only_fp += f.count(x) ? 0 : 1;
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, std::max(only_f, only_fp));
  return {fag_log_distance(a, b), ExtNat(e)};
}

struct CyclicTree {
  std::vector<FAGSubgroup> vertices;
  std::vector<std::int64_t> orders;
  std::vector<std::pair<std::size_t, std::size_t>> edges; // (smaller, larger)
  std::size_t root = 0;
  std::size_t height = 0;
  std::uint64_t prime = 0;
  std::size_t exponent_log = 0; // log_p(exponent)
  bool connected = false;
  bool is_tree() const { return connected && edges.size() + 1 == vertices.size(); }
};

/// The prime of a p-group, or 0 when several primes divide the order.
inline std::uint64_t group_prime(const FiniteAbelianGroup& g) {
  std::uint64_t p = 0;
  for (auto m : g.cyclic_orders()) {
    std::uint64_t q = 2;
    auto v = static_cast<std::uint64_t>(m);
    while (v % q) ++q;
    while (v % q == 0) v /= q;
    if (v != 1 || (p && p != q)) return 0;
    p = q;
  }
  return p;
}

/// Cyclic subgroups of a p-group with an edge whenever one contains the
/// other with index p.
inline CyclicTree cyclic_subgroup_tree(const FiniteAbelianGroup& g) {
  const std::uint64_t p = group_prime(g);
  if (p == 0) throw std::invalid_argument("cyclic tree: not a p-group");
  CyclicTree t;
  t.prime = p;
  t.vertices = cyclic_subgroups(g);
  for (const auto& v : t.vertices) t.orders.push_back(v.order());
  const std::size_t n = t.vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    if (t.orders[i] == 1) t.root = i;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t.orders[j] == t.orders[i] * static_cast<std::int64_t>(p) && fag_contains(t.vertices[j], t.vertices[i])) {
        t.edges.emplace_back(i, j);
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<std::size_t> depth(n, n + 1);
  std::queue<std::size_t> q;
  depth[t.root] = 0;
  q.push(t.root);
  std::size_t reached = 0;
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    ++reached;
    t.height = std::max(t.height, depth[x]);
    for (auto y : adj[x])
      if (depth[y] > n) {
        depth[y] = depth[x] + 1;
        q.push(y);
      }
  }
  t.connected = reached == n;
  for (auto e = static_cast<std::uint64_t>(g.exponent()); e > 1; e /= p) ++t.exponent_log;
  return t;
}

namespace detail {
inline std::set<std::uint64_t> residues(std::uint64_t modulus, const std::set<std::int64_t>& f) {
  std::set<std::uint64_t> out;
  const auto n = static_cast<std::int64_t>(modulus);
  for (auto x : f) out.insert(static_cast<std::uint64_t>(((x % n) + n) % n));
  return out;
}

/// The subgroup of Z/modulus generated by g lies inside `image`.
inline bool cyclic_inside(std::uint64_t modulus, std::uint64_t g, const std::set<std::uint64_t>& image) {
  for (std::uint64_t x = 0; x < modulus; x += g)
    if (!image.count(x)) return false;
  return true;
}
} // namespace detail

/// All k >= 1 with kZ ∈ exp B(nZ, F) in L(Z), for any finite F.
///
/// kZ ⊆ F' + nZ iff <gcd(k,n)> ⊆ q_n(F') in Z/nZ, and nZ ⊆ F' + kZ iff
/// <gcd(n,k)> ⊆ q_k(F') in Z/kZ, with F' = F ∪ −F ∪ {0}. The second
/// subgroup has k/gcd(n,k) elements inside a set of at most |F'| residues,
/// so k <= gcd(n,k)|F'| <= n|F'| bounds the search. k = 0 never qualifies
/// since nZ is infinite.
inline std::vector<std::uint64_t> lz_exp_ball_for_radius(std::uint64_t n, const std::set<std::int64_t>& f) {
  if (n < 1) throw std::invalid_argument("lz_exp_ball: n must be positive");
  std::set<std::int64_t> sym{0};
  for (auto x : f) {
    sym.insert(x);
    sym.insert(-x);
  }
  const auto image_n = detail::residues(n, sym);
  const std::uint64_t bound = n * sym.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    const std::uint64_t g = std::gcd(k, n);
    if (!detail::cyclic_inside(n, g, image_n)) continue;
    if (!detail::cyclic_inside(k, g, detail::residues(k, sym))) continue;
    out.push_back(k);
  }
  return out;
}

/// F = [−m, m] ∩ Z
inline std::vector<std::uint64_t> lz_exp_ball(std::uint64_t n, std::uint64_t m) {
  std::set<std::int64_t> f;
  for (std::int64_t x = 0; x <= static_cast<std::int64_t>(m); ++x) f.insert(x);
  return lz_exp_ball_for_radius(n, f);
}

/// All m >= 1 with max(lcm(n,m)/n, lcm(n,m)/m) <= K; such m lie in [n/K, nK].
inline std::vector<std::uint64_t> lz_log_ball(std::uint64_t n, const ExtNat& k) {
  if (n < 1) throw std::invalid_argument("lz_log_ball: n must be positive");
  if (k.is_infinite()) throw std::invalid_argument("lz_log_ball: unbounded radius (the component is infinite)");
  if (!k.value().fits_ulong_p()) throw std::invalid_argument("lz_log_ball: radius too large");
  const std::uint64_t bound = k.value().get_ui();
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = (n + bound - 1) / bound; m <= n * bound; ++m) {
    if (m == 0) continue;
    const std::uint64_t l = std::lcm(n, m);
    if (std::max(l / n, l / m) <= bound) out.push_back(m);
  }
  return out;
}

/// Finite levels j with p^|n−j| <= K.
inline std::vector<PruferSubgroup> prufer_ball(std::uint64_t p, std::uint64_t level, const ExtNat& k) {
  if (!is_prime(p)) throw std::invalid_argument("prufer_ball: p must be prime");
  if (k.is_infinite()) throw std::invalid_argument("prufer_ball: unbounded radius (the component is infinite)");
  std::uint64_t reach = 0;
  Integer power = p;
  while (power <= k.value()) {
    ++reach;
    power *= p;
  }
  std::vector<PruferSubgroup> out;
  for (std::uint64_t j = level > reach ? level - reach : 0; j <= level + reach; ++j)
    out.push_back(PruferSubgroup::finite(p, j));
  return out;
}

} // namespace ballean
