#pragma once

// Slow, direct reference computations used to cross-check the library.
// Nothing here calls into the lattice or set-cover code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>; // rows are generators

/// Determinant by cofactor expansion (n <= 4).
inline std::int64_t det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::int64_t d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

/// Classical adjugate: m * adj(m) = det(m) I.
inline Mat adjugate(const Mat& m) {
  const std::size_t n = m.size();
  Mat adj(n, Vec(n, 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        Vec row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(m[r][k]);
        minor.push_back(row);
      }
      adj[j][i] = ((i + j) % 2 ? -1 : 1) * det(minor);
    }
  return adj;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// |A : A ∩ B| for full-rank square generator matrices, by counting the
/// residues of A modulo B. x lies in B exactly when x adj(B) ≡ 0 mod det B,
/// so the key x ↦ x adj(B) mod |det B| identifies cosets of B; the cosets met
/// by A form the subgroup generated by the keys of A's rows.
inline std::int64_t index_by_residues(const Mat& a, const Mat& b) {
  const std::int64_t d = std::llabs(det(b));
  const Mat adj = adjugate(b);
  const std::size_t n = b.size();
  auto key = [&](const Vec& x) {
    Vec k(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i) s += x[i] * adj[i][j];
      k[j] = mod(s, d);
    }
    return k;
  };
  std::vector<Vec> gens;
  for (const auto& row : a) gens.push_back(key(row));
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec w(n);
        for (std::size_t j = 0; j < n; ++j) w[j] = mod(v[j] + g[j], d);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

/// Rank over Q by fraction-free elimination, dividing rows by their content
/// to keep entries small.
inline std::size_t rational_rank(Mat m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::int64_t f = m[r][c], g = m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * g - m[rank][k] * f;
      std::int64_t h = 0;
      for (auto x : m[r]) h = std::gcd(h, std::llabs(x));
      if (h > 1)
        for (auto& x : m[r]) x /= h;
    }
    ++rank;
  }
  return rank;
}

/// Same Q-span, i.e. both indices finite.
inline bool same_rational_span(const Mat& a, const Mat& b) {
  Mat ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const auto r = rational_rank(ab);
  return r == rational_rank(a) && r == rational_rank(b);
}

/// Elements of a finite abelian group Z(m1)+...+Z(mk), encoded as mixed-radix
/// integers.
struct Group {
  std::vector<std::int64_t> orders;

  std::int64_t size() const {
    std::int64_t s = 1;
    for (auto m : orders) s *= m;
    return s;
  }
  Vec decode(std::int64_t code) const {
    Vec v(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
      v[i] = code % orders[i];
      code /= orders[i];
    }
    return v;
  }
  std::int64_t encode(const Vec& v) const {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) c = c * orders[i] + mod(v[i], orders[i]);
    return c;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    Vec x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return encode(x);
  }
  std::int64_t neg(std::int64_t a) const {
    Vec x = decode(a);
    for (auto& c : x) c = -c;
    return encode(x);
  }
};

/// Closure of a generating set under addition.
inline std::set<std::int64_t> generated(const Group& g, const std::vector<std::int64_t>& gens) {
  std::set<std::int64_t> s{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto x : frontier)
      for (auto y : gens) {
        auto z = g.add(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    frontier = std::move(next);
  }
  return s;
}

/// All subgroups, grown from {0} by adjoining one element at a time.
inline std::vector<std::set<std::int64_t>> all_subgroups(const Group& g) {
  std::set<std::set<std::int64_t>> found;
  std::vector<std::set<std::int64_t>> frontier{{0}};
  found.insert({0});
  while (!frontier.empty()) {
    std::vector<std::set<std::int64_t>> next;
    for (const auto& s : frontier)
      for (std::int64_t x = 0; x < g.size(); ++x) {
        if (s.count(x)) continue;
        std::vector<std::int64_t> gens(s.begin(), s.end());
        gens.push_back(x);
        auto t = generated(g, gens);
        if (found.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::set<std::int64_t> intersect(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  std::set<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// max(|A : A∩B|, |B : A∩B|) by counting elements.
inline std::int64_t index_distance(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  const auto c = static_cast<std::int64_t>(intersect(a, b).size());
  return std::max(static_cast<std::int64_t>(a.size()) / c, static_cast<std::int64_t>(b.size()) / c);
}

/// Smallest F with 0 ∈ F and F + from ⊇ to, by trying every candidate set
/// in order of size. Exponential; only for tiny inputs.
inline std::size_t min_directed_cover(const Group& g, const std::set<std::int64_t>& from, const std::set<std::int64_t>& to) {
  std::set<std::int64_t> cand;
  for (auto z : to)
    for (auto y : from) cand.insert(g.add(z, g.neg(y)));
  cand.erase(0);
  std::vector<std::int64_t> pool(cand.begin(), cand.end());
  auto covers = [&](const std::vector<std::int64_t>& f) {
    for (auto z : to) {
      bool hit = false;
      for (auto s : f)
        for (auto y : from)
          if (g.add(s, y) == z) hit = true;
      if (!hit) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k <= pool.size(); ++k) {
    std::vector<bool> pick(pool.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::int64_t> f{0};
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) f.push_back(pool[i]);
      if (covers(f)) return k + 1;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return static_cast<std::size_t>(-1);
}

/// kZ ∈ exp B(nZ, [-m,m]) checked on explicit integer sets inside
/// [-window, window].
inline bool lz_member_in_window(std::int64_t n, std::int64_t k, std::int64_t m, std::int64_t window) {
  const std::int64_t reach = window + m + std::max(n, k);
  auto thickened = [&](std::int64_t step) {
    std::vector<char> mark(static_cast<std::size_t>(2 * reach + 1), 0);
    for (std::int64_t x = -(reach / step) * step; x <= reach; x += step)
      for (std::int64_t f = -m; f <= m; ++f)
        if (x + f >= -reach && x + f <= reach) mark[static_cast<std::size_t>(x + f + reach)] = 1;
    return mark;
  };
  auto multiples_inside = [&](std::int64_t step, const std::vector<char>& mark) {
    for (std::int64_t x = 0; x <= window; x += step)
      if (!mark[static_cast<std::size_t>(x + reach)] || !mark[static_cast<std::size_t>(-x + reach)]) return false;
    return true;
  };
  return multiples_inside(k, thickened(n)) && multiples_inside(n, thickened(k));
}

} // namespace oracle
