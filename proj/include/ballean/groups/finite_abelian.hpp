#pragma once

// Finite abelian groups Z(m1) + ... + Z(mk) and their subgroups, represented
// by intermediate lattices diag(m) Z^k ⊆ L ⊆ Z^k.

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballean/lattice.hpp"

namespace ballean {

using Element = std::vector<std::int64_t>;

class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;

  /// Cyclic factors need not form a divisibility chain; each must be >= 2.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
      : orders_(std::move(cyclic_orders)) {
    for (auto m : orders_)
      if (m < 2) throw std::invalid_argument("finite abelian group: cyclic factor order must be >= 2");
    order_ = 1;
    for (auto m : orders_) {
      if (order_ > (std::int64_t{1} << 40) / m) throw std::invalid_argument("finite abelian group: order too large");
      order_ *= m;
    }
  }

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t order() const { return order_; }

  std::int64_t exponent() const {
    std::int64_t e = 1;
    for (auto m : orders_) e = std::lcm(e, m);
    return e;
  }

  bool is_invariant_factor_form() const {
    for (std::size_t i = 0; i + 1 < orders_.size(); ++i)
      if (orders_[i + 1] % orders_[i] != 0) return false;
    return true;
  }

  Element zero() const { return Element(orders_.size(), 0); }

  bool is_element(const Element& x) const {
    if (x.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || x[i] >= orders_[i]) return false;
    return true;
  }

  void require_element(const Element& x) const {
    if (!is_element(x)) throw std::invalid_argument("coordinate out of range");
  }

  Element add(const Element& a, const Element& b) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
  }

  Element neg(const Element& a) const {
    Element c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = (orders_[i] - a[i]) % orders_[i];
    return c;
  }

  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  /// Reduce an arbitrary integer tuple into canonical coordinates.
  Element reduce(const std::vector<std::int64_t>& v) const {
    Element c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = ((v[i] % orders_[i]) + orders_[i]) % orders_[i];
    return c;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(order_));
    Element x = zero();
    for (std::int64_t n = 0; n < order_; ++n) {
      out.push_back(x);
      for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < orders_[i]) break;
        x[i] = 0;
      }
    }
    return out;
  }

  /// diag(m1, ..., mk): the kernel of Z^k -> G.
  IntMatrix relation_matrix() const {
    IntMatrix d(orders_.size(), orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) d(i, i) = orders_[i];
    return d;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.orders_ == b.orders_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? "+" : "") << "Z(" << orders_[i] << ")";
    return orders_.empty() ? "0" : os.str();
  }

private:
  std::vector<std::int64_t> orders_;
  std::int64_t order_ = 1;
};

class FAGSubgroup {
public:
  FAGSubgroup(FiniteAbelianGroup parent, Lattice lift) : parent_(std::move(parent)), lift_(std::move(lift)) {}

  const FiniteAbelianGroup& parent() const { return parent_; }
  const Lattice& lift() const { return lift_; }

  std::int64_t order() const {
    ExtNat idx = index_in(lift_, Lattice::whole(parent_.rank()));
    return parent_.order() / idx.value().get_si();
  }

  bool contains(const Element& x) const {
    IntVector v(x.begin(), x.end());
    return member(v, lift_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (const auto& x : parent_.elements())
      if (contains(x)) out.push_back(x);
    return out;
  }

  /// Generators read off the canonical lift, reduced into coordinates and
  /// with zero elements dropped. Regenerates the same subgroup.
  std::vector<Element> canonical_generators() const {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < lift_.rank(); ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < lift_.ambient_dim(); ++j) row.push_back(lift_.basis()(i, j).get_si());
      Element e = parent_.reduce(row);
      if (e != parent_.zero()) gens.push_back(e);
    }
    return gens;
  }

  friend bool operator==(const FAGSubgroup& a, const FAGSubgroup& b) {
    return a.parent_ == b.parent_ && a.lift_ == b.lift_;
  }

private:
  FiniteAbelianGroup parent_;
  Lattice lift_;
};

inline FAGSubgroup fag_subgroup_from_elements(const FiniteAbelianGroup& g, const std::vector<Element>& gens) {
  for (const auto& x : gens) g.require_element(x);
  IntMatrix m = g.relation_matrix();
  IntMatrix extra(gens.size(), g.rank());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) extra(i, j) = gens[i][j];
  return FAGSubgroup(g, Lattice::from_generators(g.rank(), extra.stacked(m)));
}

namespace detail {
inline void require_same_parent(const FAGSubgroup& a, const FAGSubgroup& b) {
  if (!(a.parent() == b.parent())) throw std::invalid_argument("subgroups of different groups");
}
} // namespace detail

inline FAGSubgroup fag_intersection(const FAGSubgroup& a, const FAGSubgroup& b) {
  detail::require_same_parent(a, b);
  return FAGSubgroup(a.parent(), lattice_intersection(a.lift(), b.lift()));
}

inline FAGSubgroup fag_sum(const FAGSubgroup& a, const FAGSubgroup& b) {
  detail::require_same_parent(a, b);
  return FAGSubgroup(a.parent(), lattice_sum(a.lift(), b.lift()));
}

inline bool fag_contains(const FAGSubgroup& big, const FAGSubgroup& small) {
  detail::require_same_parent(big, small);
  return is_sublattice(small.lift(), big.lift());
}

/// max(|A : A∩B|, |B : A∩B|), always finite.
inline ExtNat fag_log_distance(const FAGSubgroup& a, const FAGSubgroup& b) {
  detail::require_same_parent(a, b);
  return log_subgroup_distance(a.lift(), b.lift());
}

namespace detail {
struct LatticeKeyLess {
  bool operator()(const Lattice& a, const Lattice& b) const {
    const auto& x = a.basis();
    const auto& y = b.basis();
    if (x.rows() != y.rows()) return x.rows() < y.rows();
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) {
        int c = cmp(x(i, j), y(i, j));
        if (c) return c < 0;
      }
    return false;
  }
};
} // namespace detail

/// Every cyclic subgroup <g>, one representative each.
inline std::vector<FAGSubgroup> cyclic_subgroups(const FiniteAbelianGroup& g) {
  std::map<Lattice, FAGSubgroup, detail::LatticeKeyLess> seen;
  for (const auto& x : g.elements()) {
    auto s = fag_subgroup_from_elements(g, {x});
    seen.emplace(s.lift(), s);
  }
  std::vector<FAGSubgroup> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

/// All subgroups, built by closing {0} under joins with cyclic subgroups.
inline std::vector<FAGSubgroup> all_subgroups(const FiniteAbelianGroup& g) {
  auto cyclic = cyclic_subgroups(g);
  std::map<Lattice, FAGSubgroup, detail::LatticeKeyLess> seen;
  std::vector<FAGSubgroup> frontier;
  auto trivial = fag_subgroup_from_elements(g, {});
  seen.emplace(trivial.lift(), trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<FAGSubgroup> next;
    for (const auto& s : frontier)
      for (const auto& c : cyclic) {
        auto j = fag_sum(s, c);
        if (seen.emplace(j.lift(), j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<FAGSubgroup> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

} // namespace ballean
