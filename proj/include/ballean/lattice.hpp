#pragma once

// Subgroups of Z^n held as canonical row-HNF lattices.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "ballean/exactmat.hpp"
#include "ballean/extnat.hpp"

namespace ballean {

class Lattice {
public:
  /// The trivial subgroup {0} of Z^n.
  explicit Lattice(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Integer row span of `gens` inside Z^n.
  static Lattice from_generators(std::size_t ambient_dim, const IntMatrix& gens) {
    if (gens.rows() > 0 && gens.cols() != ambient_dim)
      throw std::invalid_argument("lattice: generator columns do not match ambient dimension");
    Lattice l(ambient_dim);
    if (gens.rows() > 0) l.basis_ = row_hnf(gens);
    return l;
  }

  static Lattice whole(std::size_t ambient_dim) {
    Lattice l(ambient_dim);
    l.basis_ = IntMatrix::identity(ambient_dim);
    return l;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  bool is_trivial() const { return basis_.rows() == 0; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  IntMatrix basis_;
};

inline Lattice lattice_from_generators(std::size_t ambient_dim, const IntMatrix& gens) {
  return Lattice::from_generators(ambient_dim, gens);
}

namespace detail {
inline void require_same_ambient(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice: ambient dimension mismatch");
}
} // namespace detail

inline bool member(const IntVector& x, const Lattice& l) {
  if (x.size() != l.ambient_dim()) throw std::invalid_argument("member: dimension mismatch");
  if (l.is_trivial()) {
    for (const auto& v : x)
      if (v != 0) return false;
    return true;
  }
  return solve_integer(l.basis(), x).has_value();
}

/// a ⊆ b
inline bool is_sublattice(const Lattice& a, const Lattice& b) {
  detail::require_same_ambient(a, b);
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!member(a.basis().row(i), b)) return false;
  return true;
}

inline Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  detail::require_same_ambient(a, b);
  return Lattice::from_generators(a.ambient_dim(), a.basis().stacked(b.basis()));
}

/// a ∩ b through the integer left kernel of the stacked bases: every relation
/// u*A + v*B = 0 yields the common point u*A.
inline Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  detail::require_same_ambient(a, b);
  if (a.is_trivial() || b.is_trivial()) return Lattice(a.ambient_dim());
  IntMatrix stacked = a.basis().stacked(b.basis());
  IntMatrix kernel = left_kernel(stacked);
  IntMatrix points(kernel.rows(), a.ambient_dim());
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    IntVector u(a.rank());
    for (std::size_t i = 0; i < a.rank(); ++i) u[i] = kernel(k, i);
    IntVector x = row_times(u, a.basis());
    for (std::size_t j = 0; j < x.size(); ++j) points(k, j) = x[j];
  }
  return Lattice::from_generators(a.ambient_dim(), points);
}

/// |b : a| for a ⊆ b. Infinite exactly when rank(a) < rank(b).
inline ExtNat index_in(const Lattice& a, const Lattice& b) {
  if (!is_sublattice(a, b)) throw std::invalid_argument("not a subgroup");
  if (a.rank() < b.rank()) return ExtNat::infinity();
  if (a.rank() == 0) return ExtNat(1);
  // coordinates of a's basis in b's basis
  IntMatrix coords(a.rank(), b.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto c = solve_integer(b.basis(), a.basis().row(i));
    for (std::size_t j = 0; j < b.rank(); ++j) coords(i, j) = (*c)[j];
  }
  Integer product = 1;
  for (const auto& d : snf(coords)) product *= d;
  return ExtNat(product);
}

/// sat(H) = {x in Z^n : m x in H for some m != 0}: the vectors orthogonal to
/// the integer annihilator of H.
inline Lattice saturation(const Lattice& h) {
  const std::size_t n = h.ambient_dim();
  if (h.is_trivial()) return h;
  if (h.rank() == n) return Lattice::whole(n);
  // annihilator: columns v with H v = 0, i.e. left kernel of H^T
  IntMatrix annihilator = left_kernel(h.basis().transposed());
  // sat(H) = {x : x * annihilator^T = 0}
  IntMatrix sat = left_kernel(annihilator.transposed());
  return Lattice::from_generators(n, sat);
}

inline bool commensurable(const Lattice& a, const Lattice& b) {
  detail::require_same_ambient(a, b);
  Lattice c = lattice_intersection(a, b);
  return c.rank() == a.rank() && c.rank() == b.rank();
}

/// max(|A : A∩B|, |B : A∩B|); infinite when A and B are not commensurable.
/// The displayed distance is the logarithm of this value.
inline ExtNat log_subgroup_distance(const Lattice& a, const Lattice& b) {
  detail::require_same_ambient(a, b);
  Lattice c = lattice_intersection(a, b);
  return max(index_in(c, a), index_in(c, b));
}

} // namespace ballean
