#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "ballean/extnat.hpp"

namespace ballean {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// A subgroup of the Prüfer group Z(p^inf): either H_n (order p^n) or the
/// whole group.
struct PruferSubgroup {
  std::uint64_t prime = 2;
  std::optional<std::uint64_t> level; // nullopt: the whole group

  static PruferSubgroup finite(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw std::invalid_argument("prufer: " + std::to_string(p) + " is not prime");
    return {p, n};
  }
  static PruferSubgroup whole(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("prufer: " + std::to_string(p) + " is not prime");
    return {p, std::nullopt};
  }

  bool is_whole() const { return !level.has_value(); }

  std::string to_string() const {
    return (level ? "H_" + std::to_string(*level) : std::string("whole")) + "@" + std::to_string(prime);
  }

  friend bool operator==(const PruferSubgroup&, const PruferSubgroup&) = default;
};

/// p^|i-j| between finite levels, infinity between the whole group and a
/// finite level.
inline ExtNat prufer_log_distance(const PruferSubgroup& a, const PruferSubgroup& b) {
  if (a.prime != b.prime) throw std::invalid_argument("prufer: prime mismatch");
  if (a.is_whole() || b.is_whole()) return a.is_whole() == b.is_whole() ? ExtNat(1) : ExtNat::infinity();
  std::uint64_t d = *a.level > *b.level ? *a.level - *b.level : *b.level - *a.level;
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), a.prime, d);
  return ExtNat(v);
}

} // namespace ballean
