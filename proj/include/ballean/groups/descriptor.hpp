#pragma once

// Structural descriptors of abelian groups and the classifications that can
// be read off them: isolated points of the subgroup hyperballeans, the
// asymptotic dimension of the logarithmic one, and component counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ballean/groups/prufer.hpp"

namespace ballean {

/// Symbolic cardinal: a natural number, omega, or 2^k.
class CardinalToken {
public:
  enum class Kind { Finite, Omega, TwoToThe };

  CardinalToken() = default;
  static CardinalToken finite(std::uint64_t n) { return CardinalToken(Kind::Finite, n, nullptr); }
  static CardinalToken omega() { return CardinalToken(Kind::Omega, 0, nullptr); }

  /// 2^k; finite exponents collapse to the finite value.
  static CardinalToken two_to_the(const CardinalToken& k) {
    if (k.is_finite()) {
      if (k.n_ >= 63) throw std::invalid_argument("cardinal: 2^n too large for a finite token");
      return finite(std::uint64_t{1} << k.n_);
    }
    return CardinalToken(Kind::TwoToThe, 0, std::make_shared<const CardinalToken>(k));
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_zero() const { return is_finite() && n_ == 0; }
  bool is_infinite() const { return !is_finite(); }
  std::uint64_t value() const {
    if (!is_finite()) throw std::logic_error("cardinal: not finite");
    return n_;
  }
  const CardinalToken& exponent() const { return *exp_; }

  std::string to_string() const {
    switch (kind_) {
    case Kind::Finite: return std::to_string(n_);
    case Kind::Omega: return "omega";
    case Kind::TwoToThe: {
      std::string e = exp_->to_string();
      return exp_->kind() == Kind::TwoToThe ? "2^(" + e + ")" : "2^" + e;
    }
    }
    return {};
  }

  /// Accepts "n", "omega", "w", "c" (= 2^omega), "2^X" and "2^(X)".
  static CardinalToken parse(std::string s) {
    if (s.empty()) throw std::invalid_argument("cardinal: empty token");
    if (s == "omega" || s == "w" || s == "ω" || s == "aleph0") return omega();
    if (s == "c") return two_to_the(omega());
    if (s.rfind("2^", 0) == 0) {
      std::string rest = s.substr(2);
      if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
      return two_to_the(parse(rest));
    }
    for (char c : s)
      if (c < '0' || c > '9') throw std::invalid_argument("cardinal: malformed token '" + s + "'");
    return finite(std::stoull(s));
  }

  friend bool operator==(const CardinalToken& a, const CardinalToken& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::Finite) return a.n_ == b.n_;
    if (a.kind_ == Kind::Omega) return true;
    return *a.exp_ == *b.exp_;
  }

private:
  CardinalToken(Kind k, std::uint64_t n, std::shared_ptr<const CardinalToken> e)
      : kind_(k), n_(n), exp_(std::move(e)) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t n_ = 0;
  std::shared_ptr<const CardinalToken> exp_;
};

/// Outcome of comparing two cardinal tokens.
struct CardinalComparison {
  enum class Order { Less, Equal, Greater, Undetermined } order = Order::Undetermined;
  bool assumes_gch = false;
};

/// Finite < omega < 2^k holds outright. Strict comparisons between 2^a and
/// 2^b with a < b need GCH and are flagged.
inline CardinalComparison compare(const CardinalToken& a, const CardinalToken& b) {
  using K = CardinalToken::Kind;
  using O = CardinalComparison::Order;
  auto level = [](const CardinalToken& t) { return t.kind() == K::Finite ? 0 : (t.kind() == K::Omega ? 1 : 2); };
  if (level(a) != level(b)) return {level(a) < level(b) ? O::Less : O::Greater, false};
  if (a.kind() == K::Finite)
    return {a.value() < b.value() ? O::Less : (a.value() > b.value() ? O::Greater : O::Equal), false};
  if (a.kind() == K::Omega) return {O::Equal, false};
  auto inner = compare(a.exponent(), b.exponent());
  if (inner.order == O::Equal) return inner;
  if (inner.order == O::Undetermined) return inner;
  return {inner.order, true};
}

/// The p-primary part of the reduced torsion subgroup.
struct ReducedPrimaryPart {
  enum class Kind { Finite, LayerlyFinite, NotLayerlyFinite } kind = Kind::Finite;
  std::uint64_t order = 1; // meaningful for Kind::Finite

  bool is_trivial() const { return kind == Kind::Finite && order == 1; }
};

/// Structure of an abelian group G = d(G) ⊕ R with d(G) divisible and R
/// reduced.
///
/// - `free_rank`: torsion-free rank of the reduced part R.
/// - `q_rank`: r0(d(G)), the number of copies of Q in d(G).
/// - `prufer`: multiplicity of Z(p^inf) in d(G), per prime.
/// - `prufer_tail`: d(G) also has Prüfer summands for infinitely many
///   further primes.
/// - `reduced_torsion`: p-primary parts of t(R).
/// - `reduced_tail`: t(R) also has nontrivial finite p-parts for infinitely
///   many further primes.
struct GroupDescriptor {
  CardinalToken free_rank;
  CardinalToken q_rank;
  std::map<std::uint64_t, CardinalToken> prufer;
  bool prufer_tail = false;
  std::map<std::uint64_t, ReducedPrimaryPart> reduced_torsion;
  bool reduced_tail = false;

  bool is_torsion() const { return free_rank.is_zero() && q_rank.is_zero(); }

  /// Sum of the Prüfer multiplicities (finite primes only).
  std::optional<std::uint64_t> total_prufer_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [p, t] : prufer) {
      if (!t.is_finite()) return std::nullopt;
      total += t.value();
    }
    return total;
  }

  /// t(G) <= d(G), i.e. the reduced part is torsion-free.
  bool torsion_inside_divisible() const {
    if (reduced_tail) return false;
    for (const auto& [p, part] : reduced_torsion)
      if (!part.is_trivial()) return false;
    return true;
  }

  void validate() const {
    for (const auto& [p, t] : prufer)
      if (!is_prime(p)) throw std::invalid_argument("descriptor: prufer key " + std::to_string(p) + " is not prime");
    for (const auto& [p, part] : reduced_torsion) {
      if (!is_prime(p)) throw std::invalid_argument("descriptor: reduced key " + std::to_string(p) + " is not prime");
      if (part.kind == ReducedPrimaryPart::Kind::Finite) {
        std::uint64_t o = part.order;
        if (o == 0) throw std::invalid_argument("descriptor: order must be positive");
        while (o % p == 0) o /= p;
        if (o != 1)
          throw std::invalid_argument("descriptor: order " + std::to_string(part.order) + " is not a power of " +
                                      std::to_string(p));
      }
    }
  }

  static GroupDescriptor integers_power(std::uint64_t n) {
    GroupDescriptor d;
    d.free_rank = CardinalToken::finite(n);
    return d;
  }
};

struct IsoPointsReport {
  CardinalToken size;
  std::string witness;
  /// Recovering r0(d(G)) from an uncountable size uses GCH.
  bool rank_recovery_assumes_gch = false;
};

inline IsoPointsReport iso_points_classify(const GroupDescriptor& d) {
  d.validate();
  if (!d.torsion_inside_divisible()) return {CardinalToken::finite(0), "empty: t(G) is not contained in d(G)", false};
  const auto& r = d.q_rank;
  if (r.is_finite() && r.value() == 0) {
    bool divisible_trivial = d.prufer.empty() && !d.prufer_tail;
    for (const auto& [p, t] : d.prufer)
      if (!t.is_zero()) divisible_trivial = false;
    return {CardinalToken::finite(1), divisible_trivial ? "{{0}}" : "{d(G)}", false};
  }
  if (r.is_finite() && r.value() == 1) return {CardinalToken::finite(2), "{t(d(G)), d(G)}", false};
  if (r.is_finite()) return {CardinalToken::omega(), "t(d(G)) + D for the divisible subgroups D of Q^" + r.to_string(), false};
  return {CardinalToken::two_to_the(r), "t(d(G)) + D for the divisible subgroups D of Q^(" + r.to_string() + ")", true};
}

/// Asymptotic dimension outcome; Unknown carries a proven lower bound.
struct AsdimReport {
  enum class Kind { Zero, Finite, Infinite, Unknown } kind = Kind::Zero;
  std::uint64_t n = 0; // dimension for Finite, lower bound for Unknown
  std::string reason;

  static AsdimReport zero(std::string why) { return {Kind::Zero, 0, std::move(why)}; }
  static AsdimReport finite(std::uint64_t n, std::string why) { return {Kind::Finite, n, std::move(why)}; }
  static AsdimReport infinite(std::string why) { return {Kind::Infinite, 0, std::move(why)}; }
  static AsdimReport unknown(std::uint64_t lower, std::string why) { return {Kind::Unknown, lower, std::move(why)}; }

  friend bool operator==(const AsdimReport& a, const AsdimReport& b) { return a.kind == b.kind && a.n == b.n; }
};

/// asdim of the logarithmic subgroup hyperballean.
///
/// Infinite for non-torsion groups, when some G[p] is infinite, or when
/// infinitely many Prüfer primes occur. Zero for torsion groups with finite
/// Sylow subgroups. Finite(n) only for a sum of Prüfer groups over n distinct
/// primes plus a finite group. Everything else (a repeated Prüfer prime, or
/// a layerly finite infinite tail) is Unknown with the best proven bound.
inline AsdimReport asdim_classify(const GroupDescriptor& d) {
  d.validate();
  using RK = ReducedPrimaryPart::Kind;
  if (!d.is_torsion()) return AsdimReport::infinite("non-torsion: contains a copy of Z");
  for (const auto& [p, t] : d.prufer)
    if (t.is_infinite()) return AsdimReport::infinite("G[" + std::to_string(p) + "] is infinite");
  for (const auto& [p, part] : d.reduced_torsion)
    if (part.kind == RK::NotLayerlyFinite) return AsdimReport::infinite("G[" + std::to_string(p) + "] is infinite");
  if (d.prufer_tail) return AsdimReport::infinite("Prüfer summands for infinitely many primes");

  std::uint64_t distinct = 0, total = 0;
  bool repeated = false;
  for (const auto& [p, t] : d.prufer) {
    if (t.is_zero()) continue;
    ++distinct;
    total += t.value();
    if (t.value() >= 2) repeated = true;
  }
  bool layerly_infinite_part = false;
  for (const auto& [p, part] : d.reduced_torsion)
    if (part.kind == RK::LayerlyFinite) layerly_infinite_part = true;

  if (distinct == 0 && !layerly_infinite_part) return AsdimReport::zero("torsion with every Sylow subgroup finite");
  if (repeated)
    return AsdimReport::unknown(total, "repeated Prüfer prime: lower bound from the product of proper-subgroup chains");
  if (layerly_infinite_part || d.reduced_tail)
    return AsdimReport::unknown(std::max<std::uint64_t>(total, 1), "outside the distinct-prime Prüfer shape");
  return AsdimReport::finite(distinct, "Prüfer groups over distinct primes plus a finite group");
}

/// Named families with a closed form for the connected components of L(G).
struct GroupFamily {
  enum class Kind { IntegersPower, Prufer, Finite, ExpFinitary } kind = Kind::IntegersPower;
  std::uint64_t n = 1;     // rank for IntegersPower, prime for Prufer
  std::uint64_t order = 1; // for Finite
  CardinalToken cardinality; // |G| for ExpFinitary
};

struct ComponentCensus {
  CardinalToken count;
  /// Explicit components when a closed form is known, described in words.
  std::vector<std::string> components;
};

inline ComponentCensus component_census(const GroupFamily& f) {
  using K = GroupFamily::Kind;
  switch (f.kind) {
  case K::IntegersPower:
    if (f.n == 0) return {CardinalToken::finite(1), {"{{0}}"}};
    if (f.n == 1)
      return {CardinalToken::finite(2), {"{{0}} (singleton)", "{nZ : n >= 1} (infinite, commensurable with Z)"}};
    return {CardinalToken::omega(), {"{{0}} (singleton)", "commensurability class of Z^" + std::to_string(f.n),
                                     "countably many classes indexed by pure subgroups of each rank 0 < k < " +
                                         std::to_string(f.n)}};
  case K::Prufer:
    if (!is_prime(f.n)) throw std::invalid_argument("component: prufer family needs a prime");
    return {CardinalToken::finite(2),
            {"{G} (singleton)", "{H_n : n >= 0} (infinite, the finite subgroups)"}};
  case K::Finite:
    return {CardinalToken::finite(1), {"L(G) (bounded, all subgroups commensurable)"}};
  case K::ExpFinitary:
    if (f.cardinality.is_finite()) {
      // finite G: exp B_G is bounded
      return {CardinalToken::finite(1), {"exp G (bounded)"}};
    }
    return {CardinalToken::two_to_the(f.cardinality), {}};
  }
  throw std::invalid_argument("no closed form implemented");
}

/// Recognizes descriptors whose component structure has a closed form.
inline GroupFamily family_of(const GroupDescriptor& d) {
  d.validate();
  bool no_divisible = d.q_rank.is_zero() && !d.prufer_tail;
  std::uint64_t prufer_primes = 0, prime = 0;
  bool prufer_single = true;
  for (const auto& [p, t] : d.prufer) {
    if (t.is_zero()) continue;
    ++prufer_primes;
    prime = p;
    if (!(t.is_finite() && t.value() == 1)) prufer_single = false;
    no_divisible = false;
  }
  bool no_reduced_torsion = d.torsion_inside_divisible();
  if (no_divisible && no_reduced_torsion && d.free_rank.is_finite())
    return {GroupFamily::Kind::IntegersPower, d.free_rank.value(), 1, {}};
  if (!d.prufer_tail && d.q_rank.is_zero() && d.free_rank.is_zero() && no_reduced_torsion && prufer_primes == 1 &&
      prufer_single)
    return {GroupFamily::Kind::Prufer, prime, 1, {}};
  if (no_divisible && d.free_rank.is_zero() && !d.reduced_tail) {
    std::uint64_t order = 1;
    bool finite = true;
    for (const auto& [p, part] : d.reduced_torsion) {
      if (part.kind != ReducedPrimaryPart::Kind::Finite) finite = false;
      else order *= part.order;
    }
    if (finite) return {GroupFamily::Kind::Finite, 0, order, {}};
  }
  throw std::invalid_argument("no closed form implemented");
}

} // namespace ballean
