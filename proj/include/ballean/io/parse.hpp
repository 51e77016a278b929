#pragma once

// Text syntax for groups, subgroups and finite subsets.
//
//   groups:    Z   Z^3   Z(12)   Z(2)+Z(4)   Z(2^inf)
//   subgroups: 6Z   span[(2,4),(0,3)]   gen{4}   gen{(1,0),(0,2)}   H_3@2   whole@2
//   subsets:   {0,1,11}   {(0,1),(1,1)}

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ballean/groups/finite_abelian.hpp"
#include "ballean/groups/prufer.hpp"
#include "ballean/lattice.hpp"

namespace ballean::io {

/// Malformed text, as opposed to well-formed text that names something
/// invalid in context (std::invalid_argument).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FreeAbelian {
  std::size_t rank = 1;
  friend bool operator==(const FreeAbelian&, const FreeAbelian&) = default;
};

struct PruferGroup {
  std::uint64_t prime = 2;
  friend bool operator==(const PruferGroup&, const PruferGroup&) = default;
};

using GroupContext = std::variant<FreeAbelian, FiniteAbelianGroup, PruferGroup>;
using SubgroupValue = std::variant<Lattice, FAGSubgroup, PruferSubgroup>;

namespace detail {

inline std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline std::uint64_t parse_natural(const std::string& s, const std::string& what) {
  if (!all_digits(s)) throw ParseError("expected a natural number for " + what + ", got '" + s + "'");
  if (s.size() > 18) throw ParseError(what + " is too large");
  return std::stoull(s);
}

inline std::int64_t parse_signed(const std::string& s) {
  std::string digits = s;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  auto v = static_cast<std::int64_t>(parse_natural(digits, "integer"));
  return negative ? -v : v;
}

/// Splits at commas that are not inside parentheses.
inline std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  parts.push_back(cur);
  return parts;
}

inline bool wrapped(const std::string& s, char open, char close) {
  return s.size() >= 2 && s.front() == open && s.back() == close;
}

} // namespace detail

/// An integer "5" or a tuple "(1,-2)".
inline std::vector<std::int64_t> parse_tuple(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  if (detail::wrapped(s, '(', ')')) {
    std::vector<std::int64_t> out;
    for (const auto& part : detail::split_top(s.substr(1, s.size() - 2))) out.push_back(detail::parse_signed(part));
    if (out.empty()) throw ParseError("empty tuple");
    return out;
  }
  return {detail::parse_signed(s)};
}

/// "{a,b,...}" with integer or tuple entries.
inline std::vector<std::vector<std::int64_t>> parse_subset(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  if (!detail::wrapped(s, '{', '}')) throw ParseError("a subset is written {x,y,...}, got '" + text + "'");
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& part : detail::split_top(s.substr(1, s.size() - 2))) out.push_back(parse_tuple(part));
  return out;
}

inline GroupContext parse_group(const std::string& text) {
  const std::string s = detail::strip_spaces(text);
  if (s == "Z") return FreeAbelian{1};
  if (s.rfind("Z^", 0) == 0) {
    auto n = detail::parse_natural(s.substr(2), "rank");
    if (n == 0) throw std::invalid_argument("Z^0 is the trivial group; use a positive rank");
    return FreeAbelian{n};
  }
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s.compare(pos, 2, "Z(") != 0) throw ParseError("cannot parse group '" + text + "'");
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + text + "'");
    const std::string inner = s.substr(pos + 2, close - pos - 2);
    auto caret = inner.find('^');
    if (caret != std::string::npos && inner.substr(caret + 1) == "inf") {
      if (pos != 0 || close + 1 != s.size()) throw std::invalid_argument("Prüfer groups cannot be summed with other factors here");
      auto p = detail::parse_natural(inner.substr(0, caret), "prime");
      if (!is_prime(p)) throw std::invalid_argument("Z(p^inf) needs a prime p");
      return PruferGroup{p};
    }
    std::uint64_t m;
    if (caret != std::string::npos) {
      auto base = detail::parse_natural(inner.substr(0, caret), "base");
      auto e = detail::parse_natural(inner.substr(caret + 1), "exponent");
      m = 1;
      for (std::uint64_t i = 0; i < e; ++i) {
        if (m > (std::uint64_t{1} << 40) / std::max<std::uint64_t>(base, 1)) throw std::invalid_argument("cyclic factor too large");
        m *= base;
      }
    } else {
      m = detail::parse_natural(inner, "cyclic order");
    }
    if (m > (std::uint64_t{1} << 40)) throw std::invalid_argument("cyclic factor too large");
    orders.push_back(static_cast<std::int64_t>(m));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw ParseError("expected '+' between cyclic factors in '" + text + "'");
      ++pos;
      if (pos == s.size()) throw ParseError("trailing '+' in '" + text + "'");
    }
  }
  if (orders.empty()) throw ParseError("empty group description");
  return FiniteAbelianGroup(orders);
}

inline SubgroupValue parse_subgroup(const std::string& text, const GroupContext& ctx) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty subgroup description");

  // Prüfer levels
  const auto at = s.find('@');
  if (at != std::string::npos) {
    const std::string head = s.substr(0, at);
    const auto p = detail::parse_natural(s.substr(at + 1), "prime");
    std::optional<std::uint64_t> level;
    if (head == "whole") level = std::nullopt;
    else if (head.rfind("H_", 0) == 0) level = detail::parse_natural(head.substr(2), "level");
    else throw ParseError("expected H_n@p or whole@p, got '" + text + "'");
    const auto* g = std::get_if<PruferGroup>(&ctx);
    if (!g) throw std::invalid_argument("'" + text + "' names a Prüfer subgroup but the group is not Z(p^inf)");
    if (g->prime != p) throw std::invalid_argument("prime " + std::to_string(p) + " does not match the group");
    return level ? PruferSubgroup::finite(p, *level) : PruferSubgroup::whole(p);
  }

  // kZ: multiples k·G
  if (s.size() >= 2 && s.back() == 'Z' && detail::all_digits(s.substr(0, s.size() - 1))) {
    const auto k = static_cast<std::int64_t>(detail::parse_natural(s.substr(0, s.size() - 1), "multiplier"));
    if (const auto* f = std::get_if<FreeAbelian>(&ctx)) {
      IntMatrix g(f->rank, f->rank);
      for (std::size_t i = 0; i < f->rank; ++i) g(i, i) = static_cast<long>(k);
      return Lattice::from_generators(f->rank, g);
    }
    if (const auto* g = std::get_if<FiniteAbelianGroup>(&ctx)) {
      std::vector<Element> gens;
      for (std::size_t i = 0; i < g->rank(); ++i) {
        Element e = g->zero();
        e[i] = k % g->cyclic_orders()[i];
        gens.push_back(e);
      }
      return fag_subgroup_from_elements(*g, gens);
    }
    throw std::invalid_argument("kZ is not a subgroup description for a Prüfer group");
  }

  if (s.rfind("span[", 0) == 0) {
    if (s.back() != ']') throw ParseError("span[...] is missing its closing bracket");
    const auto* f = std::get_if<FreeAbelian>(&ctx);
    if (!f) throw std::invalid_argument("span[...] describes a subgroup of Z^n; use gen{...} for finite groups");
    auto parts = detail::split_top(s.substr(5, s.size() - 6));
    IntMatrix g(parts.size(), f->rank);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto v = parse_tuple(parts[i]);
      if (v.size() != f->rank) throw std::invalid_argument("span vector '" + parts[i] + "' has the wrong length");
      for (std::size_t k = 0; k < f->rank; ++k) g(i, k) = static_cast<long>(v[k]);
    }
    return Lattice::from_generators(f->rank, g);
  }

  if (s.rfind("gen{", 0) == 0) {
    if (s.back() != '}') throw ParseError("gen{...} is missing its closing brace");
    const auto* g = std::get_if<FiniteAbelianGroup>(&ctx);
    if (!g) throw std::invalid_argument("gen{...} describes a subgroup of a finite group; use span[...] for Z^n");
    std::vector<Element> gens;
    for (const auto& part : detail::split_top(s.substr(4, s.size() - 5))) {
      auto v = parse_tuple(part);
      if (v.size() != g->rank()) throw std::invalid_argument("element '" + part + "' has the wrong length");
      gens.push_back(v);
    }
    return fag_subgroup_from_elements(*g, gens);
  }

  throw ParseError("cannot parse subgroup '" + text + "'");
}

inline std::string format_tuple(const std::vector<std::int64_t>& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Canonical text; parse_subgroup(format_subgroup(x), ctx) == x.
inline std::string format_subgroup(const SubgroupValue& v) {
  if (const auto* l = std::get_if<Lattice>(&v)) {
    const auto& b = l->basis();
    if (l->ambient_dim() == 1) return (l->is_trivial() ? std::string("0") : b(0, 0).get_str()) + "Z";
    std::string s = "span[";
    for (std::size_t i = 0; i < b.rows(); ++i) {
      s += i ? ",(" : "(";
      for (std::size_t k = 0; k < b.cols(); ++k) s += (k ? "," : "") + b(i, k).get_str();
      s += ")";
    }
    return s + "]";
  }
  if (const auto* f = std::get_if<FAGSubgroup>(&v)) {
    std::string s = "gen{";
    auto gens = f->canonical_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + format_tuple(gens[i]);
    return s + "}";
  }
  return std::get<PruferSubgroup>(v).to_string();
}

inline std::string format_group(const GroupContext& g) {
  if (const auto* f = std::get_if<FreeAbelian>(&g)) return f->rank == 1 ? "Z" : "Z^" + std::to_string(f->rank);
  if (const auto* p = std::get_if<PruferGroup>(&g)) return "Z(" + std::to_string(p->prime) + "^inf)";
  return std::get<FiniteAbelianGroup>(g).to_string();
}

} // namespace ballean::io
