#pragma once

// JSON encodings shared by the command-line tool and the tests.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ballean/extnat.hpp"
#include "ballean/groups/descriptor.hpp"
#include "ballean/groups/finite_abelian.hpp"
#include "ballean/kernel/explicit_ballean.hpp"
#include "ballean/lattice.hpp"

namespace ballean::io {

using json = nlohmann::json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer '" + j.get<std::string>() + "'");
    return v;
  }
  throw std::invalid_argument("expected an integer");
}

inline json extnat_json(const ExtNat& e) {
  if (e.is_infinite()) return "inf";
  return integer_json(e.value());
}

/// {"mu": exact, "log": float, "base": b}; the exact field is authoritative.
inline json distance_json(const ExtNat& mu, double base) {
  json j;
  j["mu"] = extnat_json(mu);
  if (mu.is_infinite()) j["log"] = "inf";
  else j["log"] = mu.log(base);
  j["base"] = base;
  return j;
}

inline json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(integer_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json lattice_json(const Lattice& l) {
  return {{"ambient", l.ambient_dim()}, {"basis", matrix_json(l.basis())}};
}

inline Lattice lattice_from_json(const json& j) {
  const auto n = j.at("ambient").get<std::size_t>();
  const auto& rows = j.at("basis");
  IntMatrix g(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("lattice: basis row length differs from ambient dimension");
    for (std::size_t k = 0; k < n; ++k) g(i, k) = integer_from_json(rows[i][k]);
  }
  return Lattice::from_generators(n, g);
}

inline json element_json(const Element& e) {
  if (e.size() == 1) return e[0];
  return json(e);
}

inline json fag_subgroup_json(const FAGSubgroup& s) {
  json gens = json::array();
  for (const auto& g : s.canonical_generators()) gens.push_back(element_json(g));
  return {{"group", s.parent().to_string()}, {"order", s.order()}, {"generators", gens}, {"lift", lattice_json(s.lift())}};
}

inline json cardinal_json(const CardinalToken& t) {
  if (t.is_finite()) return t.value();
  return t.to_string();
}

inline CardinalToken cardinal_from_json(const json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw std::invalid_argument("cardinal: negative value");
    return CardinalToken::finite(j.get<std::uint64_t>());
  }
  if (j.is_string()) return CardinalToken::parse(j.get<std::string>());
  throw std::invalid_argument("cardinal: expected a number or a string");
}

namespace detail {
inline std::uint64_t prime_key(const std::string& k) {
  if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("descriptor: prime key '" + k + "' is not a number");
  return std::stoull(k);
}
} // namespace detail

/// {"free_rank": tok,
///  "divisible": {"q_rank": tok, "prufer": {"p": tok, ...}, "prufer_tail": bool},
///  "reduced_torsion": {"p": {"kind": "finite", "order": n} | {"kind": "layerly_finite"}
///                           | {"kind": "not_layerly_finite"}, ...},
///  "reduced_tail": bool}
/// Missing fields default to zero / empty / false.
inline GroupDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("descriptor: expected an object");
  static const std::set<std::string> top{"free_rank", "divisible", "reduced_torsion", "reduced_tail"};
  for (const auto& [k, v] : j.items())
    if (!top.count(k)) throw std::invalid_argument("descriptor: unknown field '" + k + "'");
  GroupDescriptor d;
  if (j.contains("free_rank")) d.free_rank = cardinal_from_json(j["free_rank"]);
  if (j.contains("divisible")) {
    const auto& div = j["divisible"];
    static const std::set<std::string> fields{"q_rank", "prufer", "prufer_tail"};
    for (const auto& [k, v] : div.items())
      if (!fields.count(k)) throw std::invalid_argument("descriptor: unknown divisible field '" + k + "'");
    if (div.contains("q_rank")) d.q_rank = cardinal_from_json(div["q_rank"]);
    if (div.contains("prufer"))
      for (const auto& [p, t] : div["prufer"].items()) d.prufer[detail::prime_key(p)] = cardinal_from_json(t);
    if (div.contains("prufer_tail")) d.prufer_tail = div["prufer_tail"].get<bool>();
  }
  if (j.contains("reduced_torsion"))
    for (const auto& [p, v] : j["reduced_torsion"].items()) {
      ReducedPrimaryPart part;
      const auto kind = v.at("kind").get<std::string>();
      if (kind == "finite") {
        part.kind = ReducedPrimaryPart::Kind::Finite;
        part.order = v.at("order").get<std::uint64_t>();
      } else if (kind == "layerly_finite") {
        part.kind = ReducedPrimaryPart::Kind::LayerlyFinite;
      } else if (kind == "not_layerly_finite") {
        part.kind = ReducedPrimaryPart::Kind::NotLayerlyFinite;
      } else {
        throw std::invalid_argument("descriptor: unknown reduced kind '" + kind + "'");
      }
      d.reduced_torsion[detail::prime_key(p)] = part;
    }
  if (j.contains("reduced_tail")) d.reduced_tail = j["reduced_tail"].get<bool>();
  d.validate();
  return d;
}

inline json descriptor_json(const GroupDescriptor& d) {
  json prufer = json::object();
  for (const auto& [p, t] : d.prufer) prufer[std::to_string(p)] = cardinal_json(t);
  json reduced = json::object();
  for (const auto& [p, part] : d.reduced_torsion) {
    switch (part.kind) {
    case ReducedPrimaryPart::Kind::Finite: reduced[std::to_string(p)] = {{"kind", "finite"}, {"order", part.order}}; break;
    case ReducedPrimaryPart::Kind::LayerlyFinite: reduced[std::to_string(p)] = {{"kind", "layerly_finite"}}; break;
    case ReducedPrimaryPart::Kind::NotLayerlyFinite: reduced[std::to_string(p)] = {{"kind", "not_layerly_finite"}}; break;
    }
  }
  json j = {{"free_rank", cardinal_json(d.free_rank)},
            {"divisible", {{"q_rank", cardinal_json(d.q_rank)}, {"prufer", prufer}}},
            {"reduced_torsion", reduced}};
  if (d.prufer_tail) j["divisible"]["prufer_tail"] = true;
  if (d.reduced_tail) j["reduced_tail"] = true;
  return j;
}

inline json asdim_json(const AsdimReport& r) {
  json j;
  switch (r.kind) {
  case AsdimReport::Kind::Zero: j["kind"] = "zero"; break;
  case AsdimReport::Kind::Finite: j["kind"] = "finite"; j["n"] = r.n; break;
  case AsdimReport::Kind::Infinite: j["kind"] = "infinite"; break;
  case AsdimReport::Kind::Unknown: j["kind"] = "unknown"; j["lower_bound"] = r.n; break;
  }
  j["reason"] = r.reason;
  return j;
}

inline json iso_points_json(const IsoPointsReport& r) {
  json j = {{"size", r.size.to_string()}, {"witness", r.witness}};
  if (r.rank_recovery_assumes_gch) j["assumes_gch"] = true;
  return j;
}

inline json component_json(const ComponentCensus& c) {
  return {{"count", c.count.to_string()}, {"components", c.components}};
}

inline json point_set_json(const ExplicitBallean& b, const PointSet& s) {
  json out = json::array();
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) out.push_back(b.support()[x]);
  return out;
}

inline json violation_json(const ExplicitBallean& b, const BalleanViolation& v) {
  json j = {{"axiom", v.kind_name()}, {"point", b.support()[v.point]}, {"radius", b.radii()[v.alpha]}};
  if (v.kind == BalleanViolation::Kind::Symmetry) j["other"] = b.support()[v.other];
  if (v.kind == BalleanViolation::Kind::UpperMultiplicativity) j["second_radius"] = b.radii()[v.beta];
  return j;
}

inline json ballean_json(const ExplicitBallean& b) {
  json balls = json::object();
  for (std::size_t a = 0; a < b.radius_count(); ++a)
    for (std::size_t x = 0; x < b.size(); ++x)
      balls["(" + b.support()[x] + "," + b.radii()[a] + ")"] = point_set_json(b, b.ball(x, a));
  return {{"support", b.support()}, {"radii", b.radii()}, {"balls", balls}};
}

class BalleanLoadError : public std::invalid_argument {
public:
  BalleanLoadError(const std::string& what, json violation) : std::invalid_argument(what), violation_(std::move(violation)) {}
  const json& violation() const { return violation_; }

private:
  json violation_;
};

/// Parses {"support", "radii", "balls": {"(x,α)": [...]}} and validates the
/// ballean axioms. Names may contain commas; a key is split at the comma that
/// leaves a known point on the left and a known radius on the right.
inline ExplicitBallean ballean_from_json(const json& j) {
  auto support = j.at("support").get<std::vector<std::string>>();
  auto radii = j.at("radii").get<std::vector<std::string>>();
  std::map<std::string, std::size_t> pt, rad;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (!pt.emplace(support[i], i).second) throw std::invalid_argument("ballean: duplicate point '" + support[i] + "'");
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!rad.emplace(radii[i], i).second) throw std::invalid_argument("ballean: duplicate radius '" + radii[i] + "'");
  std::vector<std::vector<PointSet>> balls(radii.size(), std::vector<PointSet>(support.size(), PointSet(support.size())));
  std::vector<std::vector<bool>> seen(radii.size(), std::vector<bool>(support.size(), false));
  for (const auto& [key, members] : j.at("balls").items()) {
    if (key.size() < 3 || key.front() != '(' || key.back() != ')')
      throw std::invalid_argument("ballean: malformed ball key '" + key + "'");
    const std::string inner = key.substr(1, key.size() - 2);
    std::optional<std::pair<std::size_t, std::size_t>> hit;
    for (auto c = inner.find(','); c != std::string::npos; c = inner.find(',', c + 1)) {
      auto x = pt.find(inner.substr(0, c));
      auto r = rad.find(inner.substr(c + 1));
      if (x != pt.end() && r != rad.end()) {
        hit = {{x->second, r->second}};
        break;
      }
    }
    if (!hit) throw std::invalid_argument("ballean: ball key '" + key + "' names no known (point,radius)");
    auto [x, r] = *hit;
    seen[r][x] = true;
    for (const auto& m : members) {
      auto y = pt.find(m.get<std::string>());
      if (y == pt.end()) throw std::invalid_argument("ballean: unknown point '" + m.get<std::string>() + "' in ball " + key);
      balls[r][x].set(y->second);
    }
  }
  for (std::size_t r = 0; r < radii.size(); ++r)
    for (std::size_t x = 0; x < support.size(); ++x)
      if (!seen[r][x]) throw std::invalid_argument("ballean: missing ball (" + support[x] + "," + radii[r] + ")");
  ExplicitBallean b(std::move(support), std::move(radii), std::move(balls));
  auto report = validate_ballean(b);
  if (!report.valid()) {
    auto v = violation_json(b, *report.violation);
    throw BalleanLoadError("ballean: " + report.violation->kind_name() + " fails", v);
  }
  return b;
}

} // namespace ballean::io
