#pragma once

// Verification sweeps. Each suite replays one structural claim on a finite
// grid or on seeded random instances and reports how many samples it checked
// and how many failed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ballean/extnat.hpp"
#include "ballean/groups/finite_abelian.hpp"
#include "ballean/kernel/explicit_ballean.hpp"
#include "ballean/kernel/group_balls.hpp"
#include "ballean/kernel/hamming.hpp"
#include "ballean/lattice.hpp"
#include "ballean/witnesses.hpp"

namespace ballean::verify {

using json = nlohmann::json;

struct SuiteReport {
  SuiteReport(std::string name, std::string what, std::string ref)
      : suite(std::move(name)), claim(std::move(what)), paper_ref(std::move(ref)) {}

  std::string suite;
  std::string claim;
  std::string paper_ref; // short name of the property being replayed
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::optional<double> max_ratio;
  json details = json::object();
  json counterexamples = json::array();

  bool passed() const { return violations == 0; }

  void fail(json example) {
    ++violations;
    if (counterexamples.size() < 5) counterexamples.push_back(std::move(example));
  }
};

inline json report_json(const SuiteReport& r) {
  json j = {{"suite", r.suite},     {"claim", r.claim},           {"paper_ref", r.paper_ref},
            {"samples", r.samples}, {"violations", r.violations}, {"details", r.details}};
  j["max_ratio"] = r.max_ratio ? json(*r.max_ratio) : json(nullptr);
  if (!r.counterexamples.empty()) j["counterexamples"] = r.counterexamples;
  return j;
}

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::int64_t uniform_signed(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Every point of {0..max}^n in lexicographic order.
inline std::vector<TaxiPoint> taxi_grid(std::size_t n, std::uint64_t max) {
  std::vector<TaxiPoint> out;
  TaxiPoint cur(n, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == max) cur[--i] = 0;
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

inline TaxiPoint random_taxi(Rng& rng, std::size_t n, std::uint64_t max) {
  TaxiPoint t(n);
  for (auto& c : t) c = uniform(rng, 0, max);
  return t;
}

inline json taxi_json(const TaxiPoint& t) { return json(t); }

/// dlog_closed_form against the lattice index computation on ι, and the two
/// quasi-isometry inequalities on seeded random pairs.
inline SuiteReport iota_suite(const PrimeTuple& pt, std::uint64_t max_coord, std::uint64_t seed,
                              std::size_t qi_samples = 1000, std::size_t exhaustive_limit = 600000) {
  SuiteReport r("iota", "closed form of the index distance on prime-power subgroups of Z; iota is a quasi-isometry",
                "taxicab quasi-isometry of prime-power subgroups");
  Rng rng(seed);
  const std::size_t n = pt.size();
  auto grid = taxi_grid(n, max_coord);
  std::vector<Lattice> lattices;
  for (const auto& m : grid) lattices.push_back(iota(pt, m));
  const bool exhaustive = grid.size() * grid.size() <= exhaustive_limit;
  std::size_t pairs = 0;
  auto check = [&](std::size_t i, std::size_t k) {
    ++pairs;
    auto direct = log_subgroup_distance(lattices[i], lattices[k]);
    auto closed = dlog_closed_form(pt, grid[i], grid[k]);
    if (!(direct == closed))
      r.fail({{"m", taxi_json(grid[i])}, {"m'", taxi_json(grid[k])}, {"closed_form", closed.to_string()},
              {"lattice", direct.to_string()}});
  };
  if (exhaustive) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t k = 0; k < grid.size(); ++k) check(i, k);
  } else {
    for (std::size_t s = 0; s < 20000; ++s) check(uniform(rng, 0, grid.size() - 1), uniform(rng, 0, grid.size() - 1));
  }
  std::vector<std::pair<TaxiPoint, TaxiPoint>> samples;
  for (std::size_t s = 0; s < qi_samples; ++s) samples.emplace_back(random_taxi(rng, n, max_coord), random_taxi(rng, n, max_coord));
  auto qi = verify_iota_quasi_isometry(pt, samples);
  for (const auto& [a, b] : qi.violating_pairs) r.fail({{"m", taxi_json(a)}, {"m'", taxi_json(b)}, {"inequality", "quasi-isometry"}});
  r.samples = pairs + qi.samples;
  r.max_ratio = std::max(qi.max_upper_ratio, qi.max_lower_ratio);
  r.details = {{"primes", pt.primes()},
               {"log_base", pt.log_base()},
               {"max_coord", max_coord},
               {"closed_form_pairs", pairs},
               {"closed_form_exhaustive", exhaustive},
               {"qi_samples", qi.samples},
               {"max_upper_ratio", qi.max_upper_ratio},
               {"max_lower_ratio", qi.max_lower_ratio}};
  return r;
}

/// h(φ(m̄), φ(m̄')) = d_T(m̄, m̄') on the whole grid, for 1..max_streams streams.
inline SuiteReport hamming_suite(std::size_t max_streams, std::uint64_t max_coord) {
  SuiteReport r("hamming", "the staircase map into finite subsets is an isometry for the taxicab metric",
                "taxicab lattice embeds isometrically in Hamming space");
  for (std::size_t n = 1; n <= max_streams; ++n) {
    ResidueStreams layout{n};
    auto grid = taxi_grid(n, max_coord);
    std::vector<HammingPoint> image;
    for (const auto& m : grid) image.push_back(hamming_embed(layout, m));
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t k = 0; k < grid.size(); ++k) {
        ++r.samples;
        auto h = hamming_distance(image[i], image[k]);
        auto d = taxi_distance(grid[i], grid[k]);
        if (h != d) r.fail({{"m", taxi_json(grid[i])}, {"m'", taxi_json(grid[k])}, {"hamming", h}, {"taxi", d}});
      }
  }
  r.max_ratio = 1.0;
  r.details = {{"max_streams", max_streams}, {"max_coord", max_coord}};
  return r;
}

/// μ'(H_F, H_F') = p^max(|F∖F'|, |F'∖F|) for all F, F' ⊆ {0..range}.
inline SuiteReport elemab_suite(const std::vector<std::uint64_t>& primes, std::uint64_t range) {
  SuiteReport r("elemab", "coordinate subgroups of an elementary abelian group realize finite sets with p^(set distance)",
                "elementary abelian subgroups correspond to finite sets");
  if (range > 10) throw std::invalid_argument("elemab: working range too large");
  for (auto p : primes) {
    const std::uint64_t count = std::uint64_t{1} << (range + 1);
    std::vector<FAGSubgroup> subs;
    std::vector<std::set<std::uint64_t>> sets;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      std::set<std::uint64_t> f;
      for (std::uint64_t i = 0; i <= range; ++i)
        if (mask >> i & 1) f.insert(i);
      subs.push_back(coordinate_subgroup(p, range, f));
      sets.push_back(std::move(f));
    }
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b) {
        ++r.samples;
        const auto only_a = static_cast<unsigned long>(__builtin_popcountll(a & ~b));
        const auto only_b = static_cast<unsigned long>(__builtin_popcountll(b & ~a));
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), p, std::max(only_a, only_b));
        auto mu = fag_log_distance(subs[a], subs[b]);
        if (!(mu == ExtNat(e)))
          r.fail({{"p", p}, {"F", sets[a]}, {"F'", sets[b]}, {"mu", mu.to_string()}, {"expected", e.get_str()}});
      }
  }
  r.details = {{"primes", primes}, {"range", range}};
  return r;
}

/// Partitions of k into positive parts, largest first.
inline std::vector<std::vector<std::uint64_t>> partitions(std::uint64_t k) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t left, std::uint64_t cap) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

/// Every abelian p-group of order p^k with 1 < p^k <= max_order, up to
/// isomorphism.
inline std::vector<FiniteAbelianGroup> abelian_p_groups(std::uint64_t max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (std::uint64_t p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint64_t k = 1; q <= max_order; ++k, q *= p)
      for (const auto& lambda : partitions(k)) {
        std::vector<std::int64_t> orders;
        for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
          std::int64_t o = 1;
          for (std::uint64_t i = 0; i < *it; ++i) o *= static_cast<std::int64_t>(p);
          orders.push_back(o);
        }
        out.emplace_back(orders);
      }
  }
  return out;
}

inline SuiteReport tree_suite(std::uint64_t max_order) {
  SuiteReport r("tree", "the cyclic subgroups of a finite abelian p-group form a tree of height log_p(exponent)",
                "cyclic subgroups of a p-group form a tree");
  std::size_t vertices = 0;
  for (const auto& g : abelian_p_groups(max_order)) {
    ++r.samples;
    auto t = cyclic_subgroup_tree(g);
    vertices += t.vertices.size();
    if (!t.is_tree() || t.height != t.exponent_log)
      r.fail({{"group", g.to_string()}, {"vertices", t.vertices.size()}, {"edges", t.edges.size()},
              {"connected", t.connected}, {"height", t.height}, {"log_exponent", t.exponent_log}});
  }
  r.details = {{"max_order", max_order}, {"groups", r.samples}, {"total_vertices", vertices}};
  return r;
}

/// kZ ∈ exp B(nZ, [−m, m]) decided by explicit set inclusion inside a window.
inline bool lz_exp_member_windowed(std::uint64_t n, std::uint64_t k, std::uint64_t m, std::int64_t window) {
  const auto mm = static_cast<std::int64_t>(m);
  auto near = [&](std::int64_t step) {
    std::set<std::int64_t> s;
    for (std::int64_t x = -(window / step + 1) * step; x <= window + step; x += step)
      for (std::int64_t f = -mm; f <= mm; ++f) s.insert(x + f);
    return s;
  };
  auto inside = [&](std::int64_t step, const std::set<std::int64_t>& target) {
    for (std::int64_t x = -(window / step) * step; x <= window; x += step)
      if (!target.count(x)) return false;
    return true;
  };
  const auto nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  return inside(kk, near(nn)) && inside(nn, near(kk));
}

inline SuiteReport lzball_suite(std::uint64_t singleton_max_n, std::uint64_t brute_max_n, std::uint64_t brute_max_m) {
  SuiteReport r("lzball", "exp balls of L(Z) around nZ with radius [-m,m] are {nZ} once n > 3m",
                "subgroups of Z far from the radius are isolated in exp balls");
  for (std::uint64_t n = 4; n <= singleton_max_n; ++n) {
    const std::uint64_t m = (n - 1) / 3;
    ++r.samples;
    auto ball = lz_exp_ball(n, m);
    if (ball != std::vector<std::uint64_t>{n}) r.fail({{"n", n}, {"m", m}, {"ball", ball}});
  }
  for (std::uint64_t n = 1; n <= brute_max_n; ++n)
    for (std::uint64_t m = 0; m <= brute_max_m; ++m) {
      ++r.samples;
      const auto window = static_cast<std::int64_t>(4 * n * (2 * m + 1));
      std::vector<std::uint64_t> brute;
      for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(window); ++k)
        if (lz_exp_member_windowed(n, k, m, window)) brute.push_back(k);
      auto fast = lz_exp_ball(n, m);
      if (brute != fast) r.fail({{"n", n}, {"m", m}, {"enumerated", fast}, {"windowed", brute}});
    }
  r.details = {{"singleton_range", {4, singleton_max_n}}, {"brute_force_max_n", brute_max_n}, {"brute_force_max_m", brute_max_m}};
  return r;
}

/// Covering number μ of Def. 3.1 against the index distance, on all pairs of
/// subgroups of each group.
inline SuiteReport mu_index_suite(const std::vector<FiniteAbelianGroup>& groups) {
  SuiteReport r("mu-index", "the covering-number distance between subgroups equals the larger of the two indices",
                "covering number between subgroups is the index");
  json per_group = json::array();
  for (const auto& g : groups) {
    FiniteGroupOps ops(g);
    auto subs = all_subgroups(g);
    std::vector<Subset<FiniteGroupOps>> as_sets;
    for (const auto& s : subs) {
      auto e = s.elements();
      as_sets.emplace_back(e.begin(), e.end());
    }
    std::size_t single_differs = 0;
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b) {
        ++r.samples;
        auto mu = mu_set_distance(ops, as_sets[a], as_sets[b]);
        auto idx = fag_log_distance(subs[a], subs[b]);
        if (!(mu.mu == idx))
          r.fail({{"group", g.to_string()}, {"A", subs[a].order()}, {"B", subs[b].order()}, {"mu", mu.mu.to_string()},
                  {"index", idx.to_string()}});
        if (!(mu.single_set == idx)) ++single_differs;
      }
    per_group.push_back({{"group", g.to_string()}, {"subgroups", subs.size()}, {"single_set_differs", single_differs}});
  }
  r.details = {{"groups", per_group}};
  return r;
}

/// A valid ballean on at most max_points points: random reflexive symmetric
/// relations, plus their equivalence closure whenever the relations alone
/// are not upper multiplicative.
inline ExplicitBallean random_ballean(Rng& rng, std::size_t max_points) {
  const std::size_t n = uniform(rng, 1, max_points);
  const std::size_t k = uniform(rng, 1, 3);
  std::vector<std::vector<PointSet>> balls;
  std::vector<std::string> radii;
  std::bernoulli_distribution edge(0.3);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<PointSet> rows(n, PointSet(n));
    for (std::size_t x = 0; x < n; ++x) {
      rows[x].set(x);
      for (std::size_t y = x + 1; y < n; ++y)
        if (edge(rng)) {
          rows[x].set(y);
          rows[y].set(x);
        }
    }
    balls.push_back(std::move(rows));
    radii.push_back("r" + std::to_string(a));
  }
  ExplicitBallean candidate(numbered_points(n, "x"), radii, balls);
  if (validate_ballean(candidate).valid()) return candidate;
  std::vector<PointSet> top(n, PointSet(n));
  for (const auto& comp : connected_components(candidate))
    for (auto x : comp)
      for (auto y : comp) top[x].set(y);
  balls.push_back(std::move(top));
  radii.push_back("top");
  return ExplicitBallean(numbered_points(n, "x"), std::move(radii), std::move(balls));
}

/// A ballean whose balls are the classes of equivalence relations closed
/// under joins, so cellularization leaves it unchanged.
inline ExplicitBallean random_cellular_ballean(Rng& rng, std::size_t max_points) {
  const std::size_t n = uniform(rng, 1, max_points);
  const std::size_t k = uniform(rng, 1, 3);
  std::vector<std::vector<std::size_t>> labels;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<std::size_t> lab(n);
    for (auto& l : lab) l = uniform(rng, 0, n - 1);
    labels.push_back(std::move(lab));
  }
  auto classes = [&](const std::vector<std::size_t>& lab) {
    std::vector<PointSet> rows(n, PointSet(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (lab[x] == lab[y]) rows[x].set(y);
    return rows;
  };
  std::vector<std::vector<PointSet>> balls;
  for (const auto& lab : labels) {
    auto rows = classes(lab);
    if (std::find(balls.begin(), balls.end(), rows) == balls.end()) balls.push_back(std::move(rows));
  }
  // close under joins of partitions
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t cur = balls.size();
    for (std::size_t a = 0; a < cur; ++a)
      for (std::size_t b = a + 1; b < cur; ++b) {
        std::vector<PointSet> join(n, PointSet(n));
        for (std::size_t x = 0; x < n; ++x) join[x] = balls[a][x] | balls[b][x];
        for (bool again = true; again;) {
          again = false;
          for (std::size_t x = 0; x < n; ++x) {
            PointSet next = join[x];
            for (auto y = join[x].find_first(); y != PointSet::npos; y = join[x].find_next(y)) next |= join[y];
            if (next != join[x]) {
              join[x] = next;
              again = true;
            }
          }
        }
        if (std::find(balls.begin(), balls.end(), join) == balls.end()) {
          balls.push_back(std::move(join));
          grew = true;
        }
      }
  }
  std::vector<std::string> radii;
  for (std::size_t a = 0; a < balls.size(); ++a) radii.push_back("e" + std::to_string(a));
  return ExplicitBallean(numbered_points(n, "x"), std::move(radii), std::move(balls));
}

/// Powers of exp balls lie in the exp-type ball of the powers, and exp
/// preserves cellularity.
inline SuiteReport cellular_suite(std::uint64_t seed, std::size_t instances = 100, std::size_t max_points = 6,
                                  std::size_t max_power = 4, std::size_t cellular_points = 5) {
  SuiteReport r("cellular", "(exp B)^n(Y,a) is inside the exp ball built from B^n; exp of a cellular ballean is cellular",
                "exp-hyperballean of a cellular ballean is cellular");
  Rng rng(seed);
  std::size_t inclusion_checks = 0, cellular_instances = 0;
  for (std::size_t t = 0; t < instances; ++t) {
    auto b = random_ballean(rng, max_points);
    ++r.samples;
    if (!validate_ballean(b).valid()) {
      r.fail({{"instance", t}, {"reason", "generator produced an invalid ballean"}});
      continue;
    }
    auto e = exp_hyperballean_of(b);
    const std::uint64_t count = (std::uint64_t{1} << b.size()) - 1;
    for (std::size_t a = 0; a < b.radius_count(); ++a)
      for (std::uint64_t y = 1; y <= count; ++y) {
        PointSet ys(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
          if (y >> i & 1) ys.set(i);
        for (std::size_t n = 1; n <= max_power; ++n) {
          ++inclusion_checks;
          const PointSet lhs = ball_iterate(e, y - 1, a, n);
          const PointSet bny = ball_iterate_set(b, ys, a, n);
          bool ok = true;
          for (auto z = lhs.find_first(); z != PointSet::npos && ok; z = lhs.find_next(z)) {
            PointSet zs(b.size());
            for (std::size_t i = 0; i < b.size(); ++i)
              if ((z + 1) >> i & 1) zs.set(i);
            ok = zs.is_subset_of(bny) && ys.is_subset_of(ball_iterate_set(b, zs, a, n));
          }
          if (!ok) r.fail({{"instance", t}, {"Y", subset_name(b, y)}, {"radius", b.radii()[a]}, {"n", n}});
        }
      }
    auto c = cellularization(b);
    if (!(cellularization(c) == c)) r.fail({{"instance", t}, {"reason", "cellularization is not idempotent"}});
    for (std::size_t a = 0; a < b.radius_count(); ++a)
      for (std::size_t x = 0; x < b.size(); ++x)
        if (!b.ball(x, a).is_subset_of(c.ball(x, a))) r.fail({{"instance", t}, {"reason", "cellularization shrank a ball"}});
  }
  for (std::size_t t = 0; t < instances; ++t) {
    auto b = random_cellular_ballean(rng, cellular_points);
    ++r.samples;
    ++cellular_instances;
    if (!validate_ballean(b).valid() || !(cellularization(b) == b)) {
      r.fail({{"instance", t}, {"reason", "generator produced a non-cellular ballean"}});
      continue;
    }
    auto e = exp_hyperballean_of(b);
    if (!(cellularization(e) == e) || !is_cellular(e) || !validate_ballean(e).valid())
      r.fail({{"instance", t}, {"reason", "exp of a cellular ballean is not cellular"}, {"points", b.size()}});
  }
  r.details = {{"seed", seed}, {"instances", instances}, {"max_points", max_points}, {"max_power", max_power},
               {"inclusion_checks", inclusion_checks}, {"cellular_instances", cellular_instances}};
  return r;
}

inline Lattice random_sublattice(Rng& rng, std::size_t dim, std::int64_t bound) {
  const std::size_t gens = uniform(rng, 0, 4) ? dim : uniform(rng, 0, dim);
  IntMatrix g(gens, dim);
  for (std::size_t i = 0; i < gens; ++i)
    for (std::size_t k = 0; k < dim; ++k) g(i, k) = static_cast<long>(uniform_signed(rng, -bound, bound));
  return Lattice::from_generators(dim, g);
}

inline HammingPoint random_hamming(Rng& rng, std::uint64_t universe) {
  HammingPoint p;
  for (std::uint64_t i = 0; i < universe; ++i)
    if (uniform(rng, 0, 1)) p.insert(i);
  return p;
}

/// Symmetry and the multiplicative triangle inequality for μ' on sublattices
/// of Z^2, and the metric axioms for the Hamming distance.
inline SuiteReport axioms_suite(std::uint64_t seed, std::size_t triples = 500, std::int64_t bound = 8) {
  SuiteReport r("axioms", "the index distance on sublattices and the Hamming distance satisfy the metric axioms",
                "metric axioms");
  Rng rng(seed);
  std::size_t infinite = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    ++r.samples;
    auto a = random_sublattice(rng, 2, bound), b = random_sublattice(rng, 2, bound), c = random_sublattice(rng, 2, bound);
    auto ab = log_subgroup_distance(a, b), ba = log_subgroup_distance(b, a);
    auto bc = log_subgroup_distance(b, c), ac = log_subgroup_distance(a, c);
    if (ab.is_infinite()) ++infinite;
    if (!(ab == ba)) r.fail({{"kind", "lattice symmetry"}, {"triple", t}});
    if (!(log_subgroup_distance(a, a) == ExtNat(1))) r.fail({{"kind", "lattice identity"}, {"triple", t}});
    if (ac > ab * bc) r.fail({{"kind", "lattice triangle"}, {"triple", t}, {"ac", ac.to_string()}, {"ab", ab.to_string()}, {"bc", bc.to_string()}});
  }
  for (std::size_t t = 0; t < triples; ++t) {
    ++r.samples;
    auto f = random_hamming(rng, 16), g = random_hamming(rng, 16), h = random_hamming(rng, 16);
    auto fg = hamming_distance(f, g);
    if (fg != hamming_distance(g, f)) r.fail({{"kind", "hamming symmetry"}, {"triple", t}});
    if ((fg == 0) != (f == g)) r.fail({{"kind", "hamming identity"}, {"triple", t}});
    if (hamming_distance(f, h) > fg + hamming_distance(g, h)) r.fail({{"kind", "hamming triangle"}, {"triple", t}});
  }
  r.details = {{"seed", seed}, {"triples", triples}, {"coordinate_bound", bound}, {"infinite_lattice_pairs", infinite}};
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"iota", "hamming", "elemab", "tree", "lzball", "mu-index", "cellular", "axioms"};
  return names;
}

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_coord;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t log_base = 2;
};

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "iota") return iota_suite(PrimeTuple(o.primes, o.log_base), o.max_coord.value_or(8), o.seed);
  if (name == "hamming") return hamming_suite(3, o.max_coord.value_or(6));
  if (name == "elemab") return elemab_suite({2, 3}, o.max_coord.value_or(6));
  if (name == "tree") return tree_suite(81);
  if (name == "lzball") return lzball_suite(60, 30, 4);
  if (name == "mu-index")
    return mu_index_suite({FiniteAbelianGroup({12}), FiniteAbelianGroup({2, 4}), FiniteAbelianGroup({3, 9})});
  if (name == "cellular") return cellular_suite(o.seed);
  if (name == "axioms") return axioms_suite(o.seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace ballean::verify
