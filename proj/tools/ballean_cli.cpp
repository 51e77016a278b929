// ballean: distances, balls and structural profiles for subgroup
// hyperballeans, plus the verification sweeps.
//
// JSON goes to stdout, diagnostics to stderr. Exit status: 0 on success,
// 1 when the input is well formed but invalid (or a sweep found violations),
// 2 on usage errors.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballean/ballean.hpp"

using json = nlohmann::json;
using namespace ballean;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

double log_base() {
  const char* env = std::getenv("BALLEAN_LOG_BASE");
  if (!env || !*env) return std::exp(1.0);
  std::string s = env;
  if (s == "e") return std::exp(1.0);
  std::size_t used = 0;
  double b = 0;
  try {
    b = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !(b > 1.0) || !std::isfinite(b))
    throw UsageError("BALLEAN_LOG_BASE must be 'e' or a number greater than 1, got '" + s + "'");
  return b;
}

ExtNat extnat_arg(const std::string& s) {
  if (s == "inf") return ExtNat::infinity();
  mpz_class v;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || v.set_str(s, 10) != 0)
    throw UsageError("expected a positive integer or 'inf', got '" + s + "'");
  if (v < 1) throw std::invalid_argument("radius bound must be at least 1");
  return ExtNat(v);
}

ExtNat subgroup_distance(const io::SubgroupValue& a, const io::SubgroupValue& b) {
  if (a.index() != b.index()) throw std::invalid_argument("subgroups of different groups");
  if (const auto* l = std::get_if<Lattice>(&a)) return log_subgroup_distance(*l, std::get<Lattice>(b));
  if (const auto* f = std::get_if<FAGSubgroup>(&a)) return fag_log_distance(*f, std::get<FAGSubgroup>(b));
  return prufer_log_distance(std::get<PruferSubgroup>(a), std::get<PruferSubgroup>(b));
}

json subgroup_json(const io::SubgroupValue& v) {
  json j = {{"text", io::format_subgroup(v)}};
  if (const auto* l = std::get_if<Lattice>(&v)) j["lattice"] = io::lattice_json(*l);
  if (const auto* f = std::get_if<FAGSubgroup>(&v)) j["order"] = f->order();
  return j;
}

json load_json_file(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

json element_json(std::int64_t x) { return x; }
json element_json(const Element& x) { return io::element_json(x); }

template <AdditiveGroup G>
json subset_json(const Subset<G>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(element_json(x));
  return out;
}

/// Runs `body` with the additive group named by --group: Z through a window
/// or a finite abelian group.
template <class Body>
json with_additive_group(const std::string& group, std::int64_t window, Body body) {
  auto ctx = io::parse_group(group);
  if (const auto* f = std::get_if<io::FreeAbelian>(&ctx)) {
    if (f->rank != 1) throw std::invalid_argument("finite subsets are supported in Z and in finite groups only");
    return body(IntegerWindow(window));
  }
  if (const auto* g = std::get_if<FiniteAbelianGroup>(&ctx)) return body(FiniteGroupOps(*g));
  throw std::invalid_argument("finite subsets are supported in Z and in finite groups only");
}

template <AdditiveGroup G>
Subset<G> checked_subset(const G& g, const std::string& text) {
  auto raw = io::parse_subset(text);
  Subset<G> out;
  for (const auto& e : raw) {
    typename G::value_type x{};
    if constexpr (std::is_same_v<typename G::value_type, Element>) {
      if (e == std::vector<std::int64_t>{0}) {
        out.insert(g.zero());
        continue;
      }
      if (e.size() != g.group().rank()) throw std::invalid_argument("element " + io::format_tuple(e) + " has the wrong length");
      x = e;
    } else {
      if (e.size() != 1) throw std::invalid_argument("elements of Z are single integers");
      x = e[0];
    }
    if (!g.admits(x)) throw std::invalid_argument("element " + io::format_tuple(e) + " is outside the group or window");
    out.insert(x);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Distances, balls and structural profiles for subgroup hyperballeans"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string group;
  std::vector<std::string> subs;

  auto* dist = app.add_subcommand("dist", "Logarithmic distance between two subgroups");
  dist->add_option("--group", group, "Z, Z^n, Z(m)+Z(k)+..., or Z(p^inf)")->required();
  dist->add_option("--sub", subs, "subgroup (give exactly two)")->required()->expected(2);

  std::string family;
  std::uint64_t n_arg = 0, p_arg = 2, m_arg = 0;
  std::string k_arg, radius_arg;
  auto* ball = app.add_subcommand("ball", "Balls in L(Z) and in the logarithmic hyperballean of Z(p^inf)");
  ball->add_option("--family", family, "LZ-exp, LZ-log or prufer")
      ->required()
      ->check(CLI::IsMember({"LZ-exp", "LZ-log", "prufer"}));
  ball->add_option("--n", n_arg, "centre: nZ, or the level H_n")->required();
  auto* m_opt = ball->add_option("--m", m_arg, "LZ-exp radius [-m, m]");
  ball->add_option("--radius", radius_arg, "LZ-exp radius as an explicit finite set {a,b,...}");
  ball->add_option("--K", k_arg, "bound on the index distance μ' (LZ-log, prufer)");
  ball->add_option("--p", p_arg, "prime for the prufer family");

  std::string descriptor_path, exp_of;
  std::string sub_arg;
  auto* component = app.add_subcommand("component", "Connected components of the subgroup hyperballean");
  component->add_option("--group", group, "Z^n, Z(p^inf) or a finite group");
  component->add_option("--descriptor", descriptor_path, "group descriptor JSON file");
  component->add_option("--exp-of", exp_of, "components of exp B_G for |G| = this cardinal");
  component->add_option("--sub", sub_arg, "also report the component of this subgroup");

  auto* saturate = app.add_subcommand("saturate", "Pure closure of a subgroup of Z^n");
  saturate->add_option("--group", group, "Z or Z^n")->required();
  saturate->add_option("--sub", sub_arg, "subgroup")->required();

  auto* profile = app.add_subcommand("profile", "Asymptotic dimension, isolated points and components from a descriptor");
  profile->add_option("--descriptor", descriptor_path, "group descriptor JSON file ('-' for stdin)")->required();

  std::string center = "{0}", member;
  std::int64_t window = 1000;
  bool gexp = false;
  auto* expball = app.add_subcommand("exp-ball", "Balls of the exp- and G-exp-hyperballeans");
  expball->add_option("--group", group, "Z or a finite group")->required();
  expball->add_option("--center", center, "centre subset, default {0}");
  expball->add_option("--radius", radius_arg, "finite radius set")->required();
  expball->add_option("--member", member, "test membership of this subset instead of enumerating");
  expball->add_flag("--gexp", gexp, "use the G-exp ball {Y} ∪ {g+Y : g ∈ radius}");
  expball->add_option("--window", window, "half-width of the working window for Z")->check(CLI::PositiveNumber);

  std::vector<std::string> sets;
  auto* mu = app.add_subcommand("mu", "Covering-number distance between finite subsets");
  mu->add_option("--group", group, "Z or a finite group")->required();
  mu->add_option("--set", sets, "subset (give exactly two)")->required()->expected(2);
  mu->add_option("--window", window, "half-width of the working window for Z")->check(CLI::PositiveNumber);

  std::string suite = "all";
  std::uint64_t seed = 0, max_coord = 0, base_arg = 2;
  std::vector<std::uint64_t> primes;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification sweeps");
  verify_cmd->add_option("--suite", suite, "suite name or 'all'")
      ->check(CLI::IsMember({"iota", "hamming", "elemab", "tree", "lzball", "mu-index", "cellular", "axioms", "all"}));
  verify_cmd->add_option("--seed", seed, "seed for randomized sweeps");
  auto* mc_opt = verify_cmd->add_option("--max-coord", max_coord, "coordinate bound for grid sweeps");
  verify_cmd->add_option("--primes", primes, "primes for the iota suite")->delimiter(',');
  verify_cmd->add_option("--log-base", base_arg, "integer logarithm base for the iota suite (at most the smallest prime)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  if (dist->parsed()) {
    auto ctx = io::parse_group(group);
    auto a = io::parse_subgroup(subs[0], ctx);
    auto b = io::parse_subgroup(subs[1], ctx);
    emit(io::distance_json(subgroup_distance(a, b), log_base()));
    return 0;
  }

  if (ball->parsed()) {
    json out = {{"family", family}};
    if (family == "LZ-exp") {
      if (n_arg < 1) throw std::invalid_argument("--n must be positive");
      std::vector<std::uint64_t> ks;
      if (!radius_arg.empty()) {
        std::set<std::int64_t> f;
        for (const auto& e : io::parse_subset(radius_arg)) {
          if (e.size() != 1) throw std::invalid_argument("radius elements are integers");
          f.insert(e[0]);
        }
        ks = lz_exp_ball_for_radius(n_arg, f);
        out["radius"] = f;
      } else {
        if (!*m_opt) throw UsageError("LZ-exp needs --m or --radius");
        ks = lz_exp_ball(n_arg, m_arg);
        out["radius"] = {{"m", m_arg}};
      }
      json members = json::array();
      for (auto k : ks) members.push_back(std::to_string(k) + "Z");
      out["center"] = std::to_string(n_arg) + "Z";
      out["members"] = members;
    } else if (family == "LZ-log") {
      if (k_arg.empty()) throw UsageError("LZ-log needs --K");
      if (n_arg < 1) throw std::invalid_argument("--n must be positive");
      json members = json::array();
      for (auto m : lz_log_ball(n_arg, extnat_arg(k_arg))) members.push_back(std::to_string(m) + "Z");
      out["center"] = std::to_string(n_arg) + "Z";
      out["K"] = k_arg;
      out["members"] = members;
    } else {
      if (k_arg.empty()) throw UsageError("prufer needs --K");
      json members = json::array();
      for (const auto& h : prufer_ball(p_arg, n_arg, extnat_arg(k_arg))) members.push_back(h.to_string());
      out["center"] = PruferSubgroup::finite(p_arg, n_arg).to_string();
      out["K"] = k_arg;
      out["members"] = members;
    }
    out["size"] = out["members"].size();
    emit(out);
    return 0;
  }

  if (component->parsed()) {
    const int sources = !group.empty() + !descriptor_path.empty() + !exp_of.empty();
    if (sources != 1) throw UsageError("component needs exactly one of --group, --descriptor, --exp-of");
    if (!sub_arg.empty() && group.empty()) throw UsageError("--sub needs --group");
    GroupFamily fam;
    json out;
    if (!exp_of.empty()) {
      fam.kind = GroupFamily::Kind::ExpFinitary;
      fam.cardinality = CardinalToken::parse(exp_of);
      out["family"] = "exp B_G";
    } else if (!descriptor_path.empty()) {
      fam = family_of(io::descriptor_from_json(load_json_file(descriptor_path)));
    } else {
      auto ctx = io::parse_group(group);
      if (const auto* f = std::get_if<io::FreeAbelian>(&ctx)) fam = {GroupFamily::Kind::IntegersPower, f->rank, 1, {}};
      else if (const auto* p = std::get_if<io::PruferGroup>(&ctx)) fam = {GroupFamily::Kind::Prufer, p->prime, 1, {}};
      else fam = {GroupFamily::Kind::Finite, 0, static_cast<std::uint64_t>(std::get<FiniteAbelianGroup>(ctx).order()), {}};
      out["group"] = io::format_group(ctx);
      if (!sub_arg.empty()) {
        auto v = io::parse_subgroup(sub_arg, ctx);
        json s = subgroup_json(v);
        if (const auto* l = std::get_if<Lattice>(&v)) {
          s["singleton_component"] = l->is_trivial();
          s["saturation"] = io::format_subgroup(saturation(*l));
        } else if (const auto* h = std::get_if<PruferSubgroup>(&v)) {
          s["singleton_component"] = h->is_whole();
        } else {
          s["singleton_component"] = std::get<FAGSubgroup>(v).parent().order() == 1;
        }
        out["sub"] = s;
      }
    }
    auto census = component_census(fam);
    out["count"] = census.count.to_string();
    out["components"] = census.components;
    emit(out);
    return 0;
  }

  if (saturate->parsed()) {
    auto ctx = io::parse_group(group);
    if (!std::holds_alternative<io::FreeAbelian>(ctx)) throw std::invalid_argument("saturation is defined for subgroups of Z^n");
    auto v = io::parse_subgroup(sub_arg, ctx);
    const auto& h = std::get<Lattice>(v);
    auto sat = saturation(h);
    emit({{"sub", io::format_subgroup(h)},
          {"saturation", io::format_subgroup(sat)},
          {"lattice", io::lattice_json(sat)},
          {"index", io::extnat_json(h.is_trivial() ? ExtNat(1) : index_in(h, sat))}});
    return 0;
  }

  if (profile->parsed()) {
    auto d = io::descriptor_from_json(load_json_file(descriptor_path));
    json out = {{"descriptor", io::descriptor_json(d)},
                {"asdim", io::asdim_json(asdim_classify(d))},
                {"iso_points", io::iso_points_json(iso_points_classify(d))}};
    try {
      out["components"] = io::component_json(component_census(family_of(d)));
    } catch (const std::invalid_argument& e) {
      out["components"] = {{"error", e.what()}};
    }
    emit(out);
    return 0;
  }

  if (expball->parsed()) {
    emit(with_additive_group(group, window, [&](const auto& g) -> json {
      using G = std::decay_t<decltype(g)>;
      auto y = checked_subset(g, center);
      auto f = checked_subset(g, radius_arg);
      json out = {{"center", subset_json<G>(y)}, {"radius", subset_json<G>(f)}, {"kind", gexp ? "G-exp" : "exp"}};
      if (!member.empty()) {
        auto z = checked_subset(g, member);
        bool in = gexp ? g_exp_ball(g, y, f).count(z) > 0 : exp_ball_membership(g, z, y, f);
        out["member"] = subset_json<G>(z);
        out["contains"] = in;
        return out;
      }
      json members = json::array();
      if (gexp) {
        for (const auto& s : g_exp_ball(g, y, f)) members.push_back(subset_json<G>(s));
      } else {
        if (y != Subset<G>{g.zero()})
          throw std::invalid_argument("exp balls are enumerated around {0} only; pass --member to test another centre");
        for (const auto& s : exp_ball_enumerate_centered_identity(g, f)) members.push_back(subset_json<G>(s));
      }
      out["members"] = members;
      out["size"] = members.size();
      return out;
    }));
    return 0;
  }

  if (mu->parsed()) {
    const double b = log_base();
    emit(with_additive_group(group, window, [&](const auto& g) -> json {
      auto y = checked_subset(g, sets[0]);
      auto z = checked_subset(g, sets[1]);
      auto r = mu_set_distance(g, y, z);
      json out = io::distance_json(r.mu, b);
      out["single_set"] = io::distance_json(r.single_set, b);
      return out;
    }));
    return 0;
  }

  if (verify_cmd->parsed()) {
    verify::SuiteOptions opts;
    opts.seed = seed;
    if (*mc_opt) opts.max_coord = max_coord;
    if (!primes.empty()) opts.primes = primes;
    opts.log_base = base_arg;
    if (suite != "all") {
      auto r = verify::run_suite(suite, opts);
      emit(verify::report_json(r));
      return r.passed() ? 0 : 1;
    }
    std::vector<std::future<verify::SuiteReport>> jobs;
    for (const auto& name : verify::suite_names())
      jobs.push_back(std::async(std::launch::async, [name, opts] { return verify::run_suite(name, opts); }));
    json reports = json::array();
    std::size_t violations = 0;
    for (auto& j : jobs) {
      auto r = j.get();
      violations += r.violations;
      reports.push_back(verify::report_json(r));
    }
    emit({{"suites", reports}, {"violations", violations}, {"seed", seed}});
    return violations == 0 ? 0 : 1;
  }
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const io::BalleanLoadError& e) {
    std::cerr << "error: " << e.what() << " " << e.violation().dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
