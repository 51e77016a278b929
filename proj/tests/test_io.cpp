#include <gtest/gtest.h>

#include "ballean/io/json.hpp"
#include "ballean/io/parse.hpp"
#include "ballean/verify.hpp"

using namespace ballean;
using namespace ballean::io;

TEST(ParseGroup, Forms) {
  EXPECT_EQ(std::get<FreeAbelian>(parse_group("Z")).rank, 1u);
  EXPECT_EQ(std::get<FreeAbelian>(parse_group("Z^3")).rank, 3u);
  EXPECT_EQ(std::get<FiniteAbelianGroup>(parse_group("Z(12)")).order(), 12);
  EXPECT_EQ(std::get<FiniteAbelianGroup>(parse_group("Z(2) + Z(4)")).cyclic_orders(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(std::get<FiniteAbelianGroup>(parse_group("Z(3^2)")).order(), 9);
  EXPECT_EQ(std::get<PruferGroup>(parse_group("Z(2^inf)")).prime, 2u);
  EXPECT_THROW(parse_group("Q"), ParseError);
  EXPECT_THROW(parse_group("Z(2)+"), ParseError);
  EXPECT_THROW(parse_group("Z(4^inf)"), std::invalid_argument);
  EXPECT_THROW(parse_group("Z^0"), std::invalid_argument);
}

TEST(ParseSubgroup, Examples) {
  auto six = std::get<Lattice>(parse_subgroup("6Z", FreeAbelian{1}));
  EXPECT_EQ(six.basis(), (IntMatrix{{6}}));
  auto h = std::get<PruferSubgroup>(parse_subgroup("H_3@2", PruferGroup{2}));
  EXPECT_EQ(h, PruferSubgroup::finite(2, 3));
  auto span = std::get<Lattice>(parse_subgroup("span[(2,4)]", FreeAbelian{2}));
  EXPECT_EQ(span.basis(), (IntMatrix{{2, 4}}));
  auto gen = std::get<FAGSubgroup>(parse_subgroup("gen{4}", parse_group("Z(12)")));
  EXPECT_EQ(gen.order(), 3);
  EXPECT_TRUE(std::get<Lattice>(parse_subgroup("0Z", FreeAbelian{1})).is_trivial());
}

TEST(ParseSubgroup, ErrorsSplitIntoSyntaxAndContext) {
  EXPECT_THROW(parse_subgroup("six", FreeAbelian{1}), ParseError);
  EXPECT_THROW(parse_subgroup("span[(1,2)", FreeAbelian{2}), ParseError);
  EXPECT_THROW(parse_subgroup("span[(1,2,3)]", FreeAbelian{2}), std::invalid_argument);
  EXPECT_THROW(parse_subgroup("H_2@3", PruferGroup{2}), std::invalid_argument);
  EXPECT_THROW(parse_subgroup("gen{1}", FreeAbelian{1}), std::invalid_argument);
  EXPECT_THROW(parse_subgroup("H_2@2", FreeAbelian{1}), std::invalid_argument);
}

TEST(FormatSubgroup, RoundTrips) {
  std::vector<std::pair<std::string, GroupContext>> cases{
      {"12Z", FreeAbelian{1}},
      {"0Z", FreeAbelian{1}},
      {"span[(2,4),(0,6)]", FreeAbelian{2}},
      {"span[(1,1,1)]", FreeAbelian{3}},
      {"gen{(1,2)}", parse_group("Z(2)+Z(4)")},
      {"gen{6}", parse_group("Z(12)")},
      {"H_4@3", PruferGroup{3}},
      {"whole@5", PruferGroup{5}},
  };
  for (const auto& [text, ctx] : cases) {
    auto v = parse_subgroup(text, ctx);
    auto printed = format_subgroup(v);
    EXPECT_EQ(parse_subgroup(printed, ctx), v) << text << " -> " << printed;
    EXPECT_EQ(format_subgroup(parse_subgroup(printed, ctx)), printed);
  }
  EXPECT_EQ(format_group(parse_group("Z^2")), "Z^2");
  EXPECT_EQ(format_group(parse_group("Z(7^inf)")), "Z(7^inf)");
}

TEST(ParseSubset, TuplesAndIntegers) {
  EXPECT_EQ(parse_subset("{0, 1, 11}"), (std::vector<std::vector<std::int64_t>>{{0}, {1}, {11}}));
  EXPECT_EQ(parse_subset("{(0,1),(-1,2)}"), (std::vector<std::vector<std::int64_t>>{{0, 1}, {-1, 2}}));
  EXPECT_TRUE(parse_subset("{}").empty());
  EXPECT_THROW(parse_subset("0,1"), ParseError);
}

TEST(Json, Distances) {
  auto j = distance_json(ExtNat(3), std::exp(1.0));
  EXPECT_EQ(j["mu"], 3);
  EXPECT_NEAR(j["log"].get<double>(), std::log(3.0), 1e-12);
  EXPECT_EQ(distance_json(ExtNat::infinity(), 2.0)["log"], "inf");
  mpz_class big("340282366920938463463374607431768211456");
  EXPECT_EQ(extnat_json(ExtNat(big)), big.get_str());
  EXPECT_EQ(integer_from_json(integer_json(big)), big);
}

TEST(Json, LatticeRoundTrip) {
  auto l = Lattice::from_generators(2, IntMatrix{{2, 4}, {0, 6}});
  EXPECT_EQ(lattice_from_json(lattice_json(l)), l);
  EXPECT_THROW(lattice_from_json(json::parse(R"({"ambient": 2, "basis": [[1]]})")), std::invalid_argument);
}

TEST(Json, BalleanRoundTripAndViolation) {
  auto b = coproduct_ballean({bounded_ballean({"a,b", "c"}), discrete_ballean({"d"})});
  auto again = ballean_from_json(ballean_json(b));
  EXPECT_EQ(again, b);
  json bad = json::parse(R"J({"support": ["a","b","c"], "radii": ["alpha"],
     "balls": {"(a,alpha)": ["a","b"], "(b,alpha)": ["a","b","c"], "(c,alpha)": ["b","c"]}})J");
  try {
    ballean_from_json(bad);
    FAIL();
  } catch (const BalleanLoadError& e) {
    EXPECT_EQ(e.violation()["axiom"], "upper_multiplicativity");
    EXPECT_EQ(e.violation()["point"], "a");
  }
  bad["balls"].erase("(c,alpha)");
  EXPECT_THROW(ballean_from_json(bad), std::invalid_argument);
}

TEST(Json, Reports) {
  EXPECT_EQ(asdim_json(AsdimReport::finite(2, "x"))["n"], 2);
  EXPECT_EQ(asdim_json(AsdimReport::unknown(2, "x"))["lower_bound"], 2);
  IsoPointsReport r{CardinalToken::two_to_the(CardinalToken::omega()), "w", true};
  EXPECT_EQ(iso_points_json(r)["size"], "2^omega");
  EXPECT_EQ(iso_points_json(r)["assumes_gch"], true);
}

TEST(VerifySuites, SmallRunsAreClean) {
  verify::SuiteOptions o;
  o.primes = {2, 3};
  o.max_coord = 4;
  for (const char* name : {"iota", "hamming", "tree", "mu-index"}) {
    auto r = verify::run_suite(name, o);
    EXPECT_TRUE(r.passed()) << name;
    EXPECT_GT(r.samples, 0u) << name;
  }
  EXPECT_THROW(verify::run_suite("nonsense", o), std::invalid_argument);
}
