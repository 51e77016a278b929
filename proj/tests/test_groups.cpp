#include <gtest/gtest.h>

#include "ballean/groups/finite_abelian.hpp"
#include "ballean/groups/prufer.hpp"
#include "oracles.hpp"

using namespace ballean;

namespace {

std::set<std::int64_t> encoded(const oracle::Group& og, const FAGSubgroup& s) {
  std::set<std::int64_t> out;
  for (const auto& x : s.elements()) out.insert(og.encode(x));
  return out;
}

} // namespace

TEST(FiniteAbelian, BasicArithmetic) {
  FiniteAbelianGroup g({2, 4});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.exponent(), 4);
  EXPECT_EQ(g.add({1, 3}, {1, 2}), (Element{0, 1}));
  EXPECT_EQ(g.neg({1, 1}), (Element{1, 3}));
  EXPECT_EQ(g.elements().size(), 8u);
  EXPECT_FALSE(g.is_element({2, 0}));
  EXPECT_THROW(FiniteAbelianGroup({0}), std::invalid_argument);
}

TEST(FiniteAbelian, SubgroupFromElements) {
  FiniteAbelianGroup z12({12});
  auto s = fag_subgroup_from_elements(z12, {{4}});
  EXPECT_EQ(s.order(), 3);
  EXPECT_EQ(s.elements(), (std::vector<Element>{{0}, {4}, {8}}));
  EXPECT_EQ(fag_subgroup_from_elements(z12, {}).order(), 1);
  FiniteAbelianGroup g({2, 4});
  EXPECT_EQ(fag_subgroup_from_elements(g, {{1, 0}, {0, 1}}).order(), 8);
  EXPECT_THROW(fag_subgroup_from_elements(z12, {{12}}), std::invalid_argument);
}

TEST(FiniteAbelian, LogDistanceExamples) {
  FiniteAbelianGroup z12({12});
  auto two = fag_subgroup_from_elements(z12, {{2}}), three = fag_subgroup_from_elements(z12, {{3}});
  EXPECT_EQ(fag_intersection(two, three).order(), 2);
  EXPECT_EQ(fag_log_distance(two, three), ExtNat(3));
  EXPECT_EQ(fag_log_distance(two, two), ExtNat(1));
  FiniteAbelianGroup v({2, 2});
  EXPECT_EQ(fag_log_distance(fag_subgroup_from_elements(v, {{1, 0}}), fag_subgroup_from_elements(v, {{0, 1}})), ExtNat(2));
  EXPECT_THROW(fag_log_distance(two, fag_subgroup_from_elements(v, {})), std::invalid_argument);
}

TEST(FiniteAbelian, SubgroupsMatchElementClosure) {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{12}, {2, 4}, {3, 9}, {2, 2, 2}, {6, 4}}) {
    FiniteAbelianGroup g(orders);
    oracle::Group og{orders};
    auto lib = all_subgroups(g);
    auto brute = oracle::all_subgroups(og);
    std::set<std::set<std::int64_t>> lib_sets;
    for (const auto& s : lib) {
      lib_sets.insert(encoded(og, s));
      EXPECT_EQ(static_cast<std::size_t>(s.order()), encoded(og, s).size());
    }
    EXPECT_EQ(lib_sets, std::set<std::set<std::int64_t>>(brute.begin(), brute.end())) << g.to_string();
  }
}

TEST(FiniteAbelian, DistanceMatchesElementCounting) {
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{12}, {2, 4}, {3, 9}}) {
    FiniteAbelianGroup g(orders);
    oracle::Group og{orders};
    auto subs = all_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        auto ea = encoded(og, a), eb = encoded(og, b);
        EXPECT_EQ(fag_log_distance(a, b), ExtNat(static_cast<long>(oracle::index_distance(ea, eb))));
        EXPECT_EQ(encoded(og, fag_intersection(a, b)), oracle::intersect(ea, eb));
        EXPECT_EQ(fag_contains(fag_sum(a, b), a), true);
      }
  }
}

TEST(FiniteAbelian, CanonicalGeneratorsRegenerate) {
  FiniteAbelianGroup g({4, 6});
  for (const auto& s : all_subgroups(g)) EXPECT_EQ(fag_subgroup_from_elements(g, s.canonical_generators()), s);
}

TEST(FiniteAbelian, CyclicSubgroupCount) {
  // Z(p)^2 has p+2 cyclic subgroups
  EXPECT_EQ(cyclic_subgroups(FiniteAbelianGroup({3, 3})).size(), 5u);
  EXPECT_EQ(cyclic_subgroups(FiniteAbelianGroup({12})).size(), 6u);
}

TEST(Prufer, Distances) {
  auto h = [](std::uint64_t n) { return PruferSubgroup::finite(2, n); };
  EXPECT_EQ(prufer_log_distance(h(3), h(5)), ExtNat(4));
  EXPECT_EQ(prufer_log_distance(h(4), h(4)), ExtNat(1));
  EXPECT_TRUE(prufer_log_distance(PruferSubgroup::whole(2), h(7)).is_infinite());
  EXPECT_EQ(prufer_log_distance(PruferSubgroup::whole(2), PruferSubgroup::whole(2)), ExtNat(1));
  EXPECT_THROW(prufer_log_distance(h(1), PruferSubgroup::finite(3, 1)), std::invalid_argument);
  EXPECT_THROW(PruferSubgroup::finite(4, 1), std::invalid_argument);
  EXPECT_EQ(prufer_log_distance(PruferSubgroup::finite(3, 0), PruferSubgroup::finite(3, 4)), ExtNat(81));
}

TEST(Prufer, IsometricToScaledNaturals) {
  for (std::uint64_t p : {2u, 3u, 5u})
    for (std::uint64_t i = 0; i < 8; ++i)
      for (std::uint64_t j = 0; j < 8; ++j) {
        mpz_class v;
        mpz_ui_pow_ui(v.get_mpz_t(), p, i > j ? i - j : j - i);
        EXPECT_EQ(prufer_log_distance(PruferSubgroup::finite(p, i), PruferSubgroup::finite(p, j)), ExtNat(v));
      }
}
