#include <gtest/gtest.h>

#include <random>

#include "ballean/lattice.hpp"
#include "oracles.hpp"

using namespace ballean;

namespace {

Lattice L(std::size_t n, IntMatrix gens) { return Lattice::from_generators(n, gens); }
Lattice multiples(long k) { return L(1, IntMatrix{{k}}); }

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Lattice random_lattice(std::mt19937_64& rng, std::size_t n, std::size_t max_rows, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::uniform_int_distribution<std::size_t> rows(1, max_rows);
  IntMatrix g(rows(rng), n);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = d(rng);
  return L(n, g);
}

oracle::Mat to_oracle(const Lattice& l) {
  oracle::Mat m;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    oracle::Vec r;
    for (std::size_t j = 0; j < l.ambient_dim(); ++j) r.push_back(l.basis()(i, j).get_si());
    m.push_back(r);
  }
  return m;
}

} // namespace

TEST(Lattice, FromGenerators) {
  EXPECT_EQ(L(1, IntMatrix{{6}, {4}}).basis(), (IntMatrix{{2}}));
  EXPECT_EQ(L(2, IntMatrix{{2, 4}}).basis(), (IntMatrix{{2, 4}}));
  EXPECT_EQ(L(2, IntMatrix(0, 2)).rank(), 0u);
  EXPECT_THROW(L(3, IntMatrix{{1, 2}}), std::invalid_argument);
}

TEST(Lattice, Membership) {
  Lattice a = L(2, IntMatrix{{2, 0}, {0, 4}});
  EXPECT_TRUE(member(vec({4, 4}), a));
  EXPECT_FALSE(member(vec({1, 0}), a));
  EXPECT_TRUE(member(vec({0, 0}), Lattice(2)));
  EXPECT_FALSE(member(vec({0, 1}), Lattice(2)));
  EXPECT_THROW(member(vec({1}), a), std::invalid_argument);
}

TEST(Lattice, Sum) {
  EXPECT_EQ(lattice_sum(multiples(2), multiples(3)), Lattice::whole(1));
  EXPECT_EQ(lattice_sum(multiples(2), multiples(4)), multiples(2));
  EXPECT_EQ(lattice_sum(L(2, IntMatrix{{2, 0}}), L(2, IntMatrix{{0, 3}})), L(2, IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_THROW(lattice_sum(multiples(2), Lattice::whole(2)), std::invalid_argument);
}

TEST(Lattice, Intersection) {
  EXPECT_EQ(lattice_intersection(multiples(2), multiples(3)), multiples(6));
  Lattice a = L(2, IntMatrix{{2, 0}, {0, 1}}), b = L(2, IntMatrix{{1, 0}, {0, 2}});
  EXPECT_EQ(lattice_intersection(a, b), L(2, IntMatrix{{2, 0}, {0, 2}}));
  EXPECT_EQ(lattice_intersection(a, a), a);
}

TEST(Lattice, IntersectionMatchesBoxEnumeration) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    Lattice a = random_lattice(rng, 2, 2, 4), b = random_lattice(rng, 2, 2, 4);
    Lattice c = lattice_intersection(a, b);
    for (long x = -12; x <= 12; ++x)
      for (long y = -12; y <= 12; ++y) {
        auto v = vec({x, y});
        EXPECT_EQ(member(v, c), member(v, a) && member(v, b));
      }
  }
}

TEST(Lattice, Index) {
  EXPECT_EQ(index_in(multiples(6), multiples(2)), ExtNat(3));
  EXPECT_EQ(index_in(L(2, IntMatrix{{2, 0}, {0, 4}}), Lattice::whole(2)), ExtNat(8));
  EXPECT_TRUE(index_in(Lattice(1), Lattice::whole(1)).is_infinite());
  try {
    index_in(multiples(2), multiples(6));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not a subgroup"), std::string::npos);
  }
}

TEST(Lattice, IndexIsMultiplicative) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 60; ++t) {
    Lattice c = random_lattice(rng, 2, 3, 5);
    if (c.rank() < 2) continue;
    Lattice b = lattice_intersection(c, random_lattice(rng, 2, 3, 5));
    Lattice a = lattice_intersection(b, random_lattice(rng, 2, 3, 5));
    if (a.rank() < 2) continue;
    EXPECT_EQ(index_in(a, c), index_in(b, c) * index_in(a, b));
  }
}

TEST(Lattice, Saturation) {
  EXPECT_EQ(saturation(L(2, IntMatrix{{2, 4}})), L(2, IntMatrix{{1, 2}}));
  EXPECT_EQ(saturation(L(2, IntMatrix{{1, 2}})), L(2, IntMatrix{{1, 2}}));
  EXPECT_EQ(saturation(Lattice(2)), Lattice(2));
  EXPECT_EQ(saturation(L(3, IntMatrix{{2, 0, 0}, {0, 6, 3}})), L(3, IntMatrix{{1, 0, 0}, {0, 2, 1}}));
}

TEST(Lattice, SaturationIsPureWithFiniteIndex) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    Lattice h = random_lattice(rng, 3, 2, 6);
    Lattice s = saturation(h);
    EXPECT_EQ(s.rank(), h.rank());
    EXPECT_TRUE(index_in(h, s).is_finite());
    EXPECT_EQ(saturation(s), s);
    // pure: a small multiple inside s implies the vector is in s
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (long z = -3; z <= 3; ++z)
          for (long m = 2; m <= 3; ++m)
            if (member(vec({m * x, m * y, m * z}), s)) EXPECT_TRUE(member(vec({x, y, z}), s));
  }
}

TEST(Lattice, Commensurable) {
  EXPECT_TRUE(commensurable(multiples(2), multiples(3)));
  EXPECT_FALSE(commensurable(L(2, IntMatrix{{1, 0}}), L(2, IntMatrix{{0, 1}})));
  Lattice a = L(2, IntMatrix{{3, 1}});
  EXPECT_TRUE(commensurable(a, a));
}

TEST(Lattice, CommensurableIffSameSaturation) {
  std::mt19937_64 rng(24);
  int both = 0;
  for (int t = 0; t < 150; ++t) {
    Lattice a = random_lattice(rng, 3, 3, 4), b = random_lattice(rng, 3, 3, 4);
    if (t % 3 == 0) b = lattice_intersection(a, random_lattice(rng, 3, 3, 4));
    bool c = commensurable(a, b);
    both += c;
    EXPECT_EQ(c, saturation(a) == saturation(b));
  }
  EXPECT_GT(both, 0);
}

TEST(Lattice, LogDistanceExamples) {
  EXPECT_EQ(log_subgroup_distance(multiples(2), multiples(3)), ExtNat(3));
  Lattice a = L(2, IntMatrix{{2, 0}, {0, 1}}), b = L(2, IntMatrix{{1, 0}, {0, 2}});
  EXPECT_EQ(log_subgroup_distance(a, b), ExtNat(2));
  EXPECT_EQ(log_subgroup_distance(a, a), ExtNat(1));
  EXPECT_TRUE(log_subgroup_distance(Lattice(1), multiples(5)).is_infinite());
  EXPECT_NEAR(log_subgroup_distance(multiples(2), multiples(3)).log(), std::log(3.0), 1e-12);
}

TEST(Lattice, LogDistanceMatchesResidueCounting) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 80; ++t) {
    Lattice a = random_lattice(rng, 2, 3, 6), b = random_lattice(rng, 2, 3, 6);
    if (a.rank() < 2 || b.rank() < 2) continue;
    auto oa = to_oracle(a), ob = to_oracle(b);
    long expected = std::max(oracle::index_by_residues(oa, ob), oracle::index_by_residues(ob, oa));
    EXPECT_EQ(log_subgroup_distance(a, b), ExtNat(expected));
  }
}

TEST(ExtNat, ArithmeticAndOrder) {
  EXPECT_THROW(ExtNat(0), std::invalid_argument);
  EXPECT_LT(ExtNat(5), ExtNat::infinity());
  EXPECT_EQ(ExtNat(3) * ExtNat::infinity(), ExtNat::infinity());
  EXPECT_EQ(ExtNat(3) * ExtNat(4), ExtNat(12));
  EXPECT_EQ(max(ExtNat(2), ExtNat(7)), ExtNat(7));
  EXPECT_EQ(ExtNat::infinity().to_string(), "inf");
  EXPECT_THROW(ExtNat::infinity().value(), std::logic_error);
  EXPECT_DOUBLE_EQ(ExtNat(1).log(), 0.0);
}
