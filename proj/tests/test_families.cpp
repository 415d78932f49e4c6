#include <gtest/gtest.h>

#include <random>

#include "ekr/error.hpp"
#include "ekr/parameters.hpp"
#include "ekr/semilattice.hpp"
#include "support.hpp"

using namespace ekr;
using support::lattice;

TEST(FamilySpec, ParseAndFormat) {
  const FamilySpec j = parse_family("johnson:v=7,m=3");
  EXPECT_EQ(j.kind, FamilyKind::johnson);
  EXPECT_EQ(j.top_rank(), 3);
  EXPECT_EQ(parse_family("nbjohnson:k=2,n=3,m=4").top_rank(), 2);
  for (const char* text : {"johnson:v=7,m=3", "grassmann:v=4,m=2,q=2", "hamming:m=2,n=5", "bilinear:m=2,n=2,q=2",
                           "injection:m=3,n=5", "nbjohnson:m=4,n=3,k=2", "signed:m=5,k=2"})
    EXPECT_EQ(format_family(parse_family(text)), text);
}

TEST(FamilySpec, RejectsInvalid) {
  EXPECT_THROW(parse_family("johnson:v=5,m=3"), DomainError);
  EXPECT_THROW(parse_family("hamming:m=2,n=1"), DomainError);
  EXPECT_THROW(parse_family("injection:m=4,n=3"), DomainError);
  EXPECT_THROW(parse_family("signed:m=3,k=3"), DomainError);
  EXPECT_THROW(parse_family("grassmann:v=4,m=2,q=6"), DomainError);
  EXPECT_THROW(parse_family("johnson:v=7"), ParseError);
  EXPECT_THROW(parse_family("johnson:v=7,m=3,q=2"), ParseError);
  EXPECT_THROW(parse_family("johnson:v=7,v=8,m=3"), ParseError);
  EXPECT_THROW(parse_family("cube:m=3"), ParseError);
  EXPECT_THROW(parse_family("johnson:v=x,m=3"), ParseError);
}

TEST(Rank, Examples) {
  const auto j = lattice("johnson:v=7,m=3");
  EXPECT_EQ(j.rank(j.parse("1 3 5")), 3);
  const auto g = lattice("grassmann:v=4,m=2,q=2");
  EXPECT_EQ(g.rank(g.least()), 0);
  EXPECT_EQ(g.format(g.least()), "-");
  const auto h = lattice("hamming:m=3,n=5");
  EXPECT_EQ(h.rank(h.parse("1:4,3:2")), 2);
}

TEST(Meet, Examples) {
  const auto j = lattice("johnson:v=7,m=3");
  EXPECT_EQ(j.format(j.meet(j.parse("1 2 3"), j.parse("2 3 4"))), "2 3");
  const auto h = lattice("hamming:m=2,n=5");
  EXPECT_EQ(h.format(h.meet(h.parse("1:0,2:3"), h.parse("1:0,2:4"))), "1:0");

  // grassmann: the common vectors of the two spans, found by the oracle.
  const auto g = lattice("grassmann:v=4,m=2,q=2");
  const auto a = oracle::span({oracle::code({1, 0, 0, 0}, 2), oracle::code({0, 1, 0, 0}, 2)}, 2, 4);
  const auto b = oracle::span({oracle::code({0, 1, 0, 0}, 2), oracle::code({0, 0, 1, 0}, 2)}, 2, 4);
  oracle::Space common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  ASSERT_EQ(common, oracle::span({oracle::code({0, 1, 0, 0}, 2)}, 2, 4));
  EXPECT_EQ(g.format(g.meet(g.parse("1.0.0.0;0.1.0.0"), g.parse("0.1.0.0;0.0.1.0"))), "0.1.0.0");
}

TEST(Meet, FamilyMismatchThrows) {
  const auto a = lattice("johnson:v=7,m=3");
  const auto b = lattice("johnson:v=8,m=3");
  EXPECT_THROW(a.meet(a.parse("1 2 3"), b.parse("1 2 3")), DomainError);
  EXPECT_THROW(a.leq(a.parse("1 2 3"), b.parse("1 2 3")), DomainError);
}

TEST(Leq, Examples) {
  const auto j = lattice("johnson:v=7,m=3");
  EXPECT_TRUE(j.leq(j.parse("1 2"), j.parse("1 2 3")));
  EXPECT_FALSE(j.leq(j.parse("1 4"), j.parse("1 2 3")));
  const auto h = lattice("hamming:m=2,n=5");
  EXPECT_FALSE(h.leq(h.parse("1:0"), h.parse("1:1,2:0")));
}

TEST(Join, Examples) {
  const auto j = lattice("johnson:v=7,m=3");
  const auto u = j.join_bounded(j.parse("1 2"), j.parse("2 3"));
  ASSERT_TRUE(u);
  EXPECT_EQ(j.format(*u), "1 2 3");
  EXPECT_FALSE(j.join_bounded(j.parse("1 2"), j.parse("3 4")));
  const auto h = lattice("hamming:m=2,n=5");
  EXPECT_FALSE(h.join_bounded(h.parse("1:0"), h.parse("1:1")));
}

TEST(Fiber, Examples) {
  EXPECT_EQ(static_cast<long long>(lattice("johnson:v=4,m=2").enumerate_fiber(2).size()),
            static_cast<long long>(oracle::subsets(4, 2).size()));
  EXPECT_EQ(lattice("grassmann:v=4,m=2,q=2").enumerate_fiber(1).size(), oracle::subspaces(2, 4, 1).size());
  EXPECT_EQ(static_cast<long long>(lattice("signed:m=3,k=2").enumerate_fiber(2).size()),
            oracle::count_maps(3, oracle::range(1, 3), 2, false, [](int p, int v) { return p != v; }));
  EXPECT_THROW(lattice("johnson:v=7,m=3").enumerate_fiber(4), DomainError);
}

TEST(Codec, Rejections) {
  EXPECT_THROW(lattice("signed:m=3,k=2").parse("2:2"), ParseError);
  EXPECT_THROW(lattice("johnson:v=7,m=3").parse("3 1"), ParseError);
  EXPECT_THROW(lattice("johnson:v=7,m=3").parse("1 2 8"), ParseError);
  EXPECT_THROW(lattice("johnson:v=7,m=3").parse("1 2 3 4"), ParseError);
  EXPECT_THROW(lattice("johnson:v=7,m=3").parse("1 1"), ParseError);
  EXPECT_THROW(lattice("hamming:m=2,n=5").parse("1:5"), ParseError);
  EXPECT_THROW(lattice("hamming:m=2,n=5").parse("2:0,1:0"), ParseError);
  EXPECT_THROW(lattice("injection:m=3,n=5").parse("1:2,2:2"), ParseError);
  EXPECT_THROW(lattice("injection:m=3,n=5").parse("1:0"), ParseError);
  EXPECT_THROW(lattice("grassmann:v=4,m=2,q=2").parse("1.1.0.0;1.0.0.0"), ParseError);
  EXPECT_THROW(lattice("grassmann:v=4,m=2,q=2").parse("1.0.2.0"), ParseError);
  EXPECT_THROW(lattice("bilinear:m=2,n=2,q=2").parse("E=1.0;f=1"), ParseError);
  EXPECT_THROW(lattice("johnson:v=7,m=3").parse(""), ParseError);
}

TEST(Codec, GrammarSamples) {
  const auto b = lattice("bilinear:m=2,n=2,q=2");
  const auto x = b.parse("E=1.0;f=1.1");
  EXPECT_EQ(b.rank(x), 1);
  EXPECT_EQ(b.format(x), "E=1.0;f=1.1");
  const auto g = lattice("grassmann:v=4,m=2,q=4");
  EXPECT_EQ(g.rank(g.parse("1.0.3.2;0.1.1.0")), 2);
}

// ---- exhaustive properties over small instances ----

namespace {

long long oracle_fiber_count(const FamilySpec& s, int i) {
  switch (s.kind) {
    case FamilyKind::johnson: return static_cast<long long>(oracle::subsets(s.v, i).size());
    case FamilyKind::grassmann: return static_cast<long long>(oracle::subspaces(s.q, s.v, i).size());
    case FamilyKind::hamming:
    case FamilyKind::nbjohnson:
      return oracle::count_maps(s.m, oracle::range(0, s.n - 1), i, false, [](int, int) { return true; });
    case FamilyKind::injection:
      return oracle::count_maps(s.m, oracle::range(1, s.n), i, true, [](int, int) { return true; });
    case FamilyKind::signed_sets:
      return oracle::count_maps(s.m, oracle::range(1, s.m), i, false, [](int p, int v) { return p != v; });
    case FamilyKind::bilinear: {
      // graphs of linear maps: i-subspaces of GF(q)^(m+n) meeting 0 x F trivially
      long long count = 0;
      const long long f_size = oracle::ipow(s.q, s.n);
      for (const auto& sp : oracle::subspaces(s.q, s.m + s.n, i)) {
        bool trivial = true;
        for (int x : sp)
          if (x != 0 && x < f_size) trivial = false;  // first m coordinates zero
        count += trivial;
      }
      return count;
    }
  }
  return -1;
}

}  // namespace

TEST(FamilyProperties, FiberCountsMatchOracleAndAlpha) {
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    const auto l = lattice(text);
    for (int i = 0; i <= l.top_rank(); ++i) {
      const auto fiber = l.enumerate_fiber(i);
      EXPECT_EQ(BigInt(fiber.size()), alpha(l.spec(), 0, i));
      EXPECT_EQ(static_cast<long long>(fiber.size()), oracle_fiber_count(l.spec(), i));
      EXPECT_TRUE(std::is_sorted(fiber.begin(), fiber.end()));
      EXPECT_TRUE(std::adjacent_find(fiber.begin(), fiber.end()) == fiber.end());
      for (const auto& x : fiber) ASSERT_EQ(l.rank(x), i);
    }
  }
}

TEST(FamilyProperties, CodecRoundTrip) {
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    const auto l = lattice(text);
    for (const auto& x : support::all_elements(l)) ASSERT_EQ(l.parse(l.format(x)), x) << l.format(x);
  }
}

TEST(FamilyProperties, MeetAlgebraOnRandomTriples) {
  std::mt19937 rng(2024);
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    const auto l = lattice(text);
    const auto xs = support::all_elements(l);
    std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto &x = xs[pick(rng)], &y = xs[pick(rng)], &z = xs[pick(rng)];
      const auto m = l.meet(x, y);
      ASSERT_EQ(l.meet(x, x), x);
      ASSERT_EQ(m, l.meet(y, x));
      ASSERT_EQ(l.meet(m, z), l.meet(x, l.meet(y, z)));
      ASSERT_LE(l.rank(m), std::min(l.rank(x), l.rank(y)));
      ASSERT_TRUE(l.leq(m, x));
      ASSERT_TRUE(l.leq(m, y));
    }
  }
}

TEST(FamilyProperties, LeqAgreesWithMeet) {
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    const auto l = lattice(text);
    const auto xs = support::all_elements(l);
    for (const auto& x : xs)
      for (const auto& y : xs) ASSERT_EQ(l.leq(x, y), l.meet(x, y) == x);
  }
}

TEST(FamilyProperties, MeetIsGreatestLowerBoundAndJoinIsLeastUpperBound) {
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    const auto l = lattice(text);
    const auto xs = support::all_elements(l);
    if (xs.size() > 200) continue;
    const std::size_t n = xs.size();
    std::vector<std::vector<char>> le(n, std::vector<char>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) le[a][b] = l.leq(xs[a], xs[b]);
    auto index_of = [&](const Element& e) {
      return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), e, [&](const Element& p, const Element& q) {
                                        return l.rank(p) != l.rank(q) ? l.rank(p) < l.rank(q) : p < q;
                                      }) -
                                      xs.begin());
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t m = index_of(l.meet(xs[a], xs[b]));
        ASSERT_EQ(xs[m], l.meet(xs[a], xs[b]));
        bool has_upper = false;
        for (std::size_t z = 0; z < n; ++z) {
          if (le[z][a] && le[z][b]) ASSERT_TRUE(le[z][m]);
          if (le[a][z] && le[b][z]) has_upper = true;
        }
        const auto join = l.join_bounded(xs[a], xs[b]);
        ASSERT_EQ(join.has_value(), has_upper) << l.format(xs[a]) << " v " << l.format(xs[b]);
        if (!join) continue;
        const std::size_t j = index_of(*join);
        ASSERT_EQ(xs[j], *join);
        ASSERT_EQ(l.rank(*join), l.rank(xs[a]) + l.rank(xs[b]) - l.rank(xs[m]));
        for (std::size_t z = 0; z < n; ++z)
          if (le[a][z] && le[b][z]) ASSERT_TRUE(le[j][z]);
      }
  }
}
