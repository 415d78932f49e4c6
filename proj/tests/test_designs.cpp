#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ekr/designs.hpp"
#include "ekr/error.hpp"
#include "ekr/parameters.hpp"
#include "support.hpp"

using namespace ekr;
using support::lattice;

namespace {

// Number of Fano lines (as bitmasks) containing every point of `mask`.
long long fano_count(unsigned mask) {
  long long n = 0;
  for (int x = 0; x < 7; ++x) {
    const unsigned line = (1U << x) | (1U << ((x + 1) % 7)) | (1U << ((x + 3) % 7));
    n += (line & mask) == mask;
  }
  return n;
}

DesignCertificate parse_design(const std::string& text) {
  std::istringstream in(text);
  return read_design(in);
}

}  // namespace

TEST(IsDesign, FanoStrengthTwo) {
  const auto l = lattice("johnson:v=7,m=3");
  const auto cert = support::fano();
  // oracle: every pair lies on the same number of lines
  std::set<long long> counts;
  for (unsigned pair : oracle::subsets(7, 2)) counts.insert(fano_count(pair));
  ASSERT_EQ(counts.size(), 1U);
  const auto check = is_design(l, cert.elements, 2);
  ASSERT_TRUE(check.index);
  EXPECT_EQ(*check.index, *counts.begin());
}

TEST(IsDesign, FanoIsNotStrengthThree) {
  const auto l = lattice("johnson:v=7,m=3");
  const auto check = is_design(l, support::fano().elements, 3);
  EXPECT_FALSE(check.index);
  ASSERT_TRUE(check.low && check.high);
  EXPECT_NE(check.low_count, check.high_count);
  // the witness counts are what the oracle says for those triples
  auto mask = [&](const Element& e) {
    unsigned m = 0;
    for (int p : std::get<Subset>(e.payload).items) m |= 1U << (p - 1);
    return m;
  };
  EXPECT_EQ(static_cast<long long>(check.low_count), fano_count(mask(*check.low)));
  EXPECT_EQ(static_cast<long long>(check.high_count), fano_count(mask(*check.high)));
}

TEST(IsDesign, FullHammingFiber) {
  const auto l = lattice("hamming:m=2,n=5");
  const auto check = is_design(l, l.enumerate_fiber(2), 2);
  ASSERT_TRUE(check.index);
  EXPECT_EQ(*check.index, 1);
}

TEST(IsDesign, Errors) {
  const auto l = lattice("johnson:v=7,m=3");
  EXPECT_THROW(is_design(l, {}, 1), DomainError);
  const std::vector<Element> low{l.parse("1 2")};
  EXPECT_THROW(is_design(l, low, 1), DomainError);
  const std::vector<Element> dup{l.parse("1 2 3"), l.parse("1 2 3")};
  EXPECT_THROW(is_design(l, dup, 1), DomainError);
  EXPECT_THROW(is_design(l, support::fano().elements, 4), DomainError);
  EXPECT_THROW(is_design(l, support::fano().elements, 2, 10), BudgetExceeded);
}

TEST(DeriveIndex, Examples) {
  const auto j = parse_family("johnson:v=7,m=3");
  EXPECT_EQ(derive_index(j, 1, 2, 1), fano_count(1U));
  EXPECT_EQ(derive_index(j, 1, 2, 2), 1);
  EXPECT_EQ(derive_index(j, 1, 2, 0), static_cast<long long>(oracle::fano_lines().size()));
  const auto h = parse_family("hamming:m=3,n=4");
  for (int t = 0; t <= 3; ++t) EXPECT_EQ(derive_index(h, theta(h, 3), 3, t), theta(h, t));
  EXPECT_THROW(derive_index(j, 1, 2, 3), DomainError);
}

TEST(DeriveIndex, NonIntegralThrows) {
  // lambda_2 = 1 in johnson v=8,m=3 would force lambda_1 = 21/6.
  EXPECT_THROW(derive_index(parse_family("johnson:v=8,m=3"), 1, 2, 1), DomainError);
}

TEST(Star, Examples) {
  const auto l = lattice("johnson:v=7,m=3");
  const auto cert = support::fano();
  const auto s1 = star(l, cert.elements, l.parse("1"));
  EXPECT_EQ(static_cast<long long>(s1.members.size()), fano_count(1U));
  for (const auto& x : s1.members) EXPECT_TRUE(l.leq(l.parse("1"), x));
  EXPECT_TRUE(std::is_sorted(s1.members.begin(), s1.members.end()));
  EXPECT_EQ(star(l, cert.elements, l.least()).members, cert.elements);
  const auto top = star(l, cert.elements, cert.elements[2]);
  ASSERT_EQ(top.members.size(), 1U);
  EXPECT_EQ(top.members[0], cert.elements[2]);
}

TEST(FullFiber, Examples) {
  const auto a = support::full("johnson:v=5,m=2");
  EXPECT_EQ(a.elements.size(), oracle::subsets(5, 2).size());
  EXPECT_EQ(a.index(1), oracle::choose(4, 1));
  const auto b = support::full("hamming:m=2,n=5");
  EXPECT_EQ(b.elements.size(), 25U);
  EXPECT_EQ(b.index(2), 1);
  const auto c = support::full("grassmann:v=4,m=2,q=2");
  EXPECT_EQ(c.elements.size(), oracle::subspaces(2, 4, 2).size());
  EXPECT_EQ(c.index(1), BigInt(oracle::subspaces(2, 3, 1).size()));
  EXPECT_THROW(full_fiber(lattice("johnson:v=40,m=12"), 1000), BudgetExceeded);
}

TEST(LinearOa, Examples) {
  const auto oa3 = generate_linear_oa(3, 3);
  EXPECT_EQ(oa3.elements.size(), 9U);
  EXPECT_EQ(oa3.strength, 2);
  EXPECT_EQ(oa3.index(2), 1);
  const auto oa11 = generate_linear_oa(11, 3);
  EXPECT_EQ(oa11.elements.size(), 121U);
  EXPECT_EQ(oa11.index(2), 1);
  const auto oa2 = generate_linear_oa(2, 2);
  const auto l = lattice("hamming:m=2,n=2");
  ASSERT_EQ(oa2.elements.size(), 2U);
  EXPECT_EQ(l.format(oa2.elements[0]), "1:0,2:0");
  EXPECT_EQ(l.format(oa2.elements[1]), "1:1,2:1");
  EXPECT_EQ(oa2.strength, 1);
  EXPECT_EQ(oa2.index(1), 1);
  EXPECT_THROW(generate_linear_oa(4, 3), DomainError);
  EXPECT_THROW(generate_linear_oa(3, 1), DomainError);
}

TEST(DesignFile, LoadsFanoAndRejectsBadFiles) {
  const auto cert = support::fano();
  EXPECT_EQ(cert.index(2), 1);
  EXPECT_THROW(parse_design("family johnson:v=7,m=3\nstrength 2\n1 2 4\n1 2 4\n"), ParseError);
  EXPECT_THROW(parse_design("family johnson:v=7,m=3\nstrength 3\n1 2 4\n1 3 7\n1 5 6\n2 3 5\n2 6 7\n3 4 6\n4 5 7\n"),
               VerificationError);
  EXPECT_THROW(parse_design("strength 2\nfamily johnson:v=7,m=3\n1 2 4\n"), ParseError);
  EXPECT_THROW(parse_design("family johnson:v=7,m=3\nstrength x\n1 2 4\n"), ParseError);
  EXPECT_THROW(parse_design("family johnson:v=7,m=3\nstrength 1\n1 2\n"), ParseError);
  EXPECT_THROW(parse_design("family johnson:v=7,m=3\nstrength 1\n"), ParseError);
  const auto commented = parse_design("# comment\nfamily hamming:m=2,n=2\n\nstrength 1\n1:0,2:0\n# x\n1:1,2:1\n");
  EXPECT_EQ(commented.elements.size(), 2U);
}

TEST(DesignFile, RoundTripIsByteIdentical) {
  for (const auto& cert : {support::fano(), generate_linear_oa(3, 3), support::full("bilinear:m=2,n=1,q=3"),
                           support::full("grassmann:v=4,m=2,q=4")}) {
    std::ostringstream first;
    write_design(cert, first);
    std::istringstream in(first.str());
    const auto again = read_design(in);
    std::ostringstream second;
    write_design(again, second);
    EXPECT_EQ(first.str(), second.str());
    EXPECT_EQ(again.indices, cert.indices);
  }
  const auto path = std::filesystem::temp_directory_path() / "ekr_roundtrip.design";
  save_design(support::fano(), path);
  EXPECT_EQ(load_design(path).elements, support::fano().elements);
  std::filesystem::remove(path);
  EXPECT_THROW(load_design("/nonexistent/x.design"), ParseError);
}

TEST(FamilyFile, HeaderMustMatch) {
  const auto l = lattice("johnson:v=7,m=3");
  std::istringstream ok("family johnson:v=7,m=3\n1 2 4\n# c\n1 3 7\n");
  EXPECT_EQ(read_family_file(l, ok).size(), 2U);
  std::istringstream bad("family johnson:v=8,m=3\n1 2 4\n");
  EXPECT_THROW(read_family_file(l, bad), ParseError);
}

// Recomputing the strength at every t' <= t gives the derived index.
TEST(DesignProperties, DerivedIndicesMatchRecount) {
  std::vector<DesignCertificate> certs{support::fano(), generate_linear_oa(3, 3), generate_linear_oa(5, 3),
                                       generate_linear_oa(3, 4)};
  for (const auto& text : support::small_specs()) certs.push_back(support::full(text));
  for (const auto& cert : certs) {
    SCOPED_TRACE(format_family(cert.spec));
    const Semilattice l(cert.spec);
    EXPECT_EQ(cert.index(0), BigInt(cert.elements.size()));
    for (int t = 0; t <= cert.strength; ++t) {
      const auto check = is_design(l, cert.elements, t);
      ASSERT_TRUE(check.index);
      EXPECT_EQ(*check.index, derive_index(cert.spec, cert.index(cert.strength), cert.strength, t));
      for (const auto& z : l.enumerate_fiber(t))
        ASSERT_EQ(BigInt(star(l, cert.elements, z).members.size()), cert.index(t));
    }
  }
}
