#include <gtest/gtest.h>

#include "ekr/audit.hpp"
#include "ekr/error.hpp"
#include "support.hpp"

using namespace ekr;

namespace {

void expect_clean(const AuditReport& report) {
  ASSERT_EQ(report.checks.size(), 8U);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.passed) << c.id << ": " << c.detail;
    EXPECT_GT(c.cases, 0U) << c.id;
    EXPECT_TRUE(c.counterexample.empty()) << c.id;
  }
  EXPECT_TRUE(report.passed());
}

}  // namespace

TEST(Audit, Examples) {
  expect_clean(audit(parse_family("johnson:v=5,m=2")));
  expect_clean(audit(parse_family("hamming:m=2,n=3")));
  const auto g = audit(parse_family("grassmann:v=4,m=2,q=2"));
  expect_clean(g);
  EXPECT_EQ(g.fiber_sizes.back(), oracle::subspaces(2, 4, 2).size());
}

TEST(Audit, CheckOrderIsFixed) {
  const auto report = audit(parse_family("signed:m=3,k=2"));
  const std::vector<std::string> ids{"partial-order", "meet-glb", "rank-covering", "mu",
                                     "nu",            "theta",    "alpha-lemma",   "join-rank"};
  ASSERT_EQ(report.checks.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(report.checks[i].id, ids[i]);
}

TEST(Audit, EveryFamilyPasses) {
  for (const auto& text : support::small_specs()) {
    SCOPED_TRACE(text);
    expect_clean(audit(parse_family(text)));
  }
  expect_clean(audit(parse_family("grassmann:v=4,m=2,q=4")));
}

TEST(Audit, DeterministicApartFromTiming) {
  const auto a = audit(parse_family("injection:m=3,n=4"));
  const auto b = audit(parse_family("injection:m=3,n=4"));
  ASSERT_EQ(a.checks.size(), b.checks.size());
  EXPECT_EQ(a.fiber_sizes, b.fiber_sizes);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].id, b.checks[i].id);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
    EXPECT_EQ(a.checks[i].cases, b.checks[i].cases);
  }
}

TEST(Audit, BudgetExceededNamesCheckAndFibers) {
  try {
    audit(parse_family("johnson:v=7,m=3"), {1000});
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("35"), std::string::npos) << what;
  }
  EXPECT_THROW(audit(parse_family("johnson:v=30,m=10")), BudgetExceeded);
}
