#include <gtest/gtest.h>

#include "rvdkit/audit.hpp"

using namespace rvd;

namespace {

const CheckResult& find(const AuditReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(Audit, TreesAtOrderFour) {
  AuditOptions opt;
  opt.checks = {"rvd1"};
  auto r = audit(4, opt);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, CheckStatus::Pass);
  EXPECT_NE(r.checks[0].detail.find("n=4: 2 trees among 6 graphs"), std::string::npos);
  EXPECT_EQ(r.cells.at({4, 1}), 2);
}

TEST(Audit, BoundsAtOrderThree) {
  AuditOptions opt;
  opt.checks = {"bounds"};
  auto r = audit(3, opt);
  EXPECT_TRUE(r.passed());
  // K_3 has upper connectivity 2 and rvd 2.
  EXPECT_EQ(r.cells.at({3, 2}), 1);
  EXPECT_EQ(upper_connectivity(complete_graph(3)), 2);
}

TEST(Audit, OrderFiveEveryCheckButMaxSize) {
  auto r = audit(5);
  EXPECT_EQ(r.checks.size(), audit_check_names().size());
  for (const auto& c : r.checks) {
    if (c.name == "max-size") continue;
    EXPECT_EQ(c.status, CheckStatus::Pass) << c.name << ": " << c.detail;
  }
  // The k = 3 maximum is not reached at order 4 (K_4 - e has 5 edges).
  const auto& max = find(r, "max-size");
  EXPECT_EQ(max.status, CheckStatus::Fail);
  EXPECT_FALSE(max.counterexample.empty());
  EXPECT_NO_THROW(parse_graph6(max.counterexample));
  EXPECT_NE(max.detail.find("n=4 k=3"), std::string::npos);
}

TEST(Audit, BudgetMarksSkipped) {
  AuditOptions opt;
  opt.checks = {"oracle"};
  opt.budget_seconds = 0;
  auto r = audit(5, opt);
  EXPECT_EQ(r.checks[0].status, CheckStatus::Skipped);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.failed());
}

TEST(Audit, UnknownCheckRejected) {
  AuditOptions opt;
  opt.checks = {"nonsense"};
  EXPECT_THROW(audit(3, opt), std::invalid_argument);
  EXPECT_THROW(audit(8), std::invalid_argument);
}

TEST(Audit, ParallelCatalogMatchesSerial) {
  auto serial = build_catalog(6, {}, 1);
  auto parallel = build_catalog(6, {}, 3);
  ASSERT_EQ(serial.by_order.size(), parallel.by_order.size());
  for (auto& [n, entries] : serial.by_order) {
    const auto& other = parallel.by_order.at(n);
    ASSERT_EQ(entries.size(), other.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      EXPECT_EQ(entries[i].graph6, other[i].graph6);
      EXPECT_EQ(entries[i].rvd, other[i].rvd);
    }
  }
}

TEST(Audit, ExternalGraphsSkipExtremalCells) {
  std::vector<Graph> graphs{petersen_graph(), wheel_graph(8)};
  SolverOptions solver;
  solver.cap = 10;
  AuditOptions opt;
  opt.checks = {"bounds", "girth", "min-size"};
  auto r = audit(build_catalog(graphs, solver, 1), opt);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(find(r, "min-size").detail.find("not exhaustive"), std::string::npos);
  EXPECT_EQ(r.cells.at({10, 4}), 1);
  EXPECT_EQ(r.cells.at({9, 3}), 1);
}

TEST(Audit, JsonShape) {
  AuditOptions opt;
  opt.checks = {"kappa", "max-size"};
  auto j = audit(4, opt).to_json();
  EXPECT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_TRUE(j["checks"][1].contains("counterexample"));
  EXPECT_EQ(j["orders"][1], 4);
  EXPECT_FALSE(j["passed"].get<bool>());
}
