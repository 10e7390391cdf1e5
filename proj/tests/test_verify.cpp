// Verification suite: registry contents, coverage, status rules,
// determinism, filtering and report serialization.

#include "factorial_transforms/verify/registry.hpp"
#include "factorial_transforms/verify/report.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>

using namespace ft::verify;

TEST(Registry, ContainsNamedChecks) {
  const auto& checks = list_checks();
  EXPECT_GE(checks.size(), 30u);
  EXPECT_NE(find_check("eq10_reflection"), nullptr);
  EXPECT_NE(find_check("table3_gamma_row"), nullptr);
  EXPECT_NE(find_check("eq39_charlier_orthogonality"), nullptr);
  EXPECT_NE(find_check("eq91_bernoulli_structure"), nullptr);
  EXPECT_NE(find_check("table3_cos_row"), nullptr);
}

TEST(Registry, NamesUniqueAndWellFormed) {
  std::set<std::string> seen;
  for (const auto& c : list_checks()) {
    EXPECT_TRUE(seen.insert(c.name).second) << c.name;
    EXPECT_FALSE(c.description.empty()) << c.name;
    EXPECT_TRUE(c.body) << c.name;
    if (c.informational) {
      EXPECT_TRUE(std::isinf(c.tolerance)) << c.name;
    } else if (c.layer == Layer::exact) {
      EXPECT_EQ(c.tolerance, 0.0) << c.name;
    } else {
      EXPECT_GT(c.tolerance, 0.0) << c.name;
      EXPECT_LE(c.tolerance, 1e-6) << c.name;
    }
  }
}

TEST(Registry, OrderIsDeterministic) {
  const auto& a = list_checks();
  const auto& b = list_checks();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
}

TEST(Coverage, EveryInScopeItemHasARegisteredCheck) {
  std::set<std::string> items;
  for (const auto& item : coverage_table()) {
    EXPECT_TRUE(items.insert(item.item).second) << "duplicate coverage item " << item.item;
    ASSERT_FALSE(item.checks.empty()) << item.item;
    for (const char* name : item.checks) EXPECT_NE(find_check(name), nullptr) << item.item << " -> " << name;
  }
  // In-scope equation numbers: 1-41, 43-63, 67, 69, 70, 78-80, 84, 90, 91.
  std::vector<int> equations;
  for (int n = 1; n <= 63; ++n) {
    if (n != 42) equations.push_back(n);
  }
  for (int n : {69, 70, 78, 79, 80, 84, 90, 91}) equations.push_back(n);
  for (int n : equations) EXPECT_TRUE(items.count("Eq. (" + std::to_string(n) + ")")) << "Eq. (" << n << ")";
  EXPECT_TRUE(items.count("Eq. (67) first equality"));
  EXPECT_TRUE(items.count("Table 2 row 1"));
  EXPECT_TRUE(items.count("Table 2 row 2"));
  int table3_rows = 0;
  for (const auto& i : items) table3_rows += i.rfind("Table 3 row ", 0) == 0;
  EXPECT_EQ(table3_rows, 15);
}

TEST(Coverage, EveryCheckIsReferencedOrInformational) {
  std::set<std::string> referenced;
  for (const auto& item : coverage_table()) {
    for (const char* n : item.checks) referenced.insert(n);
  }
  for (const auto& c : list_checks()) {
    EXPECT_TRUE(referenced.count(c.name) || c.informational) << c.name;
  }
}

TEST(Runner, UnknownNameThrows) { EXPECT_THROW(run_check("eq999_nothing", 1), UnknownCheck); }

TEST(Runner, StatusRules) {
  CheckSpec exact{"x_exact", Layer::exact, "d", 0.0, false, [](Rng&) { return Outcome{5, 1, 2.0, ""}; }};
  EXPECT_EQ(run_check(exact, 1).status, Status::fail);
  exact.body = [](Rng&) { return Outcome{5, 0, 0.0, ""}; };
  EXPECT_EQ(run_check(exact, 1).status, Status::pass);

  CheckSpec numeric{"x_num", Layer::numeric, "d", 1e-8, false, [](Rng&) { return Outcome{3, 0, 2e-8, ""}; }};
  EXPECT_EQ(run_check(numeric, 1).status, Status::fail);
  numeric.body = [](Rng&) { return Outcome{3, 0, 1e-8, ""}; };
  EXPECT_EQ(run_check(numeric, 1).status, Status::pass);

  CheckSpec info{"x_info", Layer::numeric, "d", tolerance::informational, true,
                 [](Rng&) { return Outcome{3, 0, 5.0, "big"}; }};
  auto r = run_check(info, 1);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.max_abs_error, 5.0);
  EXPECT_EQ(r.note, "big");
}

TEST(Runner, ExceptionsBecomeErrorReports) {
  CheckSpec boom{"x_boom", Layer::numeric, "d", 1e-8, false,
                 [](Rng&) -> Outcome { throw std::runtime_error("kaboom"); }};
  CheckReport r;
  EXPECT_NO_THROW(r = run_check(boom, 3));
  EXPECT_EQ(r.status, Status::error);
  EXPECT_EQ(r.note, "kaboom");
}

TEST(Runner, GlobFilter) {
  EXPECT_TRUE(glob_match("eq1*", "eq16_fft_derivative_commutation"));
  EXPECT_FALSE(glob_match("eq1*", "eq20_antiderivative_kernel_relative"));
  EXPECT_TRUE(glob_match("table3_?os_row", "table3_cos_row"));
  EXPECT_TRUE(glob_match("*", ""));
  EXPECT_FALSE(glob_match("a?", "a"));
  auto reports = run_all(std::string("eq1*"), 42);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_EQ(r.name.rfind("eq1", 0), 0u) << r.name;
}

TEST(Runner, DeterministicAcrossRunsAndParallelism) {
  auto a = run_all(std::string("eq[!]*"), 7);  // no match: '[' is literal
  EXPECT_TRUE(a.empty());
  const std::string filter = "eq5*";
  auto serial = run_all(filter, 1234, false);
  auto again = run_all(filter, 1234, false);
  auto parallel = run_all(filter, 1234, true);
  ASSERT_EQ(serial.size(), again.size());
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    for (const auto* other : {&again[i], &parallel[i]}) {
      EXPECT_EQ(serial[i].name, other->name);
      EXPECT_EQ(serial[i].status, other->status);
      EXPECT_EQ(serial[i].max_abs_error, other->max_abs_error);
      EXPECT_EQ(serial[i].trials, other->trials);
      EXPECT_EQ(serial[i].seed, other->seed);
      EXPECT_EQ(serial[i].note, other->note);
    }
  }
}

TEST(Runner, SpecExamples) {
  auto orth = run_check("eq39_charlier_orthogonality", 5);
  EXPECT_EQ(orth.status, Status::pass);
  EXPECT_LE(orth.max_abs_error, 1e-8);
  auto bern = run_check("eq91_bernoulli_structure", 5);
  EXPECT_EQ(bern.status, Status::pass);
  EXPECT_EQ(bern.max_abs_error, 0.0);
  auto cos_row = run_check("table3_cos_row", 5);
  EXPECT_EQ(cos_row.status, Status::pass);
  EXPECT_LE(cos_row.max_abs_error, 1e-6);
}

TEST(Runner, InformationalChecksRecordDiscrepancies) {
  auto printed = run_check("table3_laguerre_row_as_printed", 1);
  EXPECT_TRUE(printed.informational);
  EXPECT_EQ(printed.status, Status::pass);
  EXPECT_GT(printed.max_abs_error, 0.0);
  auto charlier = run_check("eq37_38_printed_charlier_informational", 1);
  EXPECT_GT(charlier.max_abs_error, 0.0);
}

TEST(Report, JsonShape) {
  auto reports = run_all(std::string("table3_laguerre_row*"), 1);
  ASSERT_EQ(reports.size(), 2u);
  auto j = to_json(reports);
  ASSERT_TRUE(j.is_array());
  for (const auto& item : j) {
    for (const char* key : {"name", "layer", "status", "max_abs_error", "tolerance", "trials", "seed", "elapsed_ms",
                            "informational", "description", "note"}) {
      EXPECT_TRUE(item.contains(key)) << key;
    }
  }
  EXPECT_EQ(j[0]["tolerance"], 0.0);
  EXPECT_TRUE(j[1]["tolerance"].is_null());
  EXPECT_EQ(j[1]["informational"], true);
  std::string table = text_table(reports);
  EXPECT_NE(table.find("table3_laguerre_row_as_printed"), std::string::npos);
  EXPECT_NE(table.find("2 checks: 2 passed (1 informational), 0 failed, 0 errors"), std::string::npos);
}
