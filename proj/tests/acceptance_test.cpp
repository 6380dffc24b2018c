// Acceptance suite. One test per criterion; each prints a [acceptance]
// PASS/FAIL line so the gate can be read off the log directly.
//
// Counting criteria follow the audit protocol: computed values are
// authoritative, reference-table divergences are asserted as *reported
// mismatches*, not forced to the printed numbers. The one reference cell
// that does not reproduce (6_12^2 over the order-30 structure: reference 0,
// computed 30 by solver, exhaustive sweep, and an independent script) is
// covered exactly that way in criterion 6.

#include <gtest/gtest.h>

#include <chrono>
#include <iostream>
#include <random>

#include "odsq/odsq.hpp"
#include "support.hpp"

namespace {

using namespace odsq;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Acceptance : public ::testing::Test {
protected:
  void TearDown() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    std::cout << "[acceptance] " << info->name() << ": " << (HasFailure() ? "FAIL" : "PASS")
              << std::endl;
  }
};

TEST_F(Acceptance, C1_BuiltinStructuresPassEveryAxiomExhaustively) {
  auto start = Clock::now();
  for (const auto& name : builtin_names()) {
    AxiomReport rep = validate_oriented_disingquandle(builtin(name));
    EXPECT_TRUE(rep.passed()) << name << ": " << rep.summary();
  }
  double elapsed = ms_since(start);
  std::cout << "  all four axiom suites: " << elapsed << " ms\n";
  EXPECT_LT(elapsed, 1000.0);
}

TEST_F(Acceptance, C2_ExportReproducesTheGoldenOrder10Blocks) {
  std::string text = write_presentation_text(to_presentation_matrix(builtin("z10_canonical")));
  EXPECT_EQ(text, testsupport::kGoldenZ10Presentation);
}

TEST_F(Acceptance, C3_AdmissibleParameterSamplesAlwaysValidate) {
  std::mt19937 rng(20240403);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    AffineQuadraticParams p = testsupport::sample_admissible(rng);
    try {
      OrientedDisingquandle d = affine_quadratic_disingquandle(p);
      if (!validate_oriented_disingquandle(d).passed()) ++failures;
    } catch (const std::exception& e) {
      ADD_FAILURE() << "n=" << p.n << " a=" << p.a << ": " << e.what();
      ++failures;
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST_F(Acceptance, C4_DerivedR2ForZ60DiffersFromQuotedFormExactlyByThirtyXY) {
  BuiltinInfo info = builtin_info("z60");
  const OrientedDisingquandle& d = builtin("z60");
  ASSERT_TRUE(info.quoted_r2.has_value());

  int differing = 0;
  for (int x = 0; x < 60; ++x)
    for (int y = 0; y < 60; ++y) {
      // reference tabulation straight from the closed forms, no tables
      long long sub = mod_reduce(7LL * x - 6 * y, 60);
      long long derived =
          mod_reduce(10 + 6LL * y + 5 * sub + 10LL * y * y + 20 * sub * sub + 30LL * y * sub, 60);
      long long quoted = mod_reduce(10 + 35LL * x - 24 * y + 20LL * x * x + 10LL * y * y, 60);
      ASSERT_EQ(d.r2.at(x, y), derived) << x << "," << y;
      ASSERT_EQ(mod_reduce(derived - quoted, 60), mod_reduce(30LL * x * y, 60)) << x << "," << y;
      bool differs = derived != quoted;
      ASSERT_EQ(differs, mod_reduce(30LL * x * y, 60) != 0) << x << "," << y;
      differing += differs;
    }
  EXPECT_EQ(differing, 900);
  EXPECT_EQ(quoted_r2_mismatch_count(info), 900);  // the discrepancy is reported
  EXPECT_TRUE(validate_oriented_disingquandle(d).passed());
}

TEST_F(Acceptance, C5_SolverMatchesExhaustiveSweepOnEveryCatalogCell) {
  auto start = Clock::now();
  ColoringOptions opts;
  opts.threads = 2;
  for (const char* name : {"z10_canonical", "z10_uno", "z30"}) {
    const OrientedDisingquandle& d = builtin(name);
    for (const auto& entry : catalog()) {
      long long fast = count_colorings(entry.system, d, opts).count;
      long long slow = count_colorings_exhaustive(entry.system, d, opts).count;
      ASSERT_EQ(fast, slow) << entry.name << " under " << name;
    }
  }
  std::cout << "  54 solver/sweep cells: " << ms_since(start) << " ms\n";
}

TEST_F(Acceptance, C6_ReferenceCountReproductionAndMismatchLedger) {
  const OrientedDisingquandle& d10 = builtin("z10_canonical");
  const OrientedDisingquandle& d30 = builtin("z30");

  EXPECT_EQ(count_colorings(find_catalog_entry("3_1^2")->system, d10).count, 50);
  EXPECT_EQ(count_colorings(find_catalog_entry("4_1^2")->system, d10).count, 10);
  EXPECT_EQ(count_colorings(find_catalog_entry("6_4^2")->system, d10).count, 50);

  // Reference table 2 lists 0 for 6_12^2; both routes compute 30. The
  // computed value is authoritative and the audit must surface the cell.
  long long fast = count_colorings(find_catalog_entry("6_12^2")->system, d30).count;
  long long slow = count_colorings_exhaustive(find_catalog_entry("6_12^2")->system, d30).count;
  EXPECT_EQ(fast, slow);
  std::cout << "  6_12^2 over the order-30 structure: computed " << fast
            << " (reference table prints 0; mismatch reported below)\n";

  AuditReport t1 = audit_table(1, {&d10}, {"z10_canonical"});
  AuditReport t2 = audit_table(2, {&d30}, {"z30"});
  AuditReport t3 = audit_table(3, {&d10, &d30}, {"z10_canonical", "z30"});
  EXPECT_EQ(t1.rows.size(), 18u);
  EXPECT_EQ(t2.rows.size(), 18u);
  EXPECT_EQ(t3.rows.size(), 18u);

  auto row = [](const AuditReport& rep, const std::string& link) -> const AuditRow* {
    for (const auto& r : rep.rows)
      if (r.link == link) return &r;
    return nullptr;
  };

  // known expected mismatch: table 1 prints 75 for 1_1^2, derivation gives 50
  const AuditRow* first = row(t1, "1_1^2");
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->computed, (std::vector<long long>{50}));
  EXPECT_EQ(first->reference, (std::vector<long long>{75}));
  EXPECT_FALSE(first->match);

  const AuditRow* twelve = row(t2, "6_12^2");
  ASSERT_NE(twelve, nullptr);
  EXPECT_EQ(twelve->reference, (std::vector<long long>{0}));
  EXPECT_EQ(twelve->computed, (std::vector<long long>{fast}));
  EXPECT_FALSE(twelve->match);

  for (const AuditReport* rep : {&t1, &t2, &t3}) {
    for (const auto& r : rep->mismatches()) {
      std::cout << "  mismatch ledger: table " << rep->table_id << " " << r.link << " computed=";
      for (std::size_t i = 0; i < r.computed.size(); ++i)
        std::cout << (i ? "," : "") << r.computed[i];
      std::cout << " reference=";
      for (std::size_t i = 0; i < r.reference.size(); ++i)
        std::cout << (i ? "," : "") << r.reference[i];
      std::cout << "\n";
    }
  }
}

TEST_F(Acceptance, C7_CountInvariances) {
  const OrientedDisingquandle& d = builtin("z10_canonical");

  // renaming invariance: ten random variable permutations per system
  std::mt19937 rng(20240404);
  for (const auto& entry : catalog()) {
    long long base = count_colorings(entry.system, d).count;
    for (int round = 0; round < 10; ++round) {
      std::vector<int> perm = testsupport::random_permutation(entry.system.variable_count(), rng);
      ASSERT_EQ(count_colorings(entry.system.permuted(perm), d).count, base)
          << entry.name << " round " << round;
    }
  }

  // monochromatic floor: crossing maps fix the diagonal here, so every
  // system admits all ten constant colorings
  for (int x = 0; x < d.n(); ++x) {
    ASSERT_EQ(d.r1.at(x, x), x);
    ASSERT_EQ(d.r2.at(x, x), x);
  }
  for (const auto& entry : catalog())
    EXPECT_GE(count_colorings(entry.system, d).count, 10) << entry.name;

  // the derived identity holds on every accepted structure
  for (const auto& name : builtin_names()) {
    const OrientedDisingquandle& s = builtin(name);
    for (int x = 0; x < s.n(); ++x)
      for (int y = 0; y < s.n(); ++y)
        ASSERT_EQ(s.r2.at(y, s.star1.at(x, y)), s.r2.at(y, s.star2.at(x, y))) << name;
  }
}

TEST_F(Acceptance, C8_EnumerationMatchesBruteForceFilters) {
  EnumerationResult one = enumerate_disingquandles(1);
  EXPECT_EQ(one.structures.size(), 1u);
  EXPECT_FALSE(one.truncated);

  EnumerationResult two = enumerate_disingquandles(2);
  EXPECT_EQ(testsupport::presentation_keys(two.structures),
            testsupport::presentation_keys(testsupport::brute_force_structures_n2()));

  EnumerationResult three = enumerate_disingquandles(3);
  EXPECT_EQ(testsupport::presentation_keys(three.structures),
            testsupport::presentation_keys(testsupport::brute_force_structures_n3()));
  std::cout << "  structures found: n=1: " << one.structures.size()
            << ", n=2: " << two.structures.size() << ", n=3: " << three.structures.size() << "\n";
}

TEST_F(Acceptance, C9_MorphismsAndRelabeledIsomorphisms) {
  const OrientedDisingquandle& d = builtin("z10_canonical");

  Morphism identity;
  for (int i = 0; i < 10; ++i) identity.mapping.push_back(i);
  EXPECT_TRUE(is_homomorphism(d, d, identity));

  Morphism constant;
  constant.mapping.assign(10, 0);
  EXPECT_TRUE(is_homomorphism(d, d, constant));

  std::mt19937 rng(20240405);
  for (int round = 0; round < 10; ++round) {
    std::vector<int> pi = testsupport::random_permutation(10, rng);
    OrientedDisingquandle relabeled = testsupport::conjugate_by(d, pi);
    auto f = find_isomorphism(d, relabeled);
    ASSERT_TRUE(f.has_value()) << "round " << round;
    EXPECT_TRUE(is_homomorphism(d, relabeled, *f)) << "round " << round;
    EXPECT_TRUE(is_homomorphism(relabeled, d, f->inverse())) << "round " << round;
  }
}

}  // namespace
