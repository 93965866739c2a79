#include "edm/cbba.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "edm/random.hpp"

namespace edm {
namespace {

const Frame kAB({"A", "B"});

ValidationResult validate(const Frame& f, std::vector<MassEntry> entries) { return validate_cbba(f, entries); }

Cbba make(const Frame& f, std::vector<MassEntry> entries) { return require_valid(validate(f, std::move(entries))); }

void expect_complex_near(Complex actual, Complex expected, double tol) {
  EXPECT_NEAR(actual.re(), expected.re(), tol);
  EXPECT_NEAR(actual.im(), expected.im(), tol);
}

TEST(ValidateCbba, AcceptsComplexExamplePair) {
  const auto result = validate(kAB, {{kAB.subset({"A"}), {0.2, 0.1}}, {kAB.subset({"B"}), {0.8, -0.1}}});
  ASSERT_TRUE(std::holds_alternative<Cbba>(result));
  const auto& m = std::get<Cbba>(result);
  EXPECT_EQ(m.focal_elements().size(), 2u);
  EXPECT_EQ(m.mass(kAB.subset({"A"})), Complex(0.2, 0.1));
  EXPECT_EQ(m.mass(kAB.full_set()), Complex());
}

TEST(ValidateCbba, MagnitudeExceeded) {
  // |0.9+0.5i| = sqrt(1.06) ≈ 1.0296
  const auto result = validate(kAB, {{kAB.subset({"A"}), {0.9, 0.5}}, {kAB.subset({"B"}), {0.1, -0.5}}});
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  const auto& report = std::get<ValidationReport>(result);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].code, ErrorCode::MagnitudeExceeded);
  EXPECT_EQ(report.violations[0].subset, "{A}");
}

TEST(ValidateCbba, SumNotOne) {
  const auto result = validate(kAB, {{kAB.subset({"A"}), {0.5, 0}}, {kAB.subset({"B"}), {0.4, 0}}});
  ASSERT_TRUE(std::holds_alternative<ValidationReport>(result));
  const auto& report = std::get<ValidationReport>(result);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(report.has(ErrorCode::SumNotOne));
  EXPECT_EQ(report.to_lines(), "SUM_NOT_ONE\tglobal\tmasses sum to 0.9+0i\n");
}

TEST(ValidateCbba, ImaginarySumMustVanish) {
  const auto result = validate(kAB, {{kAB.subset({"A"}), {0.5, 0.1}}, {kAB.subset({"B"}), {0.5, 0}}});
  EXPECT_TRUE(std::get<ValidationReport>(result).has(ErrorCode::SumNotOne));
}

TEST(ValidateCbba, SumToleranceBoundary) {
  EXPECT_TRUE(std::holds_alternative<Cbba>(
      validate(kAB, {{kAB.subset({"A"}), {0.5 + 5e-10, 5e-10}}, {kAB.subset({"B"}), {0.5, 0}}})));
  EXPECT_TRUE(std::holds_alternative<ValidationReport>(
      validate(kAB, {{kAB.subset({"A"}), {0.5 + 2e-9, 0}}, {kAB.subset({"B"}), {0.5, 0}}})));
}

TEST(ValidateCbba, ReportsEveryViolation) {
  const Frame abc({"A", "B", "C"});
  const auto result = validate(abc, {{abc.empty_set(), {0.1, 0}},
                                     {abc.subset({"A"}), {1.5, 0}},
                                     {abc.subset({"A"}), {0.1, 0}},
                                     {SubsetMask(2, 1), {0.1, 0}}});
  const auto& report = std::get<ValidationReport>(result);
  EXPECT_TRUE(report.has(ErrorCode::EmptySetMass));
  EXPECT_TRUE(report.has(ErrorCode::MagnitudeExceeded));
  EXPECT_TRUE(report.has(ErrorCode::DuplicateSubset));
  EXPECT_TRUE(report.has(ErrorCode::FrameMismatch));
  EXPECT_TRUE(report.has(ErrorCode::SumNotOne));
}

TEST(ValidateCbba, DropsZeroMassEntriesAndZeroEmptySet) {
  const auto m = make(kAB, {{kAB.empty_set(), {}}, {kAB.subset({"A"}), {0, 0}}, {kAB.subset({"B"}), {1, 0}}});
  ASSERT_EQ(m.focal_elements().size(), 1u);
  EXPECT_EQ(m.focal_elements()[0].subset, kAB.subset({"B"}));
}

TEST(ValidateCbba, FocalElementsSortedByBits) {
  const Frame abc({"A", "B", "C"});
  const auto m = make(abc, {{abc.full_set(), {0.5, 0}}, {abc.subset({"A"}), {0.25, 0}}, {abc.subset({"B"}), {0.25, 0}}});
  EXPECT_EQ(m.focal_elements()[0].subset.bits(), 1u);
  EXPECT_EQ(m.focal_elements()[1].subset.bits(), 2u);
  EXPECT_EQ(m.focal_elements()[2].subset.bits(), 7u);
}

TEST(RequireValid, ThrowsFirstViolationCode) {
  try {
    require_valid(validate(kAB, {{kAB.subset({"A"}), {0.5, 0}}}));
    FAIL();
  } catch (const EvidenceError& e) {
    EXPECT_EQ(e.code(), ErrorCode::SumNotOne);
  }
}

class BeliefPlausibility : public ::testing::Test {
 protected:
  Cbba m = make(kAB, {{kAB.subset({"A"}), {0.3, 0.1}}, {kAB.subset({"B"}), {0.2, -0.3}}, {kAB.full_set(), {0.5, 0.2}}});
};

TEST_F(BeliefPlausibility, Belief) {
  EXPECT_EQ(belief_c(m, kAB.subset({"A"})), Complex(0.3, 0.1));
  expect_complex_near(belief_c(m, kAB.full_set()), Complex(1, 0), 1e-9);
  EXPECT_EQ(belief_c(m, kAB.empty_set()), Complex());
}

TEST_F(BeliefPlausibility, Plausibility) {
  expect_complex_near(plausibility_c(m, kAB.subset({"A"})), Complex(0.8, 0.3), 1e-15);
  expect_complex_near(plausibility_c(m, kAB.full_set()), Complex(1, 0), 1e-9);
  EXPECT_EQ(plausibility_c(m, kAB.empty_set()), Complex());
}

TEST_F(BeliefPlausibility, FrameMismatch) {
  EXPECT_THROW(belief_c(m, SubsetMask(3, 1)), EvidenceError);
  EXPECT_THROW(plausibility_c(m, SubsetMask(3, 1)), EvidenceError);
}

TEST(BeliefFunctions, RealCaseMatchesClassicalDefinition) {
  const auto m = make(kAB, {{kAB.subset({"A"}), {0.6, 0}}, {kAB.subset({"B"}), {0.4, 0}}});
  EXPECT_EQ(plausibility_c(m, kAB.subset({"A"})), Complex(0.6, 0));
  EXPECT_EQ(belief_c(m, kAB.subset({"A"})), Complex(0.6, 0));
}

// Bel(A) + Pl(¬A) = 1 for every A, and Bel ≤ Pl on the classical subspace,
// checked against direct sums over the power set.
TEST(BeliefFunctions, DualityExhaustiveOverRandomBodies) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    const Frame f(names);
    const auto all = enumerate_power_set(f);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      for (const double fraction : {0.0, 1.0}) {
        const Cbba m = random_cbba(f, seed * 31 + n, fraction);
        for (const auto a : all) {
          double bel_re = 0, bel_im = 0, pl_re = 0, pl_im = 0;
          for (const auto b : all) {
            const Complex mass = m.mass(b);
            if ((b.bits() & ~a.bits()) == 0) bel_re += mass.re(), bel_im += mass.im();
            if ((b.bits() & a.bits()) != 0) pl_re += mass.re(), pl_im += mass.im();
          }
          expect_complex_near(belief_c(m, a), Complex(bel_re, bel_im), 1e-12);
          expect_complex_near(plausibility_c(m, a), Complex(pl_re, pl_im), 1e-12);
          expect_complex_near(belief_c(m, a) + plausibility_c(m, a.complement()), Complex(1, 0), 1e-9);
          if (fraction == 0.0) EXPECT_LE(belief_c(m, a).re(), plausibility_c(m, a).re() + 1e-15);
        }
      }
    }
  }
}

TEST(IsReal, Examples) {
  EXPECT_TRUE(is_real(make(kAB, {{kAB.subset({"A"}), {0.4, 0}}, {kAB.subset({"B"}), {0.6, 0}}})));
  EXPECT_FALSE(is_real(make(kAB, {{kAB.subset({"A"}), {0.2, 0.1}}, {kAB.subset({"B"}), {0.8, -0.1}}})));
  EXPECT_TRUE(is_real(make(kAB, {{kAB.subset({"A"}), {0.5, 1e-15}}, {kAB.subset({"B"}), {0.5, -1e-15}}})));
}

}  // namespace
}  // namespace edm
