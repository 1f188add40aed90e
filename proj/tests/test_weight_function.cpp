#include <gtest/gtest.h>

#include <vector>

#include "vindex/error.hpp"
#include "vindex/weight_function.hpp"

namespace vindex {
namespace {

std::vector<WeightFunction> all_kinds() {
  std::vector<WeightFunction> out{WeightFunction::canonical_sqrt(), WeightFunction::linear(),
                                  WeightFunction::unity()};
  for (int n = 2; n <= 7; ++n) {
    out.push_back(WeightFunction::power_concave(n));
    out.push_back(WeightFunction::power_convex(n));
  }
  return out;
}

constexpr int kGrid = 1001;
double grid(int i) { return static_cast<double>(i) / (kGrid - 1); }

TEST(WeightFunction, ParsesEverySpelling) {
  EXPECT_EQ(WeightFunction::parse("sqrt"), WeightFunction::canonical_sqrt());
  EXPECT_EQ(WeightFunction::parse("unity"), WeightFunction::unity());
  EXPECT_EQ(WeightFunction::parse("linear"), WeightFunction::linear());
  EXPECT_EQ(WeightFunction::parse("x^3"), WeightFunction::power_convex(3));
  EXPECT_EQ(WeightFunction::parse("x^(1/3)"), WeightFunction::power_concave(3));
  EXPECT_EQ(WeightFunction::parse("x^12").exponent(), 12);
}

TEST(WeightFunction, RejectsMalformedSpecs) {
  for (const char* bad : {"", "SQRT", "x^1", "x^0", "x^(1/1)", "x^-2", "x^", "x^(1/)", "x^2.5",
                          "x^(2/3)", "x^(1/3", "log"}) {
    EXPECT_THROW(WeightFunction::parse(bad), ParseError) << bad;
  }
  EXPECT_THROW(WeightFunction::power_convex(1), DomainError);
  EXPECT_THROW(WeightFunction::power_concave(0), DomainError);
}

TEST(WeightFunction, SpecStringRoundTrips) {
  for (const auto& f : all_kinds()) EXPECT_EQ(WeightFunction::parse(f.to_string()), f);
}

TEST(WeightFunction, PaperValuesAtPointEight) {
  EXPECT_NEAR(WeightFunction::power_convex(3)(0.8), 0.512, 1e-15);
  EXPECT_NEAR(WeightFunction::canonical_sqrt()(0.8), 0.894, 5e-4);
}

TEST(WeightFunction, RejectsArgumentsOutsideUnitInterval) {
  EXPECT_THROW(WeightFunction::canonical_sqrt()(1.5), DomainError);
  EXPECT_THROW(WeightFunction::unity()(-0.01), DomainError);
}

TEST(WeightFunction, AxiomsOnGrid) {
  for (const auto& f : all_kinds()) {
    SCOPED_TRACE(f.to_string());
    EXPECT_EQ(f(1.0), 1.0);
    double previous = f(0.0);
    for (int i = 0; i < kGrid; ++i) {
      const double x = grid(i);
      const double y = f(x);
      ASSERT_GE(y, previous) << "x=" << x;
      ASSERT_GE(y, 0.0);
      ASSERT_LE(y, 1.0);
      if (f.kind() == WeightFunction::Kind::power_concave ||
          f.kind() == WeightFunction::Kind::canonical_sqrt) {
        ASSERT_GE(y, x);
      }
      if (f.kind() == WeightFunction::Kind::power_convex) {
        ASSERT_LE(y, x);
      }
      previous = y;
    }
  }
}

}  // namespace
}  // namespace vindex
