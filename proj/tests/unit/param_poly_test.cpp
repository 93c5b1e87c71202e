#include "isochron/param_poly.hpp"

#include <gtest/gtest.h>

namespace isochron {
namespace {

TEST(ParamPoly, TrimsAndReportsDegree) {
  ParamPoly p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.leading_coefficient(), 2);
  EXPECT_TRUE(ParamPoly{}.is_zero());
  EXPECT_EQ(ParamPoly{}.degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(ParamPoly, Arithmetic) {
  const auto n = ParamPoly::n();
  const auto p = (n + ParamPoly(1)) * (n - ParamPoly(1));  // n² - 1
  EXPECT_EQ(p, (ParamPoly{-1, 0, 1}));
  EXPECT_EQ(p.evaluate(Rational(3)), 8);
  EXPECT_DOUBLE_EQ(p.evaluate(0.5), -0.75);
  EXPECT_EQ((p * make_rational(1, 2)).to_string(), "1/2*n^2 - 1/2");
  EXPECT_EQ((-n).to_string(), "-n");
}

TEST(ParamPoly, BinomialMatchesIntegerBinomials) {
  const auto top = ParamPoly::n() + ParamPoly(1);
  for (int s = 0; s <= 6; ++s) {
    const auto b = binomial(top, s);
    EXPECT_EQ(b.degree(), s);
    EXPECT_EQ(b.leading_coefficient(), Rational(1) / mpz_class(mpz_class::factorial(s)));
    for (int n = 0; n <= 9; ++n) {
      mpz_class expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(s));
      EXPECT_EQ(b.evaluate(Rational(n)), Rational(expected)) << "n=" << n << " s=" << s;
    }
  }
}

}  // namespace
}  // namespace isochron
