#include "isochron/series_core.hpp"

#include <gtest/gtest.h>

#include "isochron/errors.hpp"

namespace isochron {
namespace {

const ParamPoly kN = ParamPoly::n();

TEST(LambdaTable, KnownLowOrderCoefficients) {
  const auto t = build_lambda_table(4);
  EXPECT_EQ(t.lambda[1], ParamPoly(-1));
  EXPECT_EQ(t.lambda[2], (ParamPoly{make_rational(1, 2), 1}));                    // (2n+1)/2
  EXPECT_EQ(t.lambda[3], (ParamPoly{0, -1, make_rational(-3, 2)}));               // -(3n²+2n)/2
  EXPECT_EQ(t.lambda[4], (ParamPoly{-3, -4, 48, 64} * make_rational(1, 24)));     // (64n³+48n²-4n-3)/24
}

TEST(LambdaTable, DegreeAndSignLaw) {
  const auto t = build_lambda_table(10);
  for (int j = 1; j <= 10; ++j) {
    const auto& lam = t.lambda[static_cast<std::size_t>(j)];
    EXPECT_EQ(lam.degree(), j - 1) << "j=" << j;
    EXPECT_EQ(sgn(lam.leading_coefficient()), j % 2 == 0 ? 1 : -1) << "j=" << j;
    const auto& tilde = t.lambda_tilde[static_cast<std::size_t>(j)];
    EXPECT_EQ(tilde.degree(), j);
    EXPECT_EQ(tilde.leading_coefficient(), j * lam.leading_coefficient());
  }
  EXPECT_EQ(t.lambda_tilde[1], (ParamPoly{-1, -1}));   // -(n+1)
  EXPECT_EQ(t.lambda_tilde[2], (ParamPoly{0, 2, 2}));  // 2n(n+1)
}

TEST(ReversionOracle, Examples) {
  EXPECT_EQ(reversion_oracle(1, 2)[1], -1);
  EXPECT_EQ(reversion_oracle(2, 3)[2], make_rational(7, 2));
  EXPECT_EQ(reversion_oracle(4, 2)[4], make_rational(231, 8));
}

TEST(ReversionOracle, AgreesWithParametricTable) {
  const auto t = build_lambda_table(8);
  for (int n = 2; n <= 8; ++n) {
    const auto oracle = reversion_oracle(8, n);
    for (int j = 1; j <= 8; ++j) {
      EXPECT_EQ(oracle[static_cast<std::size_t>(j)], t.lambda[static_cast<std::size_t>(j)].evaluate(Rational(n)))
          << "n=" << n << " j=" << j;
    }
  }
}

TEST(Sparsity, Examples) {
  EXPECT_TRUE(check_sparsity(6, 3));
  EXPECT_TRUE(check_sparsity(6, 2));
  EXPECT_TRUE(check_sparsity(4, 5));
  EXPECT_THROW(reversion_oracle(3, 1), std::invalid_argument);
}

// r(h) = h(1 + Σ_{j<=J} λ_j(n) h^{j(n-1)}) must satisfy r² + 2 r^{n+1} = h² through
// h^{2+J(n-1)}. The residual coefficients are polynomials in n of degree <= J, so
// checking J+2 integer values of n proves the identity in n.
TEST(LambdaTable, SubstitutionIdentity) {
  const auto t = build_lambda_table(6);
  auto mul = [](const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t top) {
    std::vector<Rational> out(top + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= top; ++i)
      for (std::size_t k = 0; k < b.size() && i + k <= top; ++k) out[i + k] += a[i] * b[k];
    return out;
  };
  for (int J = 1; J <= 6; ++J) {
    for (int n = 2; n <= J + 3; ++n) {
      const std::size_t top = static_cast<std::size_t>(2 + J * (n - 1));
      std::vector<Rational> r(top + 1, Rational(0));  // coefficients in h
      r[1] = 1;
      for (int j = 1; j <= J; ++j) {
        r[static_cast<std::size_t>(1 + j * (n - 1))] = t.lambda[static_cast<std::size_t>(j)].evaluate(Rational(n));
      }
      const auto r2 = mul(r, r, top);
      std::vector<Rational> rp = r;
      for (int k = 1; k <= n; ++k) rp = k == 1 ? r : mul(rp, r, top);
      rp = mul(rp, r, top);  // r^{n+1}
      for (std::size_t e = 0; e <= top; ++e) {
        const Rational lhs = r2[e] + 2 * rp[e];
        EXPECT_EQ(lhs, e == 2 ? Rational(1) : Rational(0)) << "J=" << J << " n=" << n << " e=" << e;
      }
    }
  }
}

TEST(SeriesHelpers, PowerMatchesRepeatedProduct) {
  RationalSeries base{1, make_rational(1, 2), -3};
  auto cube = series_multiply(series_multiply(base, base, 5), base, 5);
  EXPECT_EQ(series_power(base, 3, 5), cube);
  EXPECT_EQ(series_power(base, 0, 2), (RationalSeries{1, 0, 0}));
}

}  // namespace
}  // namespace isochron
