#include "isochron/series_core.hpp"

#include <stdexcept>
#include <string>

#include "isochron/errors.hpp"

namespace isochron {

CoefficientTable build_lambda_table(int jmax) {
  if (jmax < 1) throw std::invalid_argument("build_lambda_table: jmax must be >= 1");
  const auto uz = static_cast<std::size_t>(jmax) + 1;
  const ParamPoly n = ParamPoly::n();
  const ParamPoly n_plus_1 = n + ParamPoly(1);

  CoefficientTable table;
  table.jmax = jmax;
  table.lambda.assign(uz, ParamPoly());
  table.lambda[0] = ParamPoly(1);

  std::vector<ParamPoly> binom(uz);  // C(n+1, s)
  for (int s = 0; s <= jmax; ++s) binom[static_cast<std::size_t>(s)] = binomial(n_plus_1, s);

  // powers[s][t] = [w^t] U^s with U = Σ λ_i w^i; filled column by column.
  std::vector<std::vector<ParamPoly>> powers(uz, std::vector<ParamPoly>(uz));
  powers[0][0] = ParamPoly(1);

  auto& lam = table.lambda;
  for (int j = 1; j <= jmax; ++j) {
    const int t = j - 1;
    // Column t of the power table only needs λ_1..λ_t.
    if (t >= 1) {
      powers[1][static_cast<std::size_t>(t)] = lam[static_cast<std::size_t>(t)];
      for (int s = 2; s <= t; ++s) {
        ParamPoly acc;
        for (int i = 1; i <= t - s + 1; ++i) {
          acc += lam[static_cast<std::size_t>(i)] * powers[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - i)];
        }
        powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = acc;
      }
    }
    ParamPoly conv;
    for (int i = 1; i < j; ++i) conv += lam[static_cast<std::size_t>(i)] * lam[static_cast<std::size_t>(j - i)];
    ParamPoly binomial_part;
    for (int s = 0; s <= t; ++s) {
      binomial_part += binom[static_cast<std::size_t>(s)] * powers[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
    }
    lam[static_cast<std::size_t>(j)] = conv * Rational(-1, 2) - binomial_part;
  }

  // (1+U)² = 1 + Σ e_j w^j, then d/dh of h²(π + Σ e_j c_j h^{j(n-1)}) / (2h).
  table.lambda_tilde.assign(uz, ParamPoly());
  for (int j = 1; j <= jmax; ++j) {
    ParamPoly e = lam[static_cast<std::size_t>(j)] * Rational(2);
    for (int i = 1; i < j; ++i) e += lam[static_cast<std::size_t>(i)] * lam[static_cast<std::size_t>(j - i)];
    const ParamPoly weight{Rational(2 - j, 2), Rational(j, 2)};  // (j(n-1) + 2) / 2
    table.lambda_tilde[static_cast<std::size_t>(j)] = e * weight;
  }

  // h^{i(n-1)} = r₀^{i(n-1)} (1 + 2a₀ r₀^{n-1})^{i(n-1)/2}.
  table.q_table.assign(uz, std::vector<ParamPoly>(uz));
  for (int i = 1; i <= jmax; ++i) {
    const ParamPoly half_exponent = (n - ParamPoly(1)) * Rational(i, 2);
    Rational two_pow = 1;
    for (int k = i; k <= jmax; ++k) {
      table.q_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
          table.lambda_tilde[static_cast<std::size_t>(i)] * binomial(half_exponent, k - i) * two_pow;
      two_pow *= 2;
    }
  }
  return table;
}

namespace {

// Raw coefficients β_k, k = 0..K, of u(h) where r = h(1 + u), solving
// 2u + u² + 2 h^{n-1} (1+u)^{n+1} = 0 term by term. (1+u)^{n+1} is carried by
// the power recurrence t P_t = Σ_i ((n+1) i - (t-i)) β_i P_{t-i}.
std::vector<Rational> raw_reversion(int K, int n) {
  if (n < 2) throw std::invalid_argument("reversion oracle needs n >= 2");
  const auto size = static_cast<std::size_t>(K) + 1;
  std::vector<Rational> beta(size, Rational(0));
  std::vector<Rational> power(size, Rational(0));
  power[0] = 1;
  const int shift = n - 1;
  const Rational alpha = n + 1;
  for (int k = 1; k <= K; ++k) {
    Rational square = 0;
    for (int i = 1; i < k; ++i) square += beta[static_cast<std::size_t>(i)] * beta[static_cast<std::size_t>(k - i)];
    const int t = k - shift;
    const Rational forcing = t >= 0 ? power[static_cast<std::size_t>(t)] : Rational(0);
    beta[static_cast<std::size_t>(k)] = -(square + 2 * forcing) / 2;

    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      acc += (alpha * i - (k - i)) * beta[static_cast<std::size_t>(i)] * power[static_cast<std::size_t>(k - i)];
    }
    power[static_cast<std::size_t>(k)] = acc / k;
  }
  return beta;
}

}  // namespace

std::vector<Rational> reversion_oracle(int jmax, int n) {
  if (jmax < 1) throw std::invalid_argument("reversion_oracle: jmax must be >= 1");
  const int stride = n - 1;
  const auto beta = raw_reversion(jmax * stride, n);
  std::vector<Rational> out(static_cast<std::size_t>(jmax) + 1);
  out[0] = 1;
  for (int k = 1; k <= jmax * stride; ++k) {
    const auto& b = beta[static_cast<std::size_t>(k)];
    if (k % stride != 0) {
      if (sgn(b) != 0) {
        throw SparsityViolation("nonzero reversion coefficient at h^" + std::to_string(k) + " for n = " +
                                std::to_string(n));
      }
      continue;
    }
    out[static_cast<std::size_t>(k / stride)] = b;
  }
  return out;
}

bool check_sparsity(int jmax, int n) {
  const int stride = n - 1;
  const auto beta = raw_reversion(jmax * stride, n);
  for (int k = 1; k <= jmax * stride; ++k) {
    if (k % stride != 0 && sgn(beta[static_cast<std::size_t>(k)]) != 0) return false;
  }
  return true;
}

RationalSeries series_multiply(const RationalSeries& a, const RationalSeries& b, int order) {
  RationalSeries out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t k = 0; k < b.size() && i + k <= static_cast<std::size_t>(order); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

RationalSeries series_power(const RationalSeries& base, int exponent, int order) {
  if (exponent < 0) throw std::invalid_argument("series_power: negative exponent");
  RationalSeries result(static_cast<std::size_t>(order) + 1, Rational(0));
  result[0] = 1;
  RationalSeries square = base;
  square.resize(static_cast<std::size_t>(order) + 1, Rational(0));
  while (exponent > 0) {
    if (exponent & 1) result = series_multiply(result, square, order);
    exponent >>= 1;
    if (exponent > 0) square = series_multiply(square, square, order);
  }
  return result;
}

}  // namespace isochron
