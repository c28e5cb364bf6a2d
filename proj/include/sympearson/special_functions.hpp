#pragma once

namespace sympearson {

/// Standard normal CDF, accurate in both tails (erfc based).
[[nodiscard]] double normal_cdf(double x);

/// Standard normal density.
[[nodiscard]] double normal_pdf(double x);

/// Standard normal quantile; throws DomainError outside (0, 1).
/// Rational initial guess refined by one Halley step, so the round trip
/// normal_cdf(normal_quantile(p)) = p holds well below 1e-10.
[[nodiscard]] double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series expansion for x < a + 1, Lentz continued fraction otherwise.
[[nodiscard]] double lower_gamma_regularized(double a, double x);

/// Regularized incomplete beta I_x(a, b) for a, b > 0, 0 <= x <= 1.
[[nodiscard]] double incomplete_beta_regularized(double a, double b, double x);

}  // namespace sympearson
