#pragma once

#include <Eigen/Dense>

#include <span>

#include "sympearson/distributions.hpp"

namespace sympearson {

/**
 * @brief Empirical distribution function over a fixed sample.
 *
 * The sample is sorted once; evaluation is a binary search, so grid sweeps
 * cost O(log n) per point. x-comparisons are closed on the right:
 * F(x) = #{values <= x} / n.
 */
class Edf {
  public:
    explicit Edf(Eigen::VectorXd sample);

    [[nodiscard]] double operator()(double x) const;
    /// Symmetrized evaluation (F(x) + 1 - F(-x)) / 2.
    [[nodiscard]] double sym(double x) const;
    [[nodiscard]] Eigen::Index size() const { return sorted_.size(); }

  private:
    Eigen::VectorXd sorted_;
};

/// One-shot EDF value by direct counting; throws EmptySample.
[[nodiscard]] double edf_eval(std::span<const double> sample, double x);

/// One-shot symmetrized EDF value (edf(x) + 1 - edf(-x)) / 2.
[[nodiscard]] double sym_edf_eval(std::span<const double> sample, double x);

/**
 * @brief Inputs of the contamination shift functions.
 *
 * betas are the autoregression coefficients beta_1..beta_p; the shift sums
 * additionally include the fixed term with coefficient beta_0 = -1. The
 * same shift enters both the raw and the symmetrized expansions.
 */
struct ShiftContext {
    ScalarDistribution g0;
    ScalarDistribution pi;
    Eigen::VectorXd betas;
    long budget = 1L << 20;
    double tol = 1e-9;
};

/// Shift of the residual EDF:
/// sum_{j=0}^{p} [E G0(x + beta_j xi) - G0(x)] with beta_0 = -1.
/// Vanishes at x = +-infinity.
[[nodiscard]] double shift_delta(const ShiftContext& ctx, double x);

/// Symmetrized shift (shift_delta(x) - shift_delta(-x)) / 2.
[[nodiscard]] double shift_delta_sym(const ShiftContext& ctx, double x);

/**
 * @brief Per-cell shift vector delta_j = 2 [Delta_S(x_j) - Delta_S(x_{j-1})]
 *        over a partition 0 = x_0 < ... < x_m = infinity given as the full
 *        breakpoint vector of length m + 1.
 *
 * The components always sum to zero because Delta_S vanishes at 0 and at
 * infinity.
 */
[[nodiscard]] Eigen::VectorXd delta_vector(const ShiftContext& ctx,
                                           const Eigen::VectorXd& breakpoints);

}  // namespace sympearson
