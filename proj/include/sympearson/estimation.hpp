#pragma once

#include <Eigen/Dense>

#include "sympearson/ar_sim.hpp"

namespace sympearson {

enum class EstimatorMethod { least_squares, huber_m };

struct HuberOptions {
    double k = 1.345;
    int max_iter = 50;
    double tol = 1e-10;
};

/**
 * @brief Fitted autoregression parameters.
 *
 * delta_hat is maintained as exactly 1 - sum(betas_hat).
 */
struct FittedAR {
    double mu_hat = 0.0;
    Eigen::VectorXd betas_hat;
    double delta_hat = 1.0;
    EstimatorMethod method = EstimatorMethod::least_squares;
};

struct ResidualSet {
    Eigen::VectorXd eps_hat;  // length n
};

/**
 * @brief Root-n-consistent fit of (mu, beta) from an observed series.
 *
 * least_squares: mu_hat is the sample mean of y_1..y_n and beta_hat solves
 * the lag regression of u_hat_t = y_t - mu_hat on its p lags through a
 * column-pivoted QR decomposition. huber_m: iteratively reweighted variant
 * with Huber weights at tuning k on both the location and the regression.
 *
 * Throws SingularDesign when the lag Gram matrix has condition number
 * above 1e12, DomainError when n <= 5p.
 */
[[nodiscard]] FittedAR fit(const ObservedSeries& series,
                           EstimatorMethod method = EstimatorMethod::least_squares,
                           const HuberOptions& huber = {});

/// Residuals eps_hat_t = u_hat_t - sum_j beta_hat_j u_hat_{t-j}, t = 1..n,
/// with u_hat_t = y_t - mu_hat over the full index range t = 1-p..n.
[[nodiscard]] ResidualSet residuals(const ObservedSeries& series, const FittedAR& fitted);

}  // namespace sympearson
