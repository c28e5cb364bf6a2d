#pragma once

#include <Eigen/Dense>

#include <optional>
#include <ostream>

#include "sympearson/distributions.hpp"
#include "sympearson/rng.hpp"

namespace sympearson {

/**
 * @brief AR(p) specification: v_t = beta_1 v_{t-1} + ... + beta_p v_{t-p} + nu + e_t.
 *
 * Stationarity is checked through the companion-matrix eigenvalues; all
 * moduli must stay below 1 - 1e-9. The process mean mu satisfies
 * nu = (1 - beta_1 - ... - beta_p) * mu.
 */
struct ARSpec {
    Eigen::VectorXd betas;
    double nu = 0.0;

    [[nodiscard]] int order() const { return static_cast<int>(betas.size()); }
    [[nodiscard]] double mean() const;
    /// Largest characteristic-root modulus.
    [[nodiscard]] double max_root_modulus() const;
    /// Throws NotStationary when a root modulus reaches 1 - 1e-9.
    void validate() const;
};

/// Outlier scheme: each observation picks up an independent xi ~ pi with
/// probability min(1, gamma / sqrt(n)).
struct ContaminationSpec {
    double gamma = 0.0;
    ScalarDistribution pi = ScalarDistribution::point_mass(0.0);

    [[nodiscard]] double rate(Eigen::Index n) const;
};

/// Latent records kept alongside an observed series for diagnostics:
/// clean values, contamination flags and draws, and the innovations.
/// All vectors run over t = 1-p, ..., n (length n + p).
struct SeriesTruth {
    Eigen::VectorXd v;
    Eigen::VectorXi z;
    Eigen::VectorXd xi;
    Eigen::VectorXd eps;
};

/// Clean stationary sample v_t = mu + u_t over t = 1-p, ..., n, with the
/// innovation draws aligned to the same index range.
struct LatentSeries {
    Eigen::VectorXd v;
    Eigen::VectorXd eps;
    int p = 0;
    Eigen::Index n = 0;
};

struct ObservedSeries {
    Eigen::VectorXd y;  // length n + p, index t = 1-p, ..., n
    int p = 0;
    Eigen::Index n = 0;
    std::optional<SeriesTruth> truth;

    /// Value at time index t in [1-p, n].
    [[nodiscard]] double at(Eigen::Index t) const { return y[t - 1 + p]; }
};

/// Default burn-in: max(1000, 50 * p).
[[nodiscard]] Eigen::Index default_burn_in(int p);

/**
 * @brief Simulate the centered recursion from a zero initial state, discard
 *        `burn_in` steps, and return v_t = mu + u_t for t = 1-p, ..., n.
 *
 * Pass burn_in < 0 for the default. Throws NotStationary for invalid specs.
 */
[[nodiscard]] LatentSeries simulate_clean(const ARSpec& spec, const ScalarDistribution& innovations,
                                          Eigen::Index n, RngStream& rng, Eigen::Index burn_in = -1);
[[nodiscard]] LatentSeries simulate_clean(const ARSpec& spec, const MixtureAn& innovations,
                                          Eigen::Index n, RngStream& rng, Eigen::Index burn_in = -1);

/// Apply the outlier scheme to every index t = 1-p, ..., n and keep the truth.
[[nodiscard]] ObservedSeries contaminate(const LatentSeries& latent, const ContaminationSpec& cont,
                                         RngStream& rng);

/// Wrap externally supplied data (no truth record).
[[nodiscard]] ObservedSeries observe(Eigen::VectorXd y, int p);

/// CSV dump with header t,y,v,z,xi,eps; truth columns empty when absent.
void write_series_csv(std::ostream& os, const ObservedSeries& series);

}  // namespace sympearson
