#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "sympearson/rng.hpp"

namespace sympearson {

enum class DistKind {
    gaussian,
    laplace,
    student_t,
    point_mass,
    two_point_symmetric,
    finite_discrete,
    empirical_sampler,
    mixture,
};

/**
 * @brief Immutable scalar probability law.
 *
 * One type covers the hypothesized innovation law, the local-alternative
 * component, and the outlier law. Construction goes through the named
 * factories; objects are cheap to copy and safe to share across threads.
 * Sampling is by inverse transform wherever a quantile exists, so draws
 * are a pure function of the supplied stream.
 *
 * Smoothness note: the gaussian and student_t kinds have twice
 * differentiable CDFs with bounded second derivatives; laplace has a
 * density kink at the origin; the discrete kinds have no density and are
 * intended for the outlier law.
 */
class ScalarDistribution {
  public:
    static ScalarDistribution gaussian(double sigma);
    static ScalarDistribution laplace(double scale);
    static ScalarDistribution student_t(double dof, double scale = 1.0);
    static ScalarDistribution point_mass(double c);
    /// Mass 1/2 at -c and 1/2 at +c, c > 0.
    static ScalarDistribution two_point_symmetric(double c);
    /// Finite support; weights must be positive and sum to 1 within 1e-9.
    static ScalarDistribution finite_discrete(Eigen::VectorXd atoms, Eigen::VectorXd weights);
    /// Opaque sampler with a Monte Carlo expectation budget; no CDF.
    static ScalarDistribution empirical_sampler(std::function<double(RngStream&)> draw,
                                                long expectation_budget);
    /// (1 - weight_b) * a + weight_b * b.
    static ScalarDistribution mixture(ScalarDistribution a, ScalarDistribution b, double weight_b);

    [[nodiscard]] DistKind kind() const;
    [[nodiscard]] std::string kind_name() const;

    /// P(X <= x); accepts +-infinity. Throws DomainError for the
    /// empirical_sampler kind at finite x.
    [[nodiscard]] double cdf(double x) const;

    /// Inverse CDF for continuous strictly increasing kinds;
    /// throws NonInvertible otherwise and DomainError for q outside (0,1).
    [[nodiscard]] double quantile(double q) const;

    [[nodiscard]] double sample(RngStream& rng) const;
    [[nodiscard]] Eigen::VectorXd sample(RngStream& rng, Eigen::Index count) const;

    /// Exact mean where defined, NaN otherwise (e.g. student_t with dof <= 1).
    [[nodiscard]] double mean() const;
    /// Exact variance; +infinity when the second moment diverges, NaN when unknown.
    [[nodiscard]] double variance() const;
    [[nodiscard]] bool has_finite_variance() const;

    [[nodiscard]] bool is_continuous() const;
    [[nodiscard]] bool has_cdf() const { return kind() != DistKind::empirical_sampler; }
    /// True when symmetry about zero holds by construction.
    [[nodiscard]] bool symmetric_about_zero() const;

    // parameter access for serialization; throws DomainError on kind mismatch
    [[nodiscard]] double param_sigma() const;
    [[nodiscard]] double param_scale() const;
    [[nodiscard]] double param_dof() const;
    [[nodiscard]] double param_c() const;
    [[nodiscard]] const Eigen::VectorXd& param_atoms() const;
    [[nodiscard]] const Eigen::VectorXd& param_weights() const;
    [[nodiscard]] const ScalarDistribution& mixture_first() const;
    [[nodiscard]] const ScalarDistribution& mixture_second() const;
    [[nodiscard]] double mixture_weight() const;
    [[nodiscard]] long expectation_budget() const;

  private:
    struct GaussianP {
        double sigma;
    };
    struct LaplaceP {
        double scale;
    };
    struct StudentTP {
        double dof, scale;
    };
    struct PointMassP {
        double c;
    };
    struct TwoPointP {
        double c;
    };
    struct DiscreteP {
        Eigen::VectorXd atoms, weights, cum;  // atoms strictly increasing
    };
    struct SamplerP {
        std::function<double(RngStream&)> draw;
        long budget;
    };
    struct MixtureP {
        std::shared_ptr<const ScalarDistribution> first, second;
        double weight_second;
    };
    using Storage = std::variant<GaussianP, LaplaceP, StudentTP, PointMassP, TwoPointP, DiscreteP,
                                 SamplerP, MixtureP>;

    explicit ScalarDistribution(Storage s) : storage_(std::move(s)) {}
    Storage storage_;
};

/**
 * @brief Local-alternative innovation law (1 - r_n) G0 + r_n H with
 *        mixing weight r_n = min(1, rho / sqrt(n)).
 */
struct MixtureAn {
    MixtureAn(ScalarDistribution g0, ScalarDistribution h, double rho, Eigen::Index n);

    [[nodiscard]] double weight() const;
    [[nodiscard]] double cdf(double x) const;
    /// The mixture as an ordinary distribution object.
    [[nodiscard]] ScalarDistribution distribution() const;

    ScalarDistribution g0;
    ScalarDistribution h;
    double rho;
    Eigen::Index n;
};

/**
 * @brief E G0(x + b * xi) with xi distributed as pi.
 *
 * Exact weighted sum for discrete pi; adaptive Gauss-Legendre on the
 * quantile-transformed domain for continuous pi with an invertible CDF;
 * Monte Carlo with `budget` draws for the empirical_sampler kind. Throws
 * BudgetTooSmall when the absolute tolerance cannot be certified within
 * the budget.
 */
[[nodiscard]] double expect_cdf_shifted(const ScalarDistribution& g0, const ScalarDistribution& pi,
                                        double x, double b, long budget = 1L << 20,
                                        double tol = 1e-9);

/// Require zero mean and positive finite variance (innovation-law conditions);
/// throws DomainError with the offending property named.
void validate_innovation_law(const ScalarDistribution& d, const std::string& role);

}  // namespace sympearson
