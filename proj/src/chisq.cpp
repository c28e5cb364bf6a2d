#include "sympearson/chisq.hpp"

#include <cmath>
#include <limits>

#include "sympearson/errors.hpp"
#include "sympearson/special_functions.hpp"

namespace sympearson {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

double chi_squared_pdf(double x, int dof) {
    if (x <= 0.0) return 0.0;
    const double a = 0.5 * dof;
    return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * M_LN2 - std::lgamma(a));
}

}  // namespace

double chi_squared_cdf(double x, int dof) {
    if (dof < 1) throw DomainError("chi_squared_cdf: dof must be >= 1");
    if (std::isnan(x) || x < 0.0) throw DomainError("chi_squared_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return lower_gamma_regularized(0.5 * dof, 0.5 * x);
}

namespace detail {

double noncentral_chi_squared_cdf_tail(double x, int dof, double lambda2, double tail_weight) {
    if (dof < 1) throw DomainError("noncentral_chi_squared_cdf: dof must be >= 1");
    if (!(lambda2 >= 0.0)) throw DomainError("noncentral_chi_squared_cdf: lambda2 must be >= 0");
    if (std::isnan(x) || x < 0.0) throw DomainError("noncentral_chi_squared_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    if (lambda2 == 0.0) return lower_gamma_regularized(0.5 * dof, 0.5 * x);

    const double half = 0.5 * lambda2;
    const double a = 0.5 * dof;
    const double xx = 0.5 * x;
    const long mode = static_cast<long>(std::floor(half));

    // Poisson weight and central CDF at the mode term.
    const double lw0 = -half + (mode > 0 ? mode * std::log(half) : 0.0) - std::lgamma(mode + 1.0);
    const double w0 = std::exp(lw0);
    const double p0 = lower_gamma_regularized(a + mode, xx);
    // t(s) = xx^s e^{-xx} / Gamma(s+1) links successive central CDFs:
    // P(s+1, xx) = P(s, xx) - t(s).
    const double lt0 = (a + mode) * std::log(xx) - xx - std::lgamma(a + mode + 1.0);
    const double t0 = std::exp(lt0);

    double sum = w0 * p0;
    double covered = w0;

    // upward from the mode
    {
        double w = w0;
        double p = p0;
        double t = t0;
        long j = mode;
        while (covered < 1.0 - tail_weight && j < mode + 100000000L) {
            w *= half / static_cast<double>(j + 1);
            p -= t;
            if (p < 0.0) p = 0.0;
            t *= xx / (a + static_cast<double>(j) + 1.0);
            ++j;
            sum += w * p;
            covered += w;
            if (w < tail_weight * 1e-3 && static_cast<double>(j) > half) break;
        }
    }
    // downward from the mode
    {
        double w = w0;
        double p = p0;
        double t = t0;
        for (long j = mode; j > 0 && covered < 1.0 - tail_weight; --j) {
            w *= static_cast<double>(j) / half;
            t *= (a + static_cast<double>(j)) / xx;
            p += t;
            if (p > 1.0) p = 1.0;
            sum += w * p;
            covered += w;
        }
    }
    return std::min(1.0, sum);
}

}  // namespace detail

double noncentral_chi_squared_cdf(double x, int dof, double lambda2) {
    return detail::noncentral_chi_squared_cdf_tail(x, dof, lambda2, 1e-12);
}

double chi_squared_quantile(int dof, double q) {
    if (dof < 1) throw DomainError("chi_squared_quantile: dof must be >= 1");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("chi_squared_quantile: q must lie in (0,1)");

    // Wilson-Hilferty starting point.
    const double z = normal_quantile(q);
    const double c = 2.0 / (9.0 * dof);
    double t = 1.0 - c + z * std::sqrt(c);
    double x = dof * (t > 0.0 ? t * t * t : 1e-8);
    if (x <= 0.0) x = 1e-8;

    // bracket the root
    double lo = x;
    double hi = x;
    while (lo > 0.0 && chi_squared_cdf(lo, dof) > q) lo *= 0.5;
    while (chi_squared_cdf(hi, dof) < q) hi = hi * 2.0 + 1.0;
    x = std::clamp(x, lo, hi);

    for (int i = 0; i < 100; ++i) {
        const double f = chi_squared_cdf(x, dof) - q;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        const double d = chi_squared_pdf(x, dof);
        double xn;
        if (d > 0.0) {
            xn = x - f / d;
            if (xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);
        } else {
            xn = 0.5 * (lo + hi);
        }
        if (std::abs(xn - x) <= 1e-14 * (1.0 + std::abs(x))) {
            x = xn;
            break;
        }
        x = xn;
    }
    return x;
}

double lipschitz_gap_bound(double lambda1, double lambda2) {
    return 2.0 * kInvSqrt2Pi * std::abs(lambda1 - lambda2);
}

}  // namespace sympearson
