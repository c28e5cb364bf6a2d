#include "sympearson/estimation.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sympearson/errors.hpp"

namespace sympearson {

namespace {

constexpr double kMaxGramCondition = 1e12;

double median_inplace(std::vector<double>& v) {
    const std::size_t n = v.size();
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(v.begin(), mid, v.end());
    double m = *mid;
    if (n % 2 == 0) {
        auto lo = std::max_element(v.begin(), mid);
        m = 0.5 * (m + *lo);
    }
    return m;
}

// MAD-based robust scale, normalized for the Gaussian.
double robust_scale(const Eigen::VectorXd& r) {
    std::vector<double> tmp(r.data(), r.data() + r.size());
    const double med = median_inplace(tmp);
    for (auto& v : tmp) v = std::abs(v - med);
    return median_inplace(tmp) / 0.6745;
}

Eigen::VectorXd huber_weights(const Eigen::VectorXd& r, double k, double scale) {
    Eigen::VectorXd w(r.size());
    const double bound = k * scale;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
        const double a = std::abs(r[i]);
        w[i] = a <= bound ? 1.0 : bound / a;
    }
    return w;
}

double huber_location(const Eigen::VectorXd& y, const HuberOptions& opt) {
    std::vector<double> tmp(y.data(), y.data() + y.size());
    double mu = median_inplace(tmp);
    for (int it = 0; it < opt.max_iter; ++it) {
        const Eigen::VectorXd r = (y.array() - mu).matrix();
        const double s = robust_scale(r);
        if (!(s > 0.0)) break;
        const Eigen::VectorXd w = huber_weights(r, opt.k, s);
        const double mu_new = w.dot(y) / w.sum();
        const bool done = std::abs(mu_new - mu) <= opt.tol * (1.0 + std::abs(mu));
        mu = mu_new;
        if (done) break;
    }
    return mu;
}

void check_condition(const Eigen::MatrixXd& design) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(design);
    const auto& sv = svd.singularValues();
    const double smax = sv[0];
    const double smin = sv[sv.size() - 1];
    if (!(smin > 0.0) || (smax / smin) * (smax / smin) > kMaxGramCondition)
        throw SingularDesign("fit: lag Gram matrix condition number exceeds 1e12");
}

Eigen::VectorXd solve_ls(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    check_condition(design);
    return design.colPivHouseholderQr().solve(response);
}

Eigen::VectorXd solve_huber(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                            const HuberOptions& opt) {
    Eigen::VectorXd beta = solve_ls(design, response);
    for (int it = 0; it < opt.max_iter; ++it) {
        const Eigen::VectorXd r = response - design * beta;
        const double s = robust_scale(r);
        if (!(s > 0.0)) break;
        const Eigen::VectorXd w = huber_weights(r, opt.k, s).cwiseSqrt();
        const Eigen::MatrixXd wx = w.asDiagonal() * design;
        const Eigen::VectorXd wy = w.cwiseProduct(response);
        const Eigen::VectorXd beta_new = wx.colPivHouseholderQr().solve(wy);
        const bool done = (beta_new - beta).cwiseAbs().maxCoeff() <= opt.tol;
        beta = beta_new;
        if (done) break;
    }
    return beta;
}

}  // namespace

FittedAR fit(const ObservedSeries& series, EstimatorMethod method, const HuberOptions& huber) {
    const int p = series.p;
    const Eigen::Index n = series.n;
    if (n <= 5L * p) throw DomainError("fit: n must exceed 5p");

    const Eigen::VectorXd observed = series.y.tail(n);  // y_1 .. y_n
    FittedAR out;
    out.method = method;
    out.mu_hat = method == EstimatorMethod::least_squares ? observed.mean()
                                                          : huber_location(observed, huber);

    const Eigen::VectorXd u_hat = (series.y.array() - out.mu_hat).matrix();  // t = 1-p .. n
    Eigen::MatrixXd design(n, p);
    for (int j = 1; j <= p; ++j) design.col(j - 1) = u_hat.segment(p - j, n);
    const Eigen::VectorXd response = u_hat.tail(n);

    out.betas_hat = method == EstimatorMethod::least_squares ? solve_ls(design, response)
                                                             : solve_huber(design, response, huber);
    out.delta_hat = 1.0 - out.betas_hat.sum();
    return out;
}

ResidualSet residuals(const ObservedSeries& series, const FittedAR& fitted) {
    const int p = series.p;
    const Eigen::Index n = series.n;
    if (fitted.betas_hat.size() != p) throw DomainError("residuals: fit order does not match series");

    const Eigen::VectorXd u_hat = (series.y.array() - fitted.mu_hat).matrix();
    ResidualSet out;
    out.eps_hat.resize(n);
    for (Eigen::Index t = 0; t < n; ++t) {
        double acc = u_hat[p + t];
        for (int j = 1; j <= p; ++j) acc -= fitted.betas_hat[j - 1] * u_hat[p + t - j];
        out.eps_hat[t] = acc;
    }
    return out;
}

}  // namespace sympearson
