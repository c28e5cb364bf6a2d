#include "sympearson/edf_shift.hpp"

#include <algorithm>
#include <cmath>

#include "sympearson/errors.hpp"

namespace sympearson {

Edf::Edf(Eigen::VectorXd sample) : sorted_(std::move(sample)) {
    if (sorted_.size() == 0) throw EmptySample("Edf: sample is empty");
    std::sort(sorted_.data(), sorted_.data() + sorted_.size());
}

double Edf::operator()(double x) const {
    const double* begin = sorted_.data();
    const double* end = begin + sorted_.size();
    const auto count = std::upper_bound(begin, end, x) - begin;
    return static_cast<double>(count) / static_cast<double>(sorted_.size());
}

double Edf::sym(double x) const { return 0.5 * ((*this)(x) + 1.0 - (*this)(-x)); }

double edf_eval(std::span<const double> sample, double x) {
    if (sample.empty()) throw EmptySample("edf_eval: sample is empty");
    Eigen::Index count = 0;
    for (double v : sample) count += (v <= x) ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(sample.size());
}

double sym_edf_eval(std::span<const double> sample, double x) {
    return 0.5 * (edf_eval(sample, x) + 1.0 - edf_eval(sample, -x));
}

double shift_delta(const ShiftContext& ctx, double x) {
    if (std::isnan(x)) throw DomainError("shift_delta: x is NaN");
    if (std::isinf(x)) return 0.0;
    const double g0x = ctx.g0.cdf(x);
    double total = expect_cdf_shifted(ctx.g0, ctx.pi, x, -1.0, ctx.budget, ctx.tol) - g0x;
    for (Eigen::Index j = 0; j < ctx.betas.size(); ++j) {
        total += expect_cdf_shifted(ctx.g0, ctx.pi, x, ctx.betas[j], ctx.budget, ctx.tol) - g0x;
    }
    return total;
}

double shift_delta_sym(const ShiftContext& ctx, double x) {
    return 0.5 * (shift_delta(ctx, x) - shift_delta(ctx, -x));
}

Eigen::VectorXd delta_vector(const ShiftContext& ctx, const Eigen::VectorXd& breakpoints) {
    const Eigen::Index m = breakpoints.size() - 1;
    if (m < 1) throw DomainError("delta_vector: breakpoint vector too short");
    Eigen::VectorXd sym_at(m + 1);
    for (Eigen::Index j = 0; j <= m; ++j) sym_at[j] = shift_delta_sym(ctx, breakpoints[j]);
    Eigen::VectorXd delta(m);
    for (Eigen::Index j = 0; j < m; ++j) delta[j] = 2.0 * (sym_at[j + 1] - sym_at[j]);
    return delta;
}

}  // namespace sympearson
