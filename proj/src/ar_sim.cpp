#include "sympearson/ar_sim.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

#include "sympearson/errors.hpp"

namespace sympearson {

namespace {
constexpr double kStationarityMargin = 1e-9;

void format_value(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}
}  // namespace

double ARSpec::mean() const {
    const double delta = 1.0 - betas.sum();
    return nu / delta;
}

double ARSpec::max_root_modulus() const {
    const int p = order();
    if (p == 0) return 0.0;
    // Companion matrix of u_t = beta_1 u_{t-1} + ... + beta_p u_{t-p}.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    companion.row(0) = betas.transpose();
    if (p > 1) companion.block(1, 0, p - 1, p - 1).setIdentity();
    if (p == 1) return std::abs(betas[0]);
    const Eigen::VectorXcd roots = companion.eigenvalues();
    return roots.cwiseAbs().maxCoeff();
}

void ARSpec::validate() const {
    if (order() < 1) throw NotStationary("ARSpec: order p must be >= 1");
    if (!betas.allFinite() || !std::isfinite(nu)) throw NotStationary("ARSpec: parameters must be finite");
    const double r = max_root_modulus();
    if (!(r < 1.0 - kStationarityMargin))
        throw NotStationary("ARSpec: characteristic root modulus " + std::to_string(r) +
                            " violates the stationarity margin");
}

double ContaminationSpec::rate(Eigen::Index n) const {
    if (!(gamma >= 0.0)) throw DomainError("ContaminationSpec: gamma must be >= 0");
    if (n < 1) throw DomainError("ContaminationSpec: n must be >= 1");
    return std::min(1.0, gamma / std::sqrt(static_cast<double>(n)));
}

Eigen::Index default_burn_in(int p) { return std::max<Eigen::Index>(1000, 50L * p); }

LatentSeries simulate_clean(const ARSpec& spec, const ScalarDistribution& innovations,
                            Eigen::Index n, RngStream& rng, Eigen::Index burn_in) {
    spec.validate();
    const int p = spec.order();
    if (n < p + 1) throw DomainError("simulate_clean: n must exceed the order p");
    if (burn_in < 0) burn_in = default_burn_in(p);

    const Eigen::Index total = burn_in + n + p;
    const double mu = spec.mean();

    Eigen::VectorXd u = Eigen::VectorXd::Zero(total + p);  // p leading zeros = initial state
    Eigen::VectorXd eps(total);
    for (Eigen::Index i = 0; i < total; ++i) {
        eps[i] = innovations.sample(rng);
        double acc = eps[i];
        for (int j = 0; j < p; ++j) acc += spec.betas[j] * u[p + i - 1 - j];
        u[p + i] = acc;
    }

    LatentSeries out;
    out.p = p;
    out.n = n;
    out.v = (mu + u.tail(n + p).array()).matrix();
    out.eps = eps.tail(n + p);
    return out;
}

LatentSeries simulate_clean(const ARSpec& spec, const MixtureAn& innovations, Eigen::Index n,
                            RngStream& rng, Eigen::Index burn_in) {
    return simulate_clean(spec, innovations.distribution(), n, rng, burn_in);
}

ObservedSeries contaminate(const LatentSeries& latent, const ContaminationSpec& cont,
                           RngStream& rng) {
    const Eigen::Index len = latent.v.size();
    if (len != latent.n + latent.p) throw DomainError("contaminate: latent series has wrong length");
    const double rate = cont.rate(latent.n);

    SeriesTruth truth;
    truth.v = latent.v;
    truth.eps = latent.eps;
    truth.z.resize(len);
    truth.xi.resize(len);

    ObservedSeries out;
    out.p = latent.p;
    out.n = latent.n;
    out.y.resize(len);
    for (Eigen::Index i = 0; i < len; ++i) {
        truth.z[i] = rng.next_uniform() < rate ? 1 : 0;
        truth.xi[i] = cont.pi.sample(rng);
        out.y[i] = latent.v[i] + (truth.z[i] ? truth.xi[i] : 0.0);
    }
    out.truth = std::move(truth);
    return out;
}

ObservedSeries observe(Eigen::VectorXd y, int p) {
    if (p < 1) throw DomainError("observe: p must be >= 1");
    if (y.size() <= p) throw DomainError("observe: series must be longer than p");
    ObservedSeries out;
    out.p = p;
    out.n = y.size() - p;
    out.y = std::move(y);
    return out;
}

void write_series_csv(std::ostream& os, const ObservedSeries& series) {
    os << "t,y,v,z,xi,eps\n";
    for (Eigen::Index i = 0; i < series.y.size(); ++i) {
        const Eigen::Index t = i + 1 - series.p;
        os << t << ',';
        format_value(os, series.y[i]);
        if (series.truth) {
            os << ',';
            format_value(os, series.truth->v[i]);
            os << ',' << series.truth->z[i] << ',';
            format_value(os, series.truth->xi[i]);
            os << ',';
            format_value(os, series.truth->eps[i]);
        } else {
            os << ",,,,";
        }
        os << '\n';
    }
}

}  // namespace sympearson
