#include "pfbi/smc.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "pfbi/errors.hpp"
#include "pfbi/mvn.hpp"

namespace pfbi {
namespace {

constexpr std::uint64_t kResampleStream = ~0ULL;

Eigen::VectorXd scores_at(const DiscriminatorNet& net,
                          const ParticleEnsemble& ensemble,
                          int k) {
    Eigen::MatrixXd pts(ensemble.size(), ensemble.dim());
    for (int n = 0; n < ensemble.size(); ++n) {
        pts.row(n) = ensemble.paths[n].row(k);
    }
    return forward_batch(net, pts);
}

// Unnormalized per-particle log-weights at step k. Factors with a zero
// exponent are skipped, so with the algorithm1 preset this is exactly the
// log-score at t_k.
Eigen::VectorXd step_log_weights(const ParticleEnsemble& ensemble,
                                 const DiscriminatorNet& net,
                                 const WeightSchedule& sched,
                                 int k) {
    const StepExponents e = step_weight_exponents(sched, ensemble.grid, k);
    Eigen::VectorXd logw = Eigen::VectorXd::Zero(ensemble.size());
    if (e.prev_coeff != 0.0) {
        logw += e.prev_coeff * scores_at(net, ensemble, k - 1).array().log().matrix();
    }
    if (e.curr_coeff != 0.0) {
        logw += e.curr_coeff * scores_at(net, ensemble, k).array().log().matrix();
    }
    return logw;
}

}  // namespace

WeightSchedule::WeightSchedule(Eigen::VectorXd gamma_in, double xi_in)
    : gamma(std::move(gamma_in)), xi(xi_in) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("weight schedule: xi must lie in [0, 1]");
    }
    if (!gamma.allFinite() || (gamma.array() < 0.0).any()) {
        throw std::invalid_argument("weight schedule: gamma must be finite and >= 0");
    }
}

WeightSchedule WeightSchedule::algorithm1(const TimeGrid& grid) {
    const double delta = grid.horizon() / grid.steps();
    for (int k = 1; k <= grid.steps(); ++k) {
        if (std::abs(grid.delta(k) - delta) > 1e-12 * grid.horizon()) {
            throw std::invalid_argument("algorithm1 schedule requires an equidistant grid");
        }
    }
    return WeightSchedule(Eigen::VectorXd::Constant(grid.size(), 1.0 / delta), 0.0);
}

WeightSchedule WeightSchedule::constant(const TimeGrid& grid, double gamma_value, double xi) {
    return WeightSchedule(Eigen::VectorXd::Constant(grid.size(), gamma_value), xi);
}

StepExponents step_weight_exponents(const WeightSchedule& sched, const TimeGrid& grid, int k) {
    if (k < 1 || k > grid.steps() - 1) {
        throw std::invalid_argument("step_weight_exponents: k must lie in [1, m-1]");
    }
    if (sched.gamma.size() != grid.size()) {
        throw DimensionMismatch("weight schedule does not match the grid");
    }
    const double delta_k = grid.delta(k);
    const double tail = grid.horizon() - grid.time(k);
    // [f(t_{k-1})^{xi g_{k-1}} f(t_k)^{(1-xi) g_k}]^{dt} *
    // [f(t_k)^{xi g_k} f(T)^{(1-xi) g_T}]^{T-t_k}; the f(T) factor is common
    // to all particles and drops under normalization.
    return StepExponents{
        sched.xi * sched.gamma[k - 1] * delta_k,
        (1.0 - sched.xi) * sched.gamma[k] * delta_k + sched.xi * sched.gamma[k] * tail,
    };
}

Eigen::VectorXd normalize_log_weights(const Eigen::VectorXd& log_weights) {
    if (log_weights.size() == 0) {
        throw DegenerateWeights("normalize_log_weights: empty weight vector");
    }
    const double shift = log_weights.maxCoeff();
    if (!std::isfinite(shift)) {
        throw DegenerateWeights("normalize_log_weights: all log-weights underflow");
    }
    Eigen::VectorXd w = (log_weights.array() - shift).exp();
    const double total = w.sum();
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw DegenerateWeights("normalize_log_weights: weight sum is not positive");
    }
    return w / total;
}

ParticleEnsemble::ParticleEnsemble(const LatentPoint& z0,
                                   const LatentPoint& zT,
                                   const TimeGrid& grid_in,
                                   int n_particles)
    : grid(grid_in), filled(1) {
    if (z0.size() != zT.size()) {
        throw DimensionMismatch("particle ensemble: endpoint dimensions differ");
    }
    if (n_particles < 1) {
        throw std::invalid_argument("particle ensemble: need at least one particle");
    }
    Eigen::MatrixXd proto = Eigen::MatrixXd::Zero(grid.size(), z0.size());
    proto.row(0) = z0.transpose();
    proto.row(grid.steps()) = zT.transpose();
    paths.assign(n_particles, proto);
}

Eigen::VectorXd step_weights(const ParticleEnsemble& ensemble,
                             const DiscriminatorNet& net,
                             const WeightSchedule& sched,
                             int k) {
    if (k >= ensemble.filled && k != ensemble.grid.steps()) {
        throw std::invalid_argument("step_weights: particles not extended through t_k");
    }
    return normalize_log_weights(step_log_weights(ensemble, net, sched, k));
}

ParticleEnsemble resample_multinomial(const ParticleEnsemble& ensemble,
                                      const Eigen::VectorXd& weights,
                                      Rng& rng) {
    if (weights.size() != ensemble.size()) {
        throw DimensionMismatch("resample_multinomial: one weight per particle required");
    }
    Eigen::VectorXd cdf(weights.size());
    std::partial_sum(weights.data(), weights.data() + weights.size(), cdf.data());

    ParticleEnsemble out = ensemble;
    for (int n = 0; n < ensemble.size(); ++n) {
        const double u = rng.uniform() * cdf[cdf.size() - 1];
        // First index with cdf > u, so zero-weight particles are never picked.
        const auto it = std::upper_bound(cdf.data(), cdf.data() + cdf.size(), u);
        auto idx = static_cast<Eigen::Index>(it - cdf.data());
        if (idx >= cdf.size()) {
            idx = cdf.size() - 1;
            while (idx > 0 && cdf[idx] == cdf[idx - 1]) --idx;
        }
        out.paths[n] = ensemble.paths[idx];
    }
    return out;
}

double ess(const Eigen::VectorXd& weights) {
    return 1.0 / weights.squaredNorm();
}

SmcResult smc_interpolate(const LatentPoint& z0,
                          const LatentPoint& zT,
                          const KernelParams& params,
                          const TimeGrid& grid,
                          const DiscriminatorNet& net,
                          const WeightSchedule& sched,
                          int n_particles,
                          Rng& rng,
                          const SmcOptions& options) {
    if (z0.size() != net.input_dim()) {
        throw DimensionMismatch("smc_interpolate: endpoint and net dimensions differ");
    }
    const int m = grid.steps();
    const int d = static_cast<int>(z0.size());
    const CovMatrix sigma = build_covariance(params, grid);

    ParticleEnsemble ensemble(z0, zT, grid, n_particles);
    Eigen::VectorXd cum_logw = Eigen::VectorXd::Zero(n_particles);
    Eigen::VectorXd observed;

    for (int k = 1; k < m; ++k) {
        // One shared conditional per step: every particle has a history on
        // the same times, so the mean map and variance are common and only
        // the observed values differ.
        std::vector<int> given(k);
        std::iota(given.begin(), given.end(), 0);
        given.push_back(m);
        const GaussianCond cond = condition(sigma, {k}, given, options.jitter);
        const double sd = std::sqrt(std::max(cond.cond_cov(0, 0), 0.0));

        observed.resize(k + 1);
        for (int n = 0; n < n_particles; ++n) {
            Rng step_rng = rng.child(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
            auto& path = ensemble.paths[n];
            for (int c = 0; c < d; ++c) {
                observed.head(k) = path.col(c).head(k);
                observed[k] = zT[c];
                path(k, c) = (cond.mean_map * observed)(0) + sd * step_rng.normal();
            }
        }
        ensemble.filled = k + 1;

        cum_logw += step_log_weights(ensemble, net, sched, k);
        const Eigen::VectorXd w = normalize_log_weights(cum_logw);
        const bool resample =
            !options.ess_threshold || ess(w) < *options.ess_threshold * n_particles;
        if (resample) {
            Rng resample_rng = rng.child(kResampleStream, static_cast<std::uint64_t>(k));
            ensemble = resample_multinomial(ensemble, w, resample_rng);
            cum_logw.setZero();
        }
    }
    ensemble.filled = grid.size();
    return SmcResult{Path(grid, ensemble.paths.front()), std::move(ensemble)};
}

}  // namespace pfbi
