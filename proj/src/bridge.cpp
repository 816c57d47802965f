#include "pfbi/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "pfbi/errors.hpp"

namespace pfbi {

Path::Path(TimeGrid grid_in, Eigen::MatrixXd points_in)
    : grid(std::move(grid_in)), points(std::move(points_in)) {
    if (points.rows() != grid.size()) {
        throw DimensionMismatch("path length does not match its time grid");
    }
}

Path linear_path(const LatentPoint& z0, const LatentPoint& zT, const TimeGrid& grid) {
    if (z0.size() != zT.size()) {
        throw DimensionMismatch("linear_path: endpoint dimensions differ");
    }
    const int m = grid.steps();
    Eigen::MatrixXd pts(m + 1, z0.size());
    pts.row(0) = z0.transpose();
    pts.row(m) = zT.transpose();
    const LatentPoint delta = zT - z0;
    for (int k = 1; k < m; ++k) {
        pts.row(k) = (z0 + (grid.time(k) / grid.horizon()) * delta).transpose();
    }
    return Path(grid, std::move(pts));
}

LatentPoint bridge_step(const Eigen::MatrixXd& history,
                        const LatentPoint& z_end,
                        const CovMatrix& sigma,
                        Rng& rng,
                        double jitter) {
    const int m = static_cast<int>(sigma.rows()) - 1;
    const int k = static_cast<int>(history.rows());
    const int d = static_cast<int>(history.cols());
    if (k < 1 || k > m - 1) {
        throw DimensionMismatch("bridge_step: step index out of range");
    }
    if (z_end.size() != d) {
        throw DimensionMismatch("bridge_step: endpoint dimension differs from history");
    }

    std::vector<int> given(k);
    std::iota(given.begin(), given.end(), 0);
    given.push_back(m);
    const GaussianCond cond = condition(sigma, {k}, given, jitter);
    const double sd = std::sqrt(std::max(cond.cond_cov(0, 0), 0.0));

    // Same conditional law for every coordinate: shared time covariance,
    // independent noise.
    LatentPoint out(d);
    Eigen::VectorXd observed(k + 1);
    for (int c = 0; c < d; ++c) {
        observed.head(k) = history.col(c);
        observed[k] = z_end[c];
        const double mean = (cond.mean_map * observed)(0);
        out[c] = mean + sd * rng.normal();
    }
    return out;
}

Path sample_bridge(const LatentPoint& z0,
                   const LatentPoint& zT,
                   const KernelParams& params,
                   const TimeGrid& grid,
                   Rng& rng) {
    if (z0.size() != zT.size()) {
        throw DimensionMismatch("sample_bridge: endpoint dimensions differ");
    }
    const int m = grid.steps();
    const CovMatrix sigma = build_covariance(params, grid);
    Eigen::MatrixXd pts(m + 1, z0.size());
    pts.row(0) = z0.transpose();
    pts.row(m) = zT.transpose();
    for (int k = 1; k < m; ++k) {
        pts.row(k) = bridge_step(pts.topRows(k), zT, sigma, rng).transpose();
    }
    return Path(grid, std::move(pts));
}

Path sample_bridge_joint_oracle(const LatentPoint& z0,
                                const LatentPoint& zT,
                                const KernelParams& params,
                                const TimeGrid& grid,
                                Rng& rng) {
    if (z0.size() != zT.size()) {
        throw DimensionMismatch("sample_bridge_joint_oracle: endpoint dimensions differ");
    }
    const int m = grid.steps();
    const int d = static_cast<int>(z0.size());
    const CovMatrix sigma = build_covariance(params, grid);

    std::vector<int> interior(m - 1);
    std::iota(interior.begin(), interior.end(), 1);
    const GaussianCond cond = condition(sigma, interior, {0, m});
    const Eigen::MatrixXd chol = cholesky_jitter(cond.cond_cov);

    Eigen::MatrixXd pts(m + 1, d);
    pts.row(0) = z0.transpose();
    pts.row(m) = zT.transpose();
    Eigen::Vector2d observed;
    for (int c = 0; c < d; ++c) {
        observed << z0[c], zT[c];
        const Eigen::VectorXd mean = cond.mean_map * observed;
        pts.col(c).segment(1, m - 1) = sample_mvn(mean, chol, rng);
    }
    return Path(grid, std::move(pts));
}

Path mean_bridge_path(const LatentPoint& z0,
                      const LatentPoint& zT,
                      const KernelParams& params,
                      const TimeGrid& grid,
                      int n_samples,
                      Rng& rng) {
    if (n_samples < 1) {
        throw InsufficientSamples("mean_bridge_path: need at least one sample");
    }
    Path acc = sample_bridge(z0, zT, params, grid, rng);
    for (int s = 1; s < n_samples; ++s) {
        acc.points += sample_bridge(z0, zT, params, grid, rng).points;
    }
    acc.points /= static_cast<double>(n_samples);
    acc.points.row(0) = z0.transpose();
    acc.points.row(grid.steps()) = zT.transpose();
    return acc;
}

}  // namespace pfbi
