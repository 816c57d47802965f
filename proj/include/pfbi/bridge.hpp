#ifndef PFBI_BRIDGE_HPP
#define PFBI_BRIDGE_HPP

#include <Eigen/Dense>

#include "pfbi/kernel.hpp"
#include "pfbi/mvn.hpp"
#include "pfbi/rng.hpp"

namespace pfbi {

using LatentPoint = Eigen::VectorXd;

/// An interpolation path: point k (row k) sits at grid time t_k.
/// Rows 0 and m hold the endpoints exactly.
struct Path {
    Path(TimeGrid grid, Eigen::MatrixXd points);

    int dim() const { return static_cast<int>(points.cols()); }
    LatentPoint point(int k) const { return points.row(k).transpose(); }
    LatentPoint midpoint() const { return point(grid.steps() / 2); }

    TimeGrid grid;
    Eigen::MatrixXd points;  // (m+1) x d
};

/// Straight-line path, points[k] = z0 + (t_k / T) (zT - z0).
Path linear_path(const LatentPoint& z0, const LatentPoint& zT, const TimeGrid& grid);

/// One sequential bridge step: draws the point at t_k (k = history rows)
/// given the whole history t_0..t_{k-1} and the pinned endpoint at t_m.
/// Coordinates are independent and share the time conditional; sigma is the
/// full-grid time covariance.
LatentPoint bridge_step(const Eigen::MatrixXd& history,
                        const LatentPoint& z_end,
                        const CovMatrix& sigma,
                        Rng& rng,
                        double jitter = kDefaultJitter);

/// Bridge path with endpoints pinned exactly; the interior is generated by
/// repeated bridge_step, k = 1..m-1.
Path sample_bridge(const LatentPoint& z0,
                   const LatentPoint& zT,
                   const KernelParams& params,
                   const TimeGrid& grid,
                   Rng& rng);

/// Distributionally identical to sample_bridge, built the other way round:
/// the whole interior block is conditioned on both endpoints at once and one
/// joint draw is taken per coordinate. Serves as an independent cross-check
/// of the sequential sampler.
Path sample_bridge_joint_oracle(const LatentPoint& z0,
                                const LatentPoint& zT,
                                const KernelParams& params,
                                const TimeGrid& grid,
                                Rng& rng);

/// Pointwise average of n sampled bridge paths (endpoints stay pinned).
Path mean_bridge_path(const LatentPoint& z0,
                      const LatentPoint& zT,
                      const KernelParams& params,
                      const TimeGrid& grid,
                      int n_samples,
                      Rng& rng);

}  // namespace pfbi

#endif  // PFBI_BRIDGE_HPP
