#ifndef PFBI_SMC_HPP
#define PFBI_SMC_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "pfbi/bridge.hpp"
#include "pfbi/discriminator.hpp"
#include "pfbi/kernel.hpp"
#include "pfbi/rng.hpp"

namespace pfbi {

/// Weight discretization of the change of measure: a per-time tilt strength
/// gamma (values on the grid) and the endpoint mixing parameter xi in [0,1].
struct WeightSchedule {
    WeightSchedule(Eigen::VectorXd gamma, double xi);

    /// The preset used throughout the reference experiments: xi = 0 and
    /// gamma identically 1/Delta on an equidistant grid, under which the
    /// step weight reduces to the raw score at t_k.
    static WeightSchedule algorithm1(const TimeGrid& grid);

    /// Constant gamma on every grid time.
    static WeightSchedule constant(const TimeGrid& grid, double gamma_value, double xi);

    Eigen::VectorXd gamma;  // one value per grid time, size m+1
    double xi;
};

/// Exponent coefficients of the step-k weight
///   w_k = f(Z(t_{k-1}))^prev_coeff * f(Z(t_k))^curr_coeff * C,
/// where C collects the factor on f(Z(T)). That factor is shared by all
/// particles (the endpoint is pinned) and cancels under normalization, so it
/// is never evaluated. With the algorithm1 preset on an equidistant grid the
/// coefficients are exactly (0, 1).
struct StepExponents {
    double prev_coeff;
    double curr_coeff;
};

StepExponents step_weight_exponents(const WeightSchedule& sched, const TimeGrid& grid, int k);

/// Normalize unnormalized log-weights into probabilities: shift by the max,
/// exponentiate, divide by the sum. Throws DegenerateWeights when every
/// weight underflows to zero (or a log-weight is NaN).
Eigen::VectorXd normalize_log_weights(const Eigen::VectorXd& log_weights);

/// N partial interpolation paths advancing in lockstep. Row 0 and row m of
/// every particle hold the pinned endpoints; rows 1..filled-1 are populated.
struct ParticleEnsemble {
    ParticleEnsemble(const LatentPoint& z0,
                     const LatentPoint& zT,
                     const TimeGrid& grid,
                     int n_particles);

    int size() const { return static_cast<int>(paths.size()); }
    int dim() const { return static_cast<int>(paths.front().cols()); }

    TimeGrid grid;
    std::vector<Eigen::MatrixXd> paths;  // each (m+1) x d
    int filled;                          // rows [0, filled) are populated
};

/// Normalized resampling weights at step k (particles extended through t_k):
/// per-particle log-weights from the step exponents, then
/// normalize_log_weights. Scores with a zero exponent are not evaluated.
Eigen::VectorXd step_weights(const ParticleEnsemble& ensemble,
                             const DiscriminatorNet& net,
                             const WeightSchedule& sched,
                             int k);

/// Multinomial resampling: N ancestor indices drawn iid from `weights`,
/// particle paths copied accordingly. Weights are implicitly reset to
/// uniform (the caller restarts accumulation).
ParticleEnsemble resample_multinomial(const ParticleEnsemble& ensemble,
                                      const Eigen::VectorXd& weights,
                                      Rng& rng);

/// Effective sample size 1 / sum(w_i^2) of normalized weights.
double ess(const Eigen::VectorXd& weights);

struct SmcOptions {
    /// Unset: resample at every step (the reference scheme). Set: resample
    /// only when ESS < threshold * N, accumulating weights in between.
    std::optional<double> ess_threshold;
    double jitter = kDefaultJitter;
};

struct SmcResult {
    Path path;                  // first particle of the final ensemble
    ParticleEnsemble ensemble;  // full final ensemble
};

/// Sequential Monte Carlo interpolation: for k = 1..m-1 every particle is
/// extended by the bridge conditional given its own history and the pinned
/// endpoint, weighted with the discriminator, and multinomially resampled.
/// Mutation noise for particle n at step k comes from rng.child(n, k) and
/// resampling from its own per-step stream, so results do not depend on
/// evaluation order.
SmcResult smc_interpolate(const LatentPoint& z0,
                          const LatentPoint& zT,
                          const KernelParams& params,
                          const TimeGrid& grid,
                          const DiscriminatorNet& net,
                          const WeightSchedule& sched,
                          int n_particles,
                          Rng& rng,
                          const SmcOptions& options = {});

}  // namespace pfbi

#endif  // PFBI_SMC_HPP
