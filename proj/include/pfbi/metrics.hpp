#ifndef PFBI_METRICS_HPP
#define PFBI_METRICS_HPP

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "pfbi/bridge.hpp"
#include "pfbi/discriminator.hpp"
#include "pfbi/rng.hpp"

namespace pfbi {

enum class MeanScoreMode {
    kInteriorAverage,  // mean over interior points of nearest-data distance
    kMidpoint,         // nearest-data distance of points[m/2]
};

/// Nearest-neighbour Euclidean distance from the path to the dataset,
/// midpoint or interior-average flavour.
double mean_score(const Path& path, const LatentDataset& data, MeanScoreMode mode);

/// Maximum turning angle (radians) between consecutive displacement
/// vectors; zero-length segments contribute 0. A straight path scores 0.
double smoothness_score(const Path& path);

/// Per-coordinate sample standard deviation (n-1 normalization) of the
/// midpoints, averaged over coordinates. Needs at least two midpoints.
double variability_score(const std::vector<LatentPoint>& midpoints);

struct ScoreReport {
    double mean_score = 0;
    double mean_std = 0;
    double smoothness = 0;
    double smoothness_std = 0;
    double variability = 0;
    int n_interpolations = 0;
};

using PathSampler = std::function<Path(const LatentPoint&, const LatentPoint&, Rng&)>;
using EndpointPair = std::pair<LatentPoint, LatentPoint>;

/// Run `sampler` over the endpoint pairs: mean and smoothness scores come
/// from the first sampled path per pair (mean/std across pairs), variability
/// from the midpoints of `repeats` re-samplings per pair (averaged over
/// pairs; 0 when repeats < 2). Pair i, repeat r draws from rng.child(i, r).
ScoreReport evaluate_method(const PathSampler& sampler,
                            const std::vector<EndpointPair>& endpoints,
                            const LatentDataset& data,
                            int repeats,
                            MeanScoreMode mode,
                            const Rng& rng);

}  // namespace pfbi

#endif  // PFBI_METRICS_HPP
