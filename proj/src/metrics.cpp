#include "pfbi/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pfbi/errors.hpp"

namespace pfbi {
namespace {

double nearest_distance(const Eigen::RowVectorXd& p, const LatentDataset& data) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < data.points.rows(); ++i) {
        best = std::min(best, (data.points.row(i) - p).squaredNorm());
    }
    return std::sqrt(best);
}

double sample_std(const Eigen::VectorXd& v) {
    const double mean = v.mean();
    return std::sqrt((v.array() - mean).square().sum() / static_cast<double>(v.size() - 1));
}

}  // namespace

double mean_score(const Path& path, const LatentDataset& data, MeanScoreMode mode) {
    if (data.size() < 1) {
        throw EmptyDataset("mean_score: empty dataset");
    }
    if (path.dim() != data.dim()) {
        throw DimensionMismatch("mean_score: path and dataset dimensions differ");
    }
    const int m = path.grid.steps();
    if (mode == MeanScoreMode::kMidpoint) {
        return nearest_distance(path.points.row(m / 2), data);
    }
    double total = 0.0;
    for (int k = 1; k < m; ++k) {
        total += nearest_distance(path.points.row(k), data);
    }
    return total / static_cast<double>(m - 1);
}

double smoothness_score(const Path& path) {
    const int m = path.grid.steps();
    double worst = 0.0;
    for (int k = 1; k < m; ++k) {
        const Eigen::RowVectorXd a = path.points.row(k) - path.points.row(k - 1);
        const Eigen::RowVectorXd b = path.points.row(k + 1) - path.points.row(k);
        const double na = a.norm(), nb = b.norm();
        if (na == 0.0 || nb == 0.0) {
            continue;  // zero-length segment, angle 0
        }
        const double cosv = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
        worst = std::max(worst, std::acos(cosv));
    }
    return worst;
}

double variability_score(const std::vector<LatentPoint>& midpoints) {
    if (midpoints.size() < 2) {
        throw InsufficientSamples("variability_score: need at least two midpoints");
    }
    const Eigen::Index d = midpoints.front().size();
    Eigen::MatrixXd stacked(midpoints.size(), d);
    for (std::size_t i = 0; i < midpoints.size(); ++i) {
        if (midpoints[i].size() != d) {
            throw DimensionMismatch("variability_score: midpoint dimensions differ");
        }
        stacked.row(static_cast<Eigen::Index>(i)) = midpoints[i].transpose();
    }
    double total = 0.0;
    for (Eigen::Index c = 0; c < d; ++c) {
        total += sample_std(stacked.col(c));
    }
    return total / static_cast<double>(d);
}

ScoreReport evaluate_method(const PathSampler& sampler,
                            const std::vector<EndpointPair>& endpoints,
                            const LatentDataset& data,
                            int repeats,
                            MeanScoreMode mode,
                            const Rng& rng) {
    if (endpoints.empty()) {
        throw InsufficientSamples("evaluate_method: no endpoint pairs");
    }
    if (repeats < 1) {
        throw InsufficientSamples("evaluate_method: repeats must be >= 1");
    }
    const auto n_pairs = static_cast<int>(endpoints.size());
    Eigen::VectorXd means(n_pairs), smooths(n_pairs);
    double variability_sum = 0.0;

    for (int i = 0; i < n_pairs; ++i) {
        std::vector<LatentPoint> midpoints;
        midpoints.reserve(repeats);
        for (int r = 0; r < repeats; ++r) {
            Rng draw = rng.child(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(r));
            const Path path = sampler(endpoints[i].first, endpoints[i].second, draw);
            if (r == 0) {
                means[i] = mean_score(path, data, mode);
                smooths[i] = smoothness_score(path);
            }
            midpoints.push_back(path.midpoint());
        }
        if (repeats >= 2) {
            variability_sum += variability_score(midpoints);
        }
    }

    ScoreReport report;
    report.mean_score = means.mean();
    report.smoothness = smooths.mean();
    report.mean_std = n_pairs > 1 ? sample_std(means) : 0.0;
    report.smoothness_std = n_pairs > 1 ? sample_std(smooths) : 0.0;
    report.variability = repeats >= 2 ? variability_sum / n_pairs : 0.0;
    report.n_interpolations = n_pairs;
    return report;
}

}  // namespace pfbi
