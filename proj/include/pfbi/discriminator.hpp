#ifndef PFBI_DISCRIMINATOR_HPP
#define PFBI_DISCRIMINATOR_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "pfbi/rng.hpp"

namespace pfbi {

/// Empirical set of latent points, one per row.
struct LatentDataset {
    explicit LatentDataset(Eigen::MatrixXd pts);

    int size() const { return static_cast<int>(points.rows()); }
    int dim() const { return static_cast<int>(points.cols()); }

    Eigen::MatrixXd points;  // N x d
};

/// Standard normal prior N(0, I_d).
struct PriorSpec {
    int dim;
};

/// Pre-activations are clamped to [-kLogitClamp, kLogitClamp] before the
/// output sigmoid so scores are strictly inside (0, 1).
inline constexpr double kLogitClamp = 30.0;

/// Feed-forward scorer: ReLU hidden layers, sigmoid output.
/// weights[l] is (n_out x n_in); row r holds the weights of output unit r.
struct DiscriminatorNet {
    DiscriminatorNet(std::vector<Eigen::MatrixXd> w, std::vector<Eigen::VectorXd> b);

    /// Net of the given architecture with all weights and biases zero
    /// (scores 0.5 everywhere).
    static DiscriminatorNet zeros(const std::vector<int>& layer_sizes);

    int input_dim() const { return static_cast<int>(weights.front().cols()); }
    std::vector<int> layer_sizes() const;

    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

/// Score in (0, 1) for a single point.
double forward(const DiscriminatorNet& net, const Eigen::Ref<const Eigen::VectorXd>& z);

/// Scores for each row of z.
Eigen::VectorXd forward_batch(const DiscriminatorNet& net,
                              const Eigen::Ref<const Eigen::MatrixXd>& z);

struct TrainConfig {
    int batch = 256;          // half data points, half prior draws
    int steps = 2000;
    double learning_rate = 1e-3;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t seed = 0;
};

inline const std::vector<int> kDefaultHidden = {100, 200, 500};

/// Binary cross-entropy training with Adam: positives drawn uniformly from
/// data.points, negatives fresh from N(0, I_d), equal counts per batch.
/// Reproducible for a fixed cfg.seed. Throws NonFiniteLoss if the batch loss
/// leaves the reals (learning rate too high).
DiscriminatorNet train(const LatentDataset& data,
                       const PriorSpec& prior,
                       const TrainConfig& cfg,
                       const std::vector<int>& hidden = kDefaultHidden);

/// Mean binary cross-entropy of the net on a labelled batch
/// (labels 1 = data, 0 = prior; sum of the two per-class means).
double bce_loss(const DiscriminatorNet& net,
                const Eigen::Ref<const Eigen::MatrixXd>& z,
                const Eigen::Ref<const Eigen::VectorXd>& labels);

/// Area under the ROC curve from positive/negative score samples
/// (rank statistic, ties get midranks).
double auc(const Eigen::VectorXd& pos_scores, const Eigen::VectorXd& neg_scores);

/// Textual weight file, header "pfbi-discriminator v1". Round-trips weights
/// bit-exactly (shortest round-trip decimal representation).
void save_net(const DiscriminatorNet& net, const std::filesystem::path& path);
DiscriminatorNet load_net(const std::filesystem::path& path);

}  // namespace pfbi

#endif  // PFBI_DISCRIMINATOR_HPP
