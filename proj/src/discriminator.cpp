#include "pfbi/discriminator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pfbi/errors.hpp"
#include "pfbi/io.hpp"

namespace pfbi {
namespace {

double sigmoid(double s) {
    return 1.0 / (1.0 + std::exp(-s));
}

// log(1 + e^x) without overflow.
double softplus(double x) {
    return std::log1p(std::exp(-std::abs(x))) + std::max(x, 0.0);
}

// Pre-activation outputs for every row of z, as a column vector.
Eigen::VectorXd logits_batch(const DiscriminatorNet& net,
                             const Eigen::Ref<const Eigen::MatrixXd>& z) {
    if (z.cols() != net.input_dim()) {
        throw DimensionMismatch("discriminator: input dimension mismatch");
    }
    Eigen::MatrixXd a = z.transpose();  // d x n
    const std::size_t depth = net.weights.size();
    for (std::size_t l = 0; l < depth; ++l) {
        Eigen::MatrixXd pre = (net.weights[l] * a).colwise() + net.biases[l];
        a = l + 1 < depth ? pre.cwiseMax(0.0) : pre;
    }
    return a.row(0).transpose();
}

}  // namespace

LatentDataset::LatentDataset(Eigen::MatrixXd pts) : points(std::move(pts)) {
    if (points.rows() < 1 || points.cols() < 1) {
        throw EmptyDataset("latent dataset must contain at least one point");
    }
    if (!points.allFinite()) {
        throw DataError("latent dataset contains non-finite coordinates");
    }
}

DiscriminatorNet::DiscriminatorNet(std::vector<Eigen::MatrixXd> w,
                                   std::vector<Eigen::VectorXd> b)
    : weights(std::move(w)), biases(std::move(b)) {
    if (weights.empty() || weights.size() != biases.size()) {
        throw DimensionMismatch("discriminator: need matching weight/bias layers");
    }
    for (std::size_t l = 0; l < weights.size(); ++l) {
        if (weights[l].rows() != biases[l].size()) {
            throw DimensionMismatch("discriminator: bias size does not match layer rows");
        }
        if (l > 0 && weights[l].cols() != weights[l - 1].rows()) {
            throw DimensionMismatch("discriminator: layer dimensions do not chain");
        }
    }
    if (weights.back().rows() != 1) {
        throw DimensionMismatch("discriminator: output layer must have a single unit");
    }
}

DiscriminatorNet DiscriminatorNet::zeros(const std::vector<int>& layer_sizes) {
    if (layer_sizes.size() < 2) {
        throw DimensionMismatch("discriminator: need input and output sizes");
    }
    std::vector<Eigen::MatrixXd> w;
    std::vector<Eigen::VectorXd> b;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        if (layer_sizes[l] < 1 || layer_sizes[l + 1] < 1) {
            throw DimensionMismatch("discriminator: layer sizes must be positive");
        }
        w.push_back(Eigen::MatrixXd::Zero(layer_sizes[l + 1], layer_sizes[l]));
        b.push_back(Eigen::VectorXd::Zero(layer_sizes[l + 1]));
    }
    return DiscriminatorNet(std::move(w), std::move(b));
}

std::vector<int> DiscriminatorNet::layer_sizes() const {
    std::vector<int> sizes{input_dim()};
    for (const auto& w : weights) {
        sizes.push_back(static_cast<int>(w.rows()));
    }
    return sizes;
}

double forward(const DiscriminatorNet& net, const Eigen::Ref<const Eigen::VectorXd>& z) {
    return forward_batch(net, z.transpose())(0);
}

Eigen::VectorXd forward_batch(const DiscriminatorNet& net,
                              const Eigen::Ref<const Eigen::MatrixXd>& z) {
    Eigen::VectorXd s = logits_batch(net, z);
    return s.array().min(kLogitClamp).max(-kLogitClamp).unaryExpr(
        [](double v) { return sigmoid(v); });
}

double bce_loss(const DiscriminatorNet& net,
                const Eigen::Ref<const Eigen::MatrixXd>& z,
                const Eigen::Ref<const Eigen::VectorXd>& labels) {
    if (labels.size() != z.rows()) {
        throw DimensionMismatch("bce_loss: one label per row required");
    }
    const Eigen::VectorXd s = logits_batch(net, z);
    double pos = 0.0, neg = 0.0;
    int n_pos = 0, n_neg = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (labels[i] > 0.5) {
            pos += softplus(-s[i]);
            ++n_pos;
        } else {
            neg += softplus(s[i]);
            ++n_neg;
        }
    }
    return (n_pos > 0 ? pos / n_pos : 0.0) + (n_neg > 0 ? neg / n_neg : 0.0);
}

DiscriminatorNet train(const LatentDataset& data,
                       const PriorSpec& prior,
                       const TrainConfig& cfg,
                       const std::vector<int>& hidden) {
    if (data.dim() != prior.dim) {
        throw DimensionMismatch("train: dataset and prior dimensions differ");
    }
    if (cfg.batch < 2 || cfg.steps < 0 || !(cfg.learning_rate > 0.0)) {
        throw std::invalid_argument("train: batch >= 2, steps >= 0, lr > 0 required");
    }

    std::vector<int> sizes{data.dim()};
    sizes.insert(sizes.end(), hidden.begin(), hidden.end());
    sizes.push_back(1);

    Rng rng(cfg.seed, 0x747261696eULL);  // dedicated training stream

    // Glorot-uniform initialization keeps early scores near 0.5.
    DiscriminatorNet net = DiscriminatorNet::zeros(sizes);
    for (auto& w : net.weights) {
        const double lim = std::sqrt(6.0 / static_cast<double>(w.rows() + w.cols()));
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            for (Eigen::Index j = 0; j < w.cols(); ++j) {
                w(i, j) = lim * (2.0 * rng.uniform() - 1.0);
            }
        }
    }

    const std::size_t depth = net.weights.size();
    std::vector<Eigen::MatrixXd> m_w(depth), v_w(depth);
    std::vector<Eigen::VectorXd> m_b(depth), v_b(depth);
    for (std::size_t l = 0; l < depth; ++l) {
        m_w[l] = Eigen::MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols());
        v_w[l] = m_w[l];
        m_b[l] = Eigen::VectorXd::Zero(net.biases[l].size());
        v_b[l] = m_b[l];
    }

    const int half = cfg.batch / 2;
    const int n = 2 * half;
    Eigen::MatrixXd batch(n, data.dim());

    std::vector<Eigen::MatrixXd> acts(depth + 1), pres(depth);
    for (int step = 1; step <= cfg.steps; ++step) {
        // Positives uniformly from the dataset, negatives fresh from the prior.
        for (int i = 0; i < half; ++i) {
            batch.row(i) = data.points.row(
                static_cast<Eigen::Index>(rng.next_index(data.size())));
        }
        for (int i = half; i < n; ++i) {
            for (int c = 0; c < data.dim(); ++c) {
                batch(i, c) = rng.normal();
            }
        }

        acts[0] = batch.transpose();
        for (std::size_t l = 0; l < depth; ++l) {
            pres[l] = (net.weights[l] * acts[l]).colwise() + net.biases[l];
            acts[l + 1] = l + 1 < depth ? pres[l].cwiseMax(0.0) : pres[l];
        }
        const Eigen::RowVectorXd s = acts[depth].row(0);

        double loss = 0.0;
        for (int i = 0; i < half; ++i) loss += softplus(-s[i]);
        for (int i = half; i < n; ++i) loss += softplus(s[i]);
        loss /= half;
        if (!std::isfinite(loss)) {
            throw NonFiniteLoss("train: loss became non-finite at step " +
                                std::to_string(step) + " (reduce the learning rate)");
        }

        // dLoss/dlogit = (sigmoid(s) - y) / class count, computed from the
        // unclamped logits.
        Eigen::MatrixXd grad_a(1, n);
        for (int i = 0; i < n; ++i) {
            const double y = i < half ? 1.0 : 0.0;
            grad_a(0, i) = (sigmoid(s[i]) - y) / half;
        }

        for (std::size_t li = depth; li-- > 0;) {
            const Eigen::MatrixXd grad_w = grad_a * acts[li].transpose();
            const Eigen::VectorXd grad_b = grad_a.rowwise().sum();
            if (li > 0) {
                grad_a = (net.weights[li].transpose() * grad_a)
                             .cwiseProduct((pres[li - 1].array() > 0.0).cast<double>().matrix());
            }
            const double c1 = 1.0 - std::pow(cfg.adam_beta1, step);
            const double c2 = 1.0 - std::pow(cfg.adam_beta2, step);
            m_w[li] = cfg.adam_beta1 * m_w[li] + (1.0 - cfg.adam_beta1) * grad_w;
            v_w[li] = cfg.adam_beta2 * v_w[li] + (1.0 - cfg.adam_beta2) * grad_w.cwiseAbs2();
            m_b[li] = cfg.adam_beta1 * m_b[li] + (1.0 - cfg.adam_beta1) * grad_b;
            v_b[li] = cfg.adam_beta2 * v_b[li] + (1.0 - cfg.adam_beta2) * grad_b.cwiseAbs2();
            net.weights[li] -= cfg.learning_rate *
                ((m_w[li] / c1).array() / ((v_w[li] / c2).array().sqrt() + cfg.adam_eps))
                    .matrix();
            net.biases[li] -= cfg.learning_rate *
                ((m_b[li] / c1).array() / ((v_b[li] / c2).array().sqrt() + cfg.adam_eps))
                    .matrix();
        }
    }
    return net;
}

double auc(const Eigen::VectorXd& pos_scores, const Eigen::VectorXd& neg_scores) {
    const Eigen::Index np = pos_scores.size(), nn = neg_scores.size();
    if (np == 0 || nn == 0) {
        throw InsufficientSamples("auc: need scores from both classes");
    }
    std::vector<double> all(np + nn);
    for (Eigen::Index i = 0; i < np; ++i) all[i] = pos_scores[i];
    for (Eigen::Index i = 0; i < nn; ++i) all[np + i] = neg_scores[i];
    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return all[a] < all[b]; });

    std::vector<double> rank(all.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && all[order[j + 1]] == all[order[i]]) ++j;
        const double mid = 0.5 * static_cast<double>(i + j) + 1.0;  // midrank, 1-based
        for (std::size_t t = i; t <= j; ++t) rank[order[t]] = mid;
        i = j + 1;
    }
    double rank_sum = 0.0;
    for (Eigen::Index i = 0; i < np; ++i) rank_sum += rank[i];
    const double u = rank_sum - 0.5 * static_cast<double>(np) * static_cast<double>(np + 1);
    return u / (static_cast<double>(np) * static_cast<double>(nn));
}

void save_net(const DiscriminatorNet& net, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("save_net: cannot open " + path.string());
    }
    out << "pfbi-discriminator v1\n";
    out << "dims:";
    for (const int s : net.layer_sizes()) {
        out << ' ' << s;
    }
    out << '\n';
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
        out << "W\n";
        const auto& w = net.weights[l];
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) {
                out << (c ? " " : "") << format_double(w(r, c));
            }
            out << '\n';
        }
        out << 'b';
        for (Eigen::Index r = 0; r < net.biases[l].size(); ++r) {
            out << ' ' << format_double(net.biases[l][r]);
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("save_net: write failed for " + path.string());
    }
}

DiscriminatorNet load_net(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("load_net: cannot open " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != "pfbi-discriminator v1") {
        throw ParseError("load_net: bad or missing header in " + path.string());
    }
    if (!std::getline(in, line) || line.rfind("dims:", 0) != 0) {
        throw ParseError("load_net: missing dims line");
    }
    std::istringstream dims_in(line.substr(5));
    std::vector<int> sizes;
    for (int v; dims_in >> v;) {
        sizes.push_back(v);
    }
    if (sizes.size() < 2) {
        throw ParseError("load_net: dims line needs at least input and output sizes");
    }

    auto parse_row = [&](const std::string& text, Eigen::Index expect) {
        std::istringstream row_in(text);
        Eigen::VectorXd row(expect);
        Eigen::Index got = 0;
        for (double v; row_in >> v;) {
            if (got == expect) {
                throw DimensionMismatch("load_net: row longer than declared dims");
            }
            row[got++] = v;
        }
        if (got != expect) {
            throw DimensionMismatch("load_net: row shorter than declared dims");
        }
        return row;
    };

    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        const Eigen::Index rows = sizes[l + 1], cols = sizes[l];
        if (!std::getline(in, line) || line != "W") {
            throw ParseError("load_net: expected a W block for layer " + std::to_string(l));
        }
        Eigen::MatrixXd w(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (!std::getline(in, line)) {
                throw ParseError("load_net: truncated W block in layer " + std::to_string(l));
            }
            w.row(r) = parse_row(line, cols).transpose();
        }
        if (!std::getline(in, line) || line.rfind("b", 0) != 0) {
            throw ParseError("load_net: expected a b line for layer " + std::to_string(l));
        }
        weights.push_back(std::move(w));
        biases.push_back(parse_row(line.substr(1), rows));
    }
    return DiscriminatorNet(std::move(weights), std::move(biases));
}

}  // namespace pfbi
