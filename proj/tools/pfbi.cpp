// pfbi: particle-filter bridge interpolation in latent spaces.
//
// Subcommands: gen (synthetic latent datasets), train (discriminator),
// interp (linear / gaussian / smc paths), eval (score reports),
// plotdata (plot-ready CSV bundles).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pfbi/bridge.hpp"
#include "pfbi/discriminator.hpp"
#include "pfbi/errors.hpp"
#include "pfbi/io.hpp"
#include "pfbi/kernel.hpp"
#include "pfbi/metrics.hpp"
#include "pfbi/smc.hpp"
#include "pfbi/synthdata.hpp"

namespace {

using namespace pfbi;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

struct KernelFlags {
    double alpha = 2.0;
    double beta = 5.0;
    double horizon = 1.0;
    int steps = 16;

    void attach(CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "kernel smoothness exponent, in (0,2]");
        cmd->add_option("--beta", beta, "kernel inverse time-scale, > 0");
        cmd->add_option("--T", horizon, "bridge horizon");
        cmd->add_option("--steps", steps, "number of grid steps m (path has m+1 points)");
    }

    KernelParams params() const { return KernelParams(alpha, beta); }
    TimeGrid grid() const { return TimeGrid::equidistant(horizon, steps); }
};

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out;
}

LatentPoint to_point(const std::vector<double>& v) {
    LatentPoint p(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        p[static_cast<Eigen::Index>(i)] = v[i];
    }
    return p;
}

// ---------------------------------------------------------------- gen ----

struct GenArgs {
    std::string kind = "arc";
    int n = 1000;
    int dim = 2;
    double sigma = 0.05;
    std::uint64_t seed = 0;
    double radius = 1.0;
    double span = 270.0;
    double axis_ratio = 0.5;
    std::string out;
};

int run_gen(const GenArgs& a) {
    SynthSpec spec;
    spec.kind = a.kind == "arc"             ? SynthKind::kArc
                : a.kind == "ellipse-curve" ? SynthKind::kEllipseCurve
                                            : SynthKind::kGaussianShell;
    spec.dim = a.dim;
    spec.n_points = a.n;
    spec.noise_sigma = a.sigma;
    spec.seed = a.seed;
    spec.radius = a.radius;
    spec.arc_span_deg = a.span;
    spec.axis_ratio = a.axis_ratio;

    std::cout << "config: gen kind=" << a.kind << " n=" << a.n << " dim=" << spec.dim
              << " sigma=" << a.sigma << " seed=" << a.seed << " radius=" << a.radius
              << " span=" << a.span << " axis-ratio=" << a.axis_ratio << " out=" << a.out
              << "\n";

    const LatentDataset data = generate(spec);
    write_latents_csv(a.out, data);

    const Eigen::VectorXd norms = data.points.rowwise().norm();
    std::cout << "wrote " << data.size() << " points (dim " << data.dim() << ") to " << a.out
              << "\n"
              << "radius: mean=" << norms.mean()
              << " min=" << norms.minCoeff() << " max=" << norms.maxCoeff() << "\n";
    return 0;
}

// -------------------------------------------------------------- train ----

struct TrainArgs {
    std::string data;
    std::vector<int> hidden = kDefaultHidden;
    double lr = 1e-3;
    int batch = 256;
    int steps = 2000;
    double holdout = 0.1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_train(const TrainArgs& a) {
    std::cout << "config: train data=" << a.data << " hidden=" << join_ints(a.hidden)
              << " lr=" << a.lr << " batch=" << a.batch << " train-steps=" << a.steps
              << " holdout=" << a.holdout << " seed=" << a.seed << " out=" << a.out << "\n";

    const LatentDataset all = read_latents_csv(a.data);
    const int n_hold = std::clamp(static_cast<int>(a.holdout * all.size()), 0, all.size() - 1);
    const int n_train = all.size() - n_hold;
    const LatentDataset train_set(all.points.topRows(n_train));

    TrainConfig cfg;
    cfg.batch = a.batch;
    cfg.steps = a.steps;
    cfg.learning_rate = a.lr;
    cfg.seed = a.seed;
    const DiscriminatorNet net = train(train_set, PriorSpec{all.dim()}, cfg, a.hidden);
    save_net(net, a.out);

    Rng eval_rng(a.seed, 0x6576616cULL);
    auto prior_batch = [&](int n) {
        Eigen::MatrixXd z(n, all.dim());
        for (int i = 0; i < n; ++i) {
            for (int c = 0; c < all.dim(); ++c) {
                z(i, c) = eval_rng.normal();
            }
        }
        return z;
    };

    auto report = [&](const char* tag, const Eigen::MatrixXd& pos) {
        const Eigen::MatrixXd neg = prior_batch(static_cast<int>(pos.rows()));
        Eigen::MatrixXd z(pos.rows() + neg.rows(), all.dim());
        z << pos, neg;
        Eigen::VectorXd labels(z.rows());
        labels.head(pos.rows()).setOnes();
        labels.tail(neg.rows()).setZero();
        std::cout << tag << " loss=" << bce_loss(net, z, labels)
                  << " auc=" << auc(forward_batch(net, pos), forward_batch(net, neg)) << "\n";
    };
    report("train:", train_set.points);
    if (n_hold > 0) {
        report("held-out:", all.points.bottomRows(n_hold));
    }
    std::cout << "wrote weights to " << a.out << "\n";
    return 0;
}

// ------------------------------------------------------------- interp ----

struct InterpArgs {
    std::string method = "linear";
    std::string data;
    int from = 0;
    int to = 1;
    std::vector<double> z0, zT;
    KernelFlags kernel;
    int particles = 1000;
    int samples = 1;
    int mean_of = 1;
    std::string net_file;
    std::optional<double> gamma;
    double xi = 0.0;
    std::optional<double> ess_threshold;
    std::uint64_t seed = 0;
    std::string out;
};

std::filesystem::path numbered(const std::filesystem::path& base, int index) {
    std::filesystem::path p = base;
    p.replace_extension();
    p += "." + std::to_string(index);
    p += base.extension();
    return p;
}

int run_interp(const InterpArgs& a) {
    std::cout << "config: interp method=" << a.method << " data=" << a.data
              << " from=" << a.from << " to=" << a.to << " alpha=" << a.kernel.alpha
              << " beta=" << a.kernel.beta << " T=" << a.kernel.horizon
              << " steps=" << a.kernel.steps << " particles=" << a.particles
              << " samples=" << a.samples << " mean-of=" << a.mean_of
              << " net=" << a.net_file << " xi=" << a.xi
              << " gamma=" << (a.gamma ? std::to_string(*a.gamma) : std::string("1/delta"))
              << " ess-threshold="
              << (a.ess_threshold ? std::to_string(*a.ess_threshold) : std::string("off"))
              << " seed=" << a.seed << " out=" << a.out << "\n";

    std::optional<LatentDataset> data;
    if (!a.data.empty()) {
        data.emplace(read_latents_csv(a.data));
    }

    LatentPoint z0, zT;
    if (!a.z0.empty() || !a.zT.empty()) {
        if (a.z0.empty() || a.zT.empty()) {
            throw std::invalid_argument("give both --z0 and --zT, or neither");
        }
        z0 = to_point(a.z0);
        zT = to_point(a.zT);
    } else {
        if (!data) {
            throw std::invalid_argument("endpoints need --z0/--zT or --data with --from/--to");
        }
        if (a.from < 0 || a.from >= data->size() || a.to < 0 || a.to >= data->size()) {
            throw DataError("--from/--to row index out of range");
        }
        z0 = data->points.row(a.from).transpose();
        zT = data->points.row(a.to).transpose();
    }

    const TimeGrid grid = a.kernel.grid();
    const KernelParams params = a.kernel.params();
    Rng rng(a.seed);

    std::optional<DiscriminatorNet> net;
    std::optional<WeightSchedule> sched;
    if (a.method == "smc") {
        if (a.net_file.empty()) {
            throw std::invalid_argument("--method smc needs --net");
        }
        net.emplace(load_net(a.net_file));
        sched.emplace(a.gamma ? WeightSchedule::constant(grid, *a.gamma, a.xi)
                              : WeightSchedule::algorithm1(grid));
        if (a.xi != 0.0 && !a.gamma) {
            sched->xi = a.xi;
        }
    }

    SmcOptions smc_opts;
    smc_opts.ess_threshold = a.ess_threshold;

    auto draw_one = [&](Rng& r) -> Path {
        if (a.method == "linear") {
            return linear_path(z0, zT, grid);
        }
        if (a.method == "gaussian") {
            return a.mean_of > 1 ? mean_bridge_path(z0, zT, params, grid, a.mean_of, r)
                                 : sample_bridge(z0, zT, params, grid, r);
        }
        Path p = smc_interpolate(z0, zT, params, grid, *net, *sched, a.particles,
                                 r, smc_opts).path;
        for (int extra = 1; extra < a.mean_of; ++extra) {
            Rng rr = r.child(0x6d65616eULL, static_cast<std::uint64_t>(extra));
            p.points += smc_interpolate(z0, zT, params, grid, *net, *sched, a.particles,
                                        rr, smc_opts).path.points;
        }
        if (a.mean_of > 1) {
            p.points /= static_cast<double>(a.mean_of);
            p.points.row(0) = z0.transpose();
            p.points.row(grid.steps()) = zT.transpose();
        }
        return p;
    };

    for (int s = 0; s < a.samples; ++s) {
        Rng sample_rng = rng.child(0x73616d70ULL, static_cast<std::uint64_t>(s));
        const Path path = draw_one(sample_rng);
        const auto file = a.samples == 1 ? std::filesystem::path(a.out) : numbered(a.out, s);
        write_path_csv(file, path);
        std::cout << "wrote " << path.grid.size() << "-point path to " << file.string() << "\n";
        if (data && s == 0) {
            std::cout << "mean score (midpoint) vs dataset: " << a.method << "="
                      << mean_score(path, *data, MeanScoreMode::kMidpoint);
            if (a.method == "smc") {
                Rng ref_rng = rng.child(0x72656665ULL, 0);
                const Path gauss = sample_bridge(z0, zT, params, grid, ref_rng);
                std::cout << " gaussian=" << mean_score(gauss, *data, MeanScoreMode::kMidpoint);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- eval ----

struct EvalArgs {
    std::vector<std::string> methods = {"linear", "gaussian"};
    std::string data;
    std::string net_file;
    int pairs = 50;
    int repeats = 1;
    std::string pair_mode = "random";
    double end_frac = 0.1;
    std::string score_mode = "midpoint";
    KernelFlags kernel;
    int particles = 1000;
    std::uint64_t seed = 0;
    std::string out;
};

std::vector<EndpointPair> make_pairs(const LatentDataset& data,
                                     const EvalArgs& a,
                                     Rng& rng) {
    std::vector<EndpointPair> pairs;
    pairs.reserve(a.pairs);
    if (a.pair_mode == "random") {
        for (int i = 0; i < a.pairs; ++i) {
            const auto r0 = static_cast<Eigen::Index>(rng.next_index(data.size()));
            const auto r1 = static_cast<Eigen::Index>(rng.next_index(data.size()));
            pairs.emplace_back(data.points.row(r0).transpose(),
                               data.points.row(r1).transpose());
        }
        return pairs;
    }
    // "ends": order 2-d points by polar angle and pair one endpoint from each
    // angular extreme (the two ends of an arc-shaped dataset).
    if (data.dim() != 2) {
        throw DataError("--pair-mode ends requires a 2-d dataset");
    }
    std::vector<int> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::atan2(data.points(i, 1), data.points(i, 0)) <
               std::atan2(data.points(j, 1), data.points(j, 0));
    });
    const int n_end = std::max(1, static_cast<int>(a.end_frac * data.size()));
    for (int i = 0; i < a.pairs; ++i) {
        const int lo = order[rng.next_index(n_end)];
        const int hi = order[data.size() - 1 - rng.next_index(n_end)];
        pairs.emplace_back(data.points.row(lo).transpose(), data.points.row(hi).transpose());
    }
    return pairs;
}

int run_eval(const EvalArgs& a) {
    std::string methods_str;
    for (std::size_t i = 0; i < a.methods.size(); ++i) {
        methods_str += (i ? "," : "") + a.methods[i];
    }
    std::cout << "config: eval methods=" << methods_str << " data=" << a.data
              << " net=" << a.net_file << " pairs=" << a.pairs << " repeats=" << a.repeats
              << " pair-mode=" << a.pair_mode << " end-frac=" << a.end_frac
              << " mode=" << a.score_mode << " alpha=" << a.kernel.alpha
              << " beta=" << a.kernel.beta << " T=" << a.kernel.horizon
              << " steps=" << a.kernel.steps << " particles=" << a.particles
              << " seed=" << a.seed << " out=" << a.out << "\n";

    const LatentDataset data = read_latents_csv(a.data);
    const TimeGrid grid = a.kernel.grid();
    const KernelParams params = a.kernel.params();
    const MeanScoreMode mode = a.score_mode == "midpoint" ? MeanScoreMode::kMidpoint
                                                          : MeanScoreMode::kInteriorAverage;

    std::optional<DiscriminatorNet> net;
    std::optional<WeightSchedule> sched;
    const bool wants_smc =
        std::find(a.methods.begin(), a.methods.end(), "smc") != a.methods.end();
    if (wants_smc) {
        if (a.net_file.empty()) {
            throw std::invalid_argument("eval with the smc method needs --net");
        }
        net.emplace(load_net(a.net_file));
        sched.emplace(WeightSchedule::algorithm1(grid));
    }

    Rng rng(a.seed);
    Rng pair_rng = rng.child(0x7061697273ULL);
    const auto pairs = make_pairs(data, a, pair_rng);

    std::ofstream out(a.out);
    if (!out) {
        throw IoError("cannot open " + a.out + " for writing");
    }
    out << "method,T,alpha,beta,N,mean_score,mean_std,smoothness,smoothness_std,variability\n";

    std::map<std::string, double> by_mean;
    for (const auto& method : a.methods) {
        PathSampler sampler;
        int n_particles = 0;
        if (method == "linear") {
            sampler = [&](const LatentPoint& p0, const LatentPoint& p1, Rng&) {
                return linear_path(p0, p1, grid);
            };
        } else if (method == "gaussian") {
            sampler = [&](const LatentPoint& p0, const LatentPoint& p1, Rng& r) {
                return sample_bridge(p0, p1, params, grid, r);
            };
        } else {
            n_particles = a.particles;
            sampler = [&](const LatentPoint& p0, const LatentPoint& p1, Rng& r) {
                return smc_interpolate(p0, p1, params, grid, *net, *sched, a.particles, r)
                    .path;
            };
        }
        const ScoreReport rep = evaluate_method(sampler, pairs, data, a.repeats, mode,
                                                rng.child(std::hash<std::string>{}(method)));
        by_mean[method] = rep.mean_score;
        out << method << ',' << format_double(a.kernel.horizon) << ','
            << format_double(a.kernel.alpha) << ',' << format_double(a.kernel.beta) << ','
            << n_particles << ',' << format_double(rep.mean_score) << ','
            << format_double(rep.mean_std) << ',' << format_double(rep.smoothness) << ','
            << format_double(rep.smoothness_std) << ',' << format_double(rep.variability)
            << '\n';
        std::cout << method << ": mean=" << rep.mean_score << " (" << rep.mean_std << ")"
                  << " smoothness=" << rep.smoothness << " (" << rep.smoothness_std << ")"
                  << " variability=" << rep.variability << "\n";
    }
    if (!out) {
        throw IoError("write failed for " + a.out);
    }

    std::vector<std::string> ranked(a.methods.begin(), a.methods.end());
    std::sort(ranked.begin(), ranked.end(),
              [&](const std::string& x, const std::string& y) { return by_mean[x] < by_mean[y]; });
    std::cout << "ordering by mean score:";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        std::cout << (i ? " < " : " ") << ranked[i];
    }
    std::cout << "\n";
    return 0;
}

// ----------------------------------------------------------- plotdata ----

struct PlotArgs {
    std::string data;
    std::vector<std::string> paths;
    std::string net_file;
    int grid_res = 0;
    double margin = 0.5;
    std::string out;
};

int run_plotdata(const PlotArgs& a) {
    std::cout << "config: plotdata data=" << a.data << " paths=" << a.paths.size()
              << " net=" << a.net_file << " grid-res=" << a.grid_res
              << " margin=" << a.margin << " out=" << a.out << "\n";

    const LatentDataset data = read_latents_csv(a.data);
    write_latents_csv(a.out + "_scatter.csv", data);
    std::cout << "wrote " << a.out << "_scatter.csv (" << data.size() << " rows)\n";

    for (std::size_t i = 0; i < a.paths.size(); ++i) {
        const Path p = read_path_csv(a.paths[i]);
        const std::string file = a.out + "_path_" + std::to_string(i) + ".csv";
        write_path_csv(file, p);
        std::cout << "wrote " << file << " (" << p.grid.size() << " rows)\n";
    }

    if (a.grid_res > 0) {
        if (a.net_file.empty()) {
            throw std::invalid_argument("heat grid needs --net");
        }
        if (data.dim() != 2) {
            throw DimensionMismatch("heat grid requires a 2-d latent space");
        }
        const DiscriminatorNet net = load_net(a.net_file);
        const double x0 = data.points.col(0).minCoeff() - a.margin;
        const double x1 = data.points.col(0).maxCoeff() + a.margin;
        const double y0 = data.points.col(1).minCoeff() - a.margin;
        const double y1 = data.points.col(1).maxCoeff() + a.margin;
        const int r = a.grid_res;
        Eigen::MatrixXd cells(r * r, 3);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                const double x = x0 + (x1 - x0) * (i + 0.5) / r;
                const double y = y0 + (y1 - y0) * (j + 0.5) / r;
                cells(i * r + j, 0) = x;
                cells(i * r + j, 1) = y;
            }
        }
        cells.col(2) = forward_batch(net, cells.leftCols(2));
        write_latents_csv(a.out + "_heatgrid.csv", LatentDataset(cells));
        std::cout << "wrote " << a.out << "_heatgrid.csv (" << r * r << " cells, x y score)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"particle-filter bridge interpolation toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic latent dataset");
    gen_cmd->add_option("--kind", gen_args.kind, "arc | ellipse-curve | gaussian-shell")
        ->check(CLI::IsMember({"arc", "ellipse-curve", "gaussian-shell"}));
    gen_cmd->add_option("--n", gen_args.n, "number of points");
    gen_cmd->add_option("--dim", gen_args.dim, "latent dimension (shell only; curves are 2-d)");
    gen_cmd->add_option("--sigma", gen_args.sigma, "noise standard deviation");
    gen_cmd->add_option("--seed", gen_args.seed, "rng seed");
    gen_cmd->add_option("--radius", gen_args.radius, "curve radius");
    gen_cmd->add_option("--span", gen_args.span, "arc span in degrees");
    gen_cmd->add_option("--axis-ratio", gen_args.axis_ratio, "ellipse minor/major ratio");
    gen_cmd->add_option("--out", gen_args.out, "output latent CSV")->required();

    TrainArgs train_args;
    auto* train_cmd = app.add_subcommand("train", "train the discriminator on a dataset");
    train_cmd->add_option("--data", train_args.data, "latent CSV")->required();
    train_cmd->add_option("--hidden", train_args.hidden, "hidden layer sizes")
        ->delimiter(',');
    train_cmd->add_option("--lr", train_args.lr, "Adam learning rate");
    train_cmd->add_option("--batch", train_args.batch, "batch size (half data, half prior)");
    train_cmd->add_option("--train-steps", train_args.steps, "number of Adam steps");
    train_cmd->add_option("--holdout", train_args.holdout, "held-out fraction for reporting");
    train_cmd->add_option("--seed", train_args.seed, "rng seed");
    train_cmd->add_option("--out", train_args.out, "output weight file")->required();

    InterpArgs interp_args;
    auto* interp_cmd = app.add_subcommand("interp", "sample one interpolation path");
    interp_cmd->add_option("--method", interp_args.method, "linear | gaussian | smc")
        ->check(CLI::IsMember({"linear", "gaussian", "smc"}));
    interp_cmd->add_option("--data", interp_args.data, "latent CSV for endpoints/scores");
    interp_cmd->add_option("--from", interp_args.from, "start row in --data");
    interp_cmd->add_option("--to", interp_args.to, "end row in --data");
    interp_cmd->add_option("--z0", interp_args.z0, "explicit start point")->delimiter(',');
    interp_cmd->add_option("--zT", interp_args.zT, "explicit end point")->delimiter(',');
    interp_args.kernel.attach(interp_cmd);
    interp_cmd->add_option("--particles", interp_args.particles, "smc particle count");
    interp_cmd->add_option("--samples", interp_args.samples, "number of paths to write");
    interp_cmd->add_option("--mean-of", interp_args.mean_of,
                           "average this many stochastic paths per sample");
    interp_cmd->add_option("--net", interp_args.net_file, "discriminator weight file");
    interp_cmd->add_option("--xi", interp_args.xi, "weight endpoint mixing, in [0,1]");
    interp_cmd->add_option("--gamma", interp_args.gamma,
                           "constant tilt strength (default 1/delta)");
    interp_cmd->add_option("--ess-threshold", interp_args.ess_threshold,
                           "resample only when ESS < threshold * N");
    interp_cmd->add_option("--seed", interp_args.seed, "rng seed");
    interp_cmd->add_option("--out", interp_args.out, "output path CSV")->required();

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "score interpolation methods on a dataset");
    eval_cmd->add_option("--methods", eval_args.methods, "subset of linear,gaussian,smc")
        ->delimiter(',')
        ->check(CLI::IsMember({"linear", "gaussian", "smc"}));
    eval_cmd->add_option("--data", eval_args.data, "latent CSV")->required();
    eval_cmd->add_option("--net", eval_args.net_file, "discriminator weight file");
    eval_cmd->add_option("--pairs", eval_args.pairs, "number of endpoint pairs");
    eval_cmd->add_option("--repeats", eval_args.repeats,
                         "re-samplings per pair (>= 2 enables variability)");
    eval_cmd->add_option("--pair-mode", eval_args.pair_mode, "random | ends")
        ->check(CLI::IsMember({"random", "ends"}));
    eval_cmd->add_option("--end-frac", eval_args.end_frac,
                         "fraction of points counted as an arc end");
    eval_cmd->add_option("--mode", eval_args.score_mode, "midpoint | interior")
        ->check(CLI::IsMember({"midpoint", "interior"}));
    eval_args.kernel.attach(eval_cmd);
    eval_cmd->add_option("--particles", eval_args.particles, "smc particle count");
    eval_cmd->add_option("--seed", eval_args.seed, "rng seed");
    eval_cmd->add_option("--out", eval_args.out, "output report CSV")->required();

    PlotArgs plot_args;
    auto* plot_cmd = app.add_subcommand("plotdata", "export plot-ready CSV bundles");
    plot_cmd->add_option("--data", plot_args.data, "latent CSV")->required();
    plot_cmd->add_option("--path", plot_args.paths, "path CSV (repeatable)");
    plot_cmd->add_option("--net", plot_args.net_file, "discriminator weight file");
    plot_cmd->add_option("--grid-res", plot_args.grid_res,
                         "heat-grid resolution per axis (0 = off)");
    plot_cmd->add_option("--margin", plot_args.margin, "heat-grid margin around the data");
    plot_cmd->add_option("--out", plot_args.out, "output file prefix")->required();

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return run_gen(gen_args);
        if (train_cmd->parsed()) return run_train(train_args);
        if (interp_cmd->parsed()) return run_interp(interp_args);
        if (eval_cmd->parsed()) return run_eval(eval_args);
        if (plot_cmd->parsed()) return run_plotdata(plot_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
