#include "pfbi/kernel.hpp"

#include <stdexcept>
#include <string>

namespace pfbi {

KernelParams::KernelParams(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
        throw std::invalid_argument("kernel alpha must lie in (0, 2], got " +
                                    std::to_string(alpha_in));
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("kernel beta must be positive, got " +
                                    std::to_string(beta_in));
    }
}

double kernel_eval(const KernelParams& params, double h) {
    return kernel_eval(params.alpha, params.beta, h);
}

TimeGrid::TimeGrid(Eigen::VectorXd times) : times_(std::move(times)) {
    if (times_.size() < 3) {
        throw std::invalid_argument("time grid needs at least 2 steps (3 times)");
    }
    if (times_[0] != 0.0) {
        throw std::invalid_argument("time grid must start at t_0 = 0");
    }
    for (Eigen::Index k = 1; k < times_.size(); ++k) {
        if (!(times_[k] > times_[k - 1])) {
            throw std::invalid_argument("time grid must be strictly increasing");
        }
    }
}

TimeGrid TimeGrid::equidistant(double horizon, int steps) {
    if (!(horizon > 0.0)) {
        throw std::invalid_argument("horizon must be positive");
    }
    if (steps < 2) {
        throw std::invalid_argument("need at least 2 steps");
    }
    const double delta = horizon / steps;
    Eigen::VectorXd times(steps + 1);
    for (int k = 0; k < steps; ++k) {
        times[k] = static_cast<double>(k) * delta;
    }
    times[steps] = horizon;  // exact endpoint
    return TimeGrid(std::move(times));
}

CovMatrix build_covariance(const KernelParams& params, const TimeGrid& grid) {
    const int n = grid.size();
    CovMatrix sigma(n, n);
    for (int i = 0; i < n; ++i) {
        sigma(i, i) = kernel_eval(params, 0.0);
        for (int j = 0; j < i; ++j) {
            const double v = kernel_eval(params, grid.time(i) - grid.time(j));
            sigma(i, j) = v;
            sigma(j, i) = v;
        }
    }
    return sigma;
}

}  // namespace pfbi
