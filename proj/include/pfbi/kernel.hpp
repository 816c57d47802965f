#ifndef PFBI_KERNEL_HPP
#define PFBI_KERNEL_HPP

#include <Eigen/Dense>
#include <cmath>

namespace pfbi {

using CovMatrix = Eigen::MatrixXd;

/// Exponential-power kernel k(h) = exp(-beta |h|^alpha).
/// alpha must lie in (0, 2]; above 2 the kernel is not positive
/// semi-definite. beta > 0 is an inverse time scale.
struct KernelParams {
    KernelParams(double alpha, double beta);

    double alpha;
    double beta;
};

/// Scalar-generic kernel evaluation, k(h) = exp(-beta |h|^alpha).
template <class Scalar>
Scalar kernel_eval(Scalar alpha, Scalar beta, Scalar h) {
    using std::abs;
    using std::exp;
    using std::pow;
    return exp(-beta * pow(abs(h), alpha));
}

double kernel_eval(const KernelParams& params, double h);

/// Sampling times 0 = t_0 < t_1 < ... < t_m = T, m >= 2.
class TimeGrid {
  public:
    /// Explicit grid; validates ordering and endpoints.
    explicit TimeGrid(Eigen::VectorXd times);

    /// Equidistant grid with spacing T/m. The final time is exactly T.
    static TimeGrid equidistant(double horizon, int steps);

    int steps() const { return static_cast<int>(times_.size()) - 1; }
    int size() const { return static_cast<int>(times_.size()); }
    double horizon() const { return times_[times_.size() - 1]; }
    double time(int k) const { return times_[k]; }
    double delta(int k) const { return times_[k] - times_[k - 1]; }
    const Eigen::VectorXd& times() const { return times_; }

  private:
    Eigen::VectorXd times_;
};

/// Time covariance Sigma_ij = k(t_i - t_j). Exactly symmetric by
/// construction (upper triangle mirrored from the lower), unit diagonal.
CovMatrix build_covariance(const KernelParams& params, const TimeGrid& grid);

}  // namespace pfbi

#endif  // PFBI_KERNEL_HPP
