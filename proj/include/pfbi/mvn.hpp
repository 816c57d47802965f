#ifndef PFBI_MVN_HPP
#define PFBI_MVN_HPP

#include <Eigen/Dense>
#include <vector>

#include "pfbi/kernel.hpp"
#include "pfbi/rng.hpp"

namespace pfbi {

inline constexpr double kDefaultJitter = 1e-8;

/// Lower-triangular L with L L^T = M + j I, where j is the smallest value in
/// {0, jitter, 10 jitter, ..., 1e6 jitter} for which the factorization
/// succeeds. Throws FactorizationFailure if the whole schedule fails, which
/// typically signals a degenerate grid (duplicated times).
Eigen::MatrixXd cholesky_jitter(const Eigen::MatrixXd& m, double jitter = kDefaultJitter);

/// Conditional distribution of the `free` block of a zero-mean Gaussian
/// given the `given` block: mean = mean_map * observed, covariance cond_cov.
struct GaussianCond {
    Eigen::MatrixXd mean_map;  // |free| x |given|, Sigma_fg Sigma_gg^-1
    Eigen::MatrixXd cond_cov;  // |free| x |free|, Sigma_ff - Sigma_fg Sigma_gg^-1 Sigma_gf
    std::vector<int> free;
    std::vector<int> given;
};

/// Gaussian conditioning via a Cholesky solve of Sigma_gg (never an explicit
/// inverse). cond_cov is symmetrized after assembly.
GaussianCond condition(const Eigen::MatrixXd& joint_cov,
                       std::vector<int> free,
                       std::vector<int> given,
                       double jitter = kDefaultJitter);

/// mean + L eps with eps iid standard normal from rng (one per row of L).
Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean,
                           const Eigen::MatrixXd& chol_lower,
                           Rng& rng);

}  // namespace pfbi

#endif  // PFBI_MVN_HPP
