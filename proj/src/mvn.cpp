#include "pfbi/mvn.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "pfbi/errors.hpp"

namespace pfbi {
namespace {

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m,
                          const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    Eigen::MatrixXd out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(i, j) = m(rows[i], cols[j]);
        }
    }
    return out;
}

}  // namespace

Eigen::MatrixXd cholesky_jitter(const Eigen::MatrixXd& m, double jitter) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("cholesky_jitter: matrix must be square");
    }
    const int n = static_cast<int>(m.rows());
    // Schedule {0, jitter, 10 jitter, ..., 1e6 jitter}; with the default
    // jitter the escalation is capped at 1e-2, past which we fail loudly
    // rather than distort the conditional variances.
    std::vector<double> schedule{0.0};
    for (int e = 0; jitter > 0.0 && e <= 6; ++e) {
        schedule.push_back(jitter * std::pow(10.0, e));
    }
    for (const double j : schedule) {
        Eigen::MatrixXd shifted = m;
        if (j > 0.0) {
            shifted.diagonal().array() += j;
        }
        Eigen::LLT<Eigen::MatrixXd> llt(shifted);
        if (llt.info() == Eigen::Success) {
            return llt.matrixL();
        }
    }
    std::ostringstream msg;
    msg << "cholesky_jitter: factorization failed for a " << n << "x" << n
        << " matrix up to jitter " << schedule.back() << " (degenerate or duplicated times?)";
    throw FactorizationFailure(msg.str());
}

GaussianCond condition(const Eigen::MatrixXd& joint_cov,
                       std::vector<int> free,
                       std::vector<int> given,
                       double jitter) {
    const int n = static_cast<int>(joint_cov.rows());
    for (const int i : free) {
        if (i < 0 || i >= n) throw DimensionMismatch("condition: free index out of range");
    }
    for (const int i : given) {
        if (i < 0 || i >= n) throw DimensionMismatch("condition: given index out of range");
        if (std::find(free.begin(), free.end(), i) != free.end()) {
            throw DimensionMismatch("condition: free and given must be disjoint");
        }
    }

    const Eigen::MatrixXd sigma_ff = submatrix(joint_cov, free, free);
    GaussianCond cond;
    if (given.empty()) {
        cond.mean_map = Eigen::MatrixXd(free.size(), 0);
        cond.cond_cov = sigma_ff;
        cond.free = std::move(free);
        cond.given = std::move(given);
        return cond;
    }

    const Eigen::MatrixXd sigma_fg = submatrix(joint_cov, free, given);
    const Eigen::MatrixXd sigma_gg = submatrix(joint_cov, given, given);

    // Sigma_gg^-1 Sigma_gf via two triangular solves against the Cholesky
    // factor; explicit inversion is less stable on tight grids.
    const Eigen::MatrixXd chol = cholesky_jitter(sigma_gg, jitter);
    const Eigen::MatrixXd solved = chol.transpose().triangularView<Eigen::Upper>().solve(
        Eigen::MatrixXd(chol.triangularView<Eigen::Lower>().solve(sigma_fg.transpose())));

    cond.mean_map = solved.transpose();
    Eigen::MatrixXd cc = sigma_ff - sigma_fg * solved;
    cond.cond_cov = 0.5 * (cc + cc.transpose());
    cond.free = std::move(free);
    cond.given = std::move(given);
    return cond;
}

Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean,
                           const Eigen::MatrixXd& chol_lower,
                           Rng& rng) {
    if (chol_lower.rows() != chol_lower.cols() || chol_lower.rows() != mean.size()) {
        throw DimensionMismatch("sample_mvn: mean/cholesky dimensions disagree");
    }
    Eigen::VectorXd eps(mean.size());
    for (Eigen::Index i = 0; i < eps.size(); ++i) {
        eps[i] = rng.normal();
    }
    return mean + chol_lower.triangularView<Eigen::Lower>() * eps;
}

}  // namespace pfbi
