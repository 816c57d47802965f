#include "pfbi/synthdata.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pfbi/rng.hpp"

namespace pfbi {

LatentDataset generate(const SynthSpec& spec) {
    if (spec.n_points < 1) {
        throw std::invalid_argument("generate: n_points must be >= 1");
    }
    if (spec.noise_sigma < 0.0) {
        throw std::invalid_argument("generate: noise_sigma must be >= 0");
    }
    const bool planar = spec.kind == SynthKind::kArc || spec.kind == SynthKind::kEllipseCurve;
    if (planar && spec.dim != 2) {
        throw std::invalid_argument("generate: arc and ellipse-curve require dim = 2");
    }
    if (spec.dim < 1) {
        throw std::invalid_argument("generate: dim must be >= 1");
    }

    Rng rng(spec.seed);
    Eigen::MatrixXd pts(spec.n_points, spec.dim);

    if (planar) {
        const double span = spec.arc_span_deg * std::numbers::pi / 180.0;
        const double y_scale = spec.kind == SynthKind::kEllipseCurve ? spec.axis_ratio : 1.0;
        for (int i = 0; i < spec.n_points; ++i) {
            const double theta = -0.5 * span + span * rng.uniform();
            pts(i, 0) = spec.radius * std::cos(theta) + spec.noise_sigma * rng.normal();
            pts(i, 1) = spec.radius * y_scale * std::sin(theta) + spec.noise_sigma * rng.normal();
        }
    } else {
        const double shell_radius = std::sqrt(static_cast<double>(spec.dim));
        for (int i = 0; i < spec.n_points; ++i) {
            Eigen::VectorXd z(spec.dim);
            for (int c = 0; c < spec.dim; ++c) {
                z[c] = rng.normal();
            }
            const double r = shell_radius + spec.noise_sigma * rng.normal();
            pts.row(i) = (z / z.norm() * r).transpose();
        }
    }
    return LatentDataset(std::move(pts));
}

}  // namespace pfbi
