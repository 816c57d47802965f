#ifndef PFBI_SYNTHDATA_HPP
#define PFBI_SYNTHDATA_HPP

#include <cstdint>

#include "pfbi/discriminator.hpp"

namespace pfbi {

enum class SynthKind {
    kArc,           // circular arc with a gap, d = 2
    kEllipseCurve,  // arc of an axis-scaled ellipse, d = 2
    kGaussianShell, // radius sqrt(d) shell, any d
};

/// Synthetic latent geometries. The arc default leaves a 90 degree gap so a
/// straight line between the arc ends must cross the empty center.
struct SynthSpec {
    SynthKind kind = SynthKind::kArc;
    int dim = 2;
    int n_points = 1000;
    double noise_sigma = 0.05;
    std::uint64_t seed = 0;
    double radius = 1.0;
    double arc_span_deg = 270.0;  // arc/ellipse: sector [-span/2, span/2]
    double axis_ratio = 0.5;      // ellipse: minor/major axis
};

/// arc:            radius (cos th, sin th) + N(0, sigma^2 I), th uniform on the arc
/// ellipse-curve:  same with the y axis scaled by axis_ratio
/// gaussian-shell: z / |z| * (sqrt(d) + N(0, sigma^2)), z ~ N(0, I_d)
LatentDataset generate(const SynthSpec& spec);

}  // namespace pfbi

#endif  // PFBI_SYNTHDATA_HPP
