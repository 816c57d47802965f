#ifndef PFBI_RNG_HPP
#define PFBI_RNG_HPP

#include <cstdint>
#include <random>

namespace pfbi {

/// Seeded random number generator with value semantics.
///
/// The draw sequence is a pure function of (seed, stream): mt19937_64
/// underneath, uniforms taken as the top 53 bits, normals via the classic
/// Box-Muller transform (cosine branch, the sine variate is discarded).
/// Copying an Rng copies its position in the stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform draw in [0, 1).
    double uniform();

    /// Standard normal draw. Box-Muller: sqrt(-2 ln u1) * cos(2 pi u2)
    /// with u1 in (0, 1], u2 in [0, 1). Consumes exactly two uniforms.
    double normal();

    /// Uniform integer in [0, n), n >= 1.
    std::uint64_t next_index(std::uint64_t n);

    /// Derived generator with an independent stream keyed by (a, b).
    /// Deterministic: the same (seed, stream, a, b) always yields the same
    /// child, independent of this generator's position.
    Rng child(std::uint64_t a, std::uint64_t b = 0) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

}  // namespace pfbi

#endif  // PFBI_RNG_HPP
