#pragma once

#include "msim/random.hpp"
#include "msim/raster.hpp"

#include <cstddef>
#include <optional>

namespace msim {

struct GridSize {
    std::size_t width = 200;
    std::size_t height = 200;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Circularly symmetric Gaussian, amplitude * exp(-0.5 (d / sigma)^2).
struct GaussianSpec {
    double sigma = 100.0;
    /// Defaults to the grid center ((w-1)/2, (h-1)/2).
    std::optional<Point2> center;
    double amplitude = 1.0;
};

/// Stand-in for a zero-width pattern in width sweeps.
inline constexpr double kZeroWidthSigma = 1e-6;

Point2 grid_center(GridSize size) noexcept;

Raster gaussian_pattern(GridSize size, const GaussianSpec& spec);

/// Adds (level / n_levels) * (u - 0.5) to every pixel, u ~ U[0,1) drawn from
/// rng at counter = pixel index.
Raster add_uniform_noise(const Raster& r, int level, int n_levels, const RandomSource& rng);

/// Adds `count` Gaussians (spec.sigma, spec.amplitude) at uniformly random pixel
/// centers, each with a random sign. Draw k uses counters 3k, 3k+1, 3k+2 for
/// (x, y, sign). spec.center is ignored.
Raster add_interference(const Raster& r, int count, const GaussianSpec& spec,
                        const RandomSource& rng);

Raster scale_intensity(const Raster& r, double k);

}  // namespace msim
