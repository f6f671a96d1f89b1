#include "msim/stimuli.hpp"

#include "msim/error.hpp"

#include <cmath>
#include <string>

namespace msim {

Raster::Raster(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), data_(width * height, fill) {
    if (width == 0 || height == 0) {
        throw Error(ErrorKind::InvalidArgument, "raster dimensions must be positive");
    }
}

Raster::Raster(std::size_t width, std::size_t height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
    if (width == 0 || height == 0) {
        throw Error(ErrorKind::InvalidArgument, "raster dimensions must be positive");
    }
    if (data_.size() != width * height) {
        throw Error(ErrorKind::DimensionError,
                    "raster data has " + std::to_string(data_.size()) + " values, expected " +
                        std::to_string(width * height));
    }
    for (double v : data_) {
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "raster value not finite");
    }
}

Point2 grid_center(GridSize size) noexcept {
    return {(static_cast<double>(size.width) - 1.0) / 2.0,
            (static_cast<double>(size.height) - 1.0) / 2.0};
}

namespace {

void add_gaussian(Raster& r, double sigma, Point2 c, double amplitude) {
    const double inv = -0.5 / (sigma * sigma);
    for (std::size_t j = 0; j < r.height(); ++j) {
        const double dy = static_cast<double>(j) - c.y;
        for (std::size_t i = 0; i < r.width(); ++i) {
            const double dx = static_cast<double>(i) - c.x;
            r.at(i, j) += amplitude * std::exp(inv * (dx * dx + dy * dy));
        }
    }
}

}  // namespace

Raster gaussian_pattern(GridSize size, const GaussianSpec& spec) {
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
        throw Error(ErrorKind::DomainError, "Gaussian sigma must be positive");
    }
    Raster r(size.width, size.height);
    add_gaussian(r, spec.sigma, spec.center.value_or(grid_center(size)), spec.amplitude);
    return r;
}

Raster add_uniform_noise(const Raster& r, int level, int n_levels, const RandomSource& rng) {
    if (n_levels < 1 || level < 0 || level > n_levels) {
        throw Error(ErrorKind::DomainError, "noise level must satisfy 0 <= i <= N_ns, N_ns >= 1");
    }
    Raster out = r;
    if (level == 0) return out;
    const double scale = static_cast<double>(level) / static_cast<double>(n_levels);
    auto px = out.values();
    for (std::size_t k = 0; k < px.size(); ++k) {
        px[k] += scale * (rng.uniform(k) - 0.5);
    }
    return out;
}

Raster add_interference(const Raster& r, int count, const GaussianSpec& spec,
                        const RandomSource& rng) {
    if (count < 0) throw Error(ErrorKind::DomainError, "interference count must be >= 0");
    if (!(spec.sigma > 0.0)) throw Error(ErrorKind::DomainError, "Gaussian sigma must be positive");
    Raster out = r;
    for (int k = 0; k < count; ++k) {
        const auto base = static_cast<std::uint64_t>(k) * 3;
        const Point2 c{static_cast<double>(rng.below(base, r.width())),
                       static_cast<double>(rng.below(base + 1, r.height()))};
        const double sign = rng.uniform(base + 2) < 0.5 ? 1.0 : -1.0;
        add_gaussian(out, spec.sigma, c, sign * spec.amplitude);
    }
    return out;
}

Raster scale_intensity(const Raster& r, double k) {
    if (!std::isfinite(k)) throw Error(ErrorKind::DomainError, "intensity factor must be finite");
    Raster out = r;
    for (double& v : out.values()) v *= k;
    return out;
}

}  // namespace msim
