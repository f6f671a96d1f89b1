#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace msim {

/// Row-major grid of finite real intensities.
class Raster {
public:
    Raster() = default;
    Raster(std::size_t width, std::size_t height, double fill = 0.0);
    Raster(std::size_t width, std::size_t height, std::vector<double> data);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return data_.size(); }

    double at(std::size_t x, std::size_t y) const noexcept { return data_[y * width_ + x]; }
    double& at(std::size_t x, std::size_t y) noexcept { return data_[y * width_ + x]; }

    /// Flattened row-major view, the form passed to the similarity kernels.
    std::span<const double> values() const noexcept { return data_; }
    std::span<double> values() noexcept { return data_; }

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<double> data_;
};

}  // namespace msim
