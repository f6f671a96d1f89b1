#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace msim {

using Rgb = std::array<double, 3>;

/// Row-major RGB image, channels in [0, 1].
class ColorImage {
public:
    ColorImage() = default;
    ColorImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    const Rgb& at(std::size_t x, std::size_t y) const noexcept { return pixels_[y * width_ + x]; }
    const std::vector<Rgb>& pixels() const noexcept { return pixels_; }

    friend bool operator==(const ColorImage&, const ColorImage&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<Rgb> pixels_;
};

/// Row-major binary mask.
class Mask {
public:
    Mask() = default;
    Mask(std::size_t width, std::size_t height, bool fill = false)
        : width_(width), height_(height), bits_(width * height, fill ? 1 : 0) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t size() const noexcept { return bits_.size(); }

    bool at(std::size_t x, std::size_t y) const noexcept { return bits_[y * width_ + x] != 0; }
    void set(std::size_t x, std::size_t y, bool v) noexcept { bits_[y * width_ + x] = v ? 1 : 0; }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }

    std::size_t count() const noexcept;
    /// Every set bit of *this is also set in other (same dimensions).
    bool subset_of(const Mask& other) const noexcept;

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<unsigned char> bits_;
};

}  // namespace msim
