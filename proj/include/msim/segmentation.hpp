#pragma once

#include "msim/image.hpp"
#include "msim/neuron.hpp"
#include "msim/simkernel.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace msim {

/// Training pixel with the half-width of its square window.
struct SeedSample {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t window_radius = 1;
};

/// Default firing thresholds: 0.75 for coincidence, 0.8 otherwise.
double default_threshold(Method m) noexcept;

/// RGB values of the (2w+1)^2 window around (x, y), window row-major and
/// channels interleaved per pixel. Coordinates outside the image are clamped
/// to the nearest edge pixel. Throws OutOfBounds if the seed is outside.
FeatureVector extract_template(const ColorImage& img, const SeedSample& s);

/// One neuron per sample, all sharing params and threshold.
class Segmenter {
public:
    Segmenter(std::vector<MultisetNeuron> neurons, std::size_t window_radius);

    const std::vector<MultisetNeuron>& neurons() const noexcept { return neurons_; }
    std::size_t window_radius() const noexcept { return window_radius_; }

private:
    std::vector<MultisetNeuron> neurons_;
    std::size_t window_radius_;
};

/// Throws InvalidArgument for no samples or mixed window sizes, NullTemplate
/// for a pure-black window when threshold > 0.
Segmenter build_segmenter(const ColorImage& img, const std::vector<SeedSample>& samples,
                          const SimilarityParams& p, double threshold);

/// A pixel is set iff at least one neuron fires on its window. Windows the
/// kernel cannot compare count as not fired.
Mask segment(const ColorImage& img, const Segmenter& seg, unsigned threads = 0);

/// Parses `x y` lines; blank lines and text after '#' are ignored.
std::vector<SeedSample> parse_seed_samples(std::istream& in, std::size_t window_radius);
std::vector<SeedSample> read_seed_samples(const std::filesystem::path& path, std::size_t window_radius);

}  // namespace msim
