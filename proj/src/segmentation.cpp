#include "msim/segmentation.hpp"

#include "msim/error.hpp"
#include "msim/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

namespace msim {

namespace {

void fill_window(const ColorImage& img, std::size_t x, std::size_t y, std::size_t w,
                 std::vector<double>& out) {
    out.clear();
    const auto clamp_to = [](std::ptrdiff_t v, std::size_t n) {
        return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(v, 0, static_cast<std::ptrdiff_t>(n) - 1));
    };
    const auto r = static_cast<std::ptrdiff_t>(w);
    for (std::ptrdiff_t dy = -r; dy <= r; ++dy) {
        const std::size_t yy = clamp_to(static_cast<std::ptrdiff_t>(y) + dy, img.height());
        for (std::ptrdiff_t dx = -r; dx <= r; ++dx) {
            const std::size_t xx = clamp_to(static_cast<std::ptrdiff_t>(x) + dx, img.width());
            const Rgb& p = img.at(xx, yy);
            out.insert(out.end(), p.begin(), p.end());
        }
    }
}

}  // namespace

double default_threshold(Method m) noexcept { return m == Method::Coincidence ? 0.75 : 0.8; }

FeatureVector extract_template(const ColorImage& img, const SeedSample& s) {
    if (s.x >= img.width() || s.y >= img.height()) {
        throw Error(ErrorKind::OutOfBounds, "seed (" + std::to_string(s.x) + ", " + std::to_string(s.y) +
                                                ") lies outside the " + std::to_string(img.width()) + "x" +
                                                std::to_string(img.height()) + " image");
    }
    std::vector<double> values;
    values.reserve(3 * (2 * s.window_radius + 1) * (2 * s.window_radius + 1));
    fill_window(img, s.x, s.y, s.window_radius, values);
    return FeatureVector(std::move(values));
}

Segmenter::Segmenter(std::vector<MultisetNeuron> neurons, std::size_t window_radius)
    : neurons_(std::move(neurons)), window_radius_(window_radius) {
    if (neurons_.empty()) throw Error(ErrorKind::InvalidArgument, "segmenter needs at least one neuron");
    const std::size_t side = 2 * window_radius + 1;
    for (const auto& n : neurons_) {
        if (n.templ().size() != 3 * side * side) {
            throw Error(ErrorKind::LengthMismatch, "neuron template does not match the window size");
        }
    }
}

Segmenter build_segmenter(const ColorImage& img, const std::vector<SeedSample>& samples,
                          const SimilarityParams& p, double threshold) {
    if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "at least one seed sample is required");
    const std::size_t w = samples.front().window_radius;
    std::vector<MultisetNeuron> neurons;
    neurons.reserve(samples.size());
    for (const SeedSample& s : samples) {
        if (s.window_radius != w) {
            throw Error(ErrorKind::InvalidArgument, "all seed samples must share one window radius");
        }
        FeatureVector t = extract_template(img, s);
        if (t.is_all_zero()) {
            // A null template can never fire, so it is only rejected when it matters.
            if (threshold > 0.0) {
                throw Error(ErrorKind::NullTemplate, "seed (" + std::to_string(s.x) + ", " +
                                                         std::to_string(s.y) + ") has an all-black window");
            }
            continue;
        }
        neurons.emplace_back(std::move(t), p, threshold);
    }
    if (neurons.empty()) {
        throw Error(ErrorKind::NullTemplate, "every seed sample has an all-black window");
    }
    return Segmenter(std::move(neurons), w);
}

Mask segment(const ColorImage& img, const Segmenter& seg, unsigned threads) {
    Mask mask(img.width(), img.height());
    const std::size_t w = seg.window_radius();
    parallel_for(
        img.height(),
        [&](std::size_t y) {
            std::vector<double> window;
            for (std::size_t x = 0; x < img.width(); ++x) {
                fill_window(img, x, y, w, window);
                const bool null_window =
                    std::all_of(window.begin(), window.end(), [](double v) { return v == 0.0; });
                if (null_window) continue;
                for (const auto& n : seg.neurons()) {
                    if (n.fire(window)) {
                        mask.set(x, y, true);
                        break;
                    }
                }
            }
        },
        threads);
    return mask;
}

std::vector<SeedSample> parse_seed_samples(std::istream& in, std::size_t window_radius) {
    std::vector<SeedSample> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long x = 0;
        long long y = 0;
        if (!(fields >> x)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw Error(ErrorKind::MalformedInput, "seed line " + std::to_string(lineno) + ": expected 'x y'");
        }
        std::string rest;
        if (!(fields >> y) || (fields >> rest) || x < 0 || y < 0) {
            throw Error(ErrorKind::MalformedInput,
                        "seed line " + std::to_string(lineno) + ": expected two nonnegative integers");
        }
        out.push_back({static_cast<std::size_t>(x), static_cast<std::size_t>(y), window_radius});
    }
    return out;
}

std::vector<SeedSample> read_seed_samples(const std::filesystem::path& path, std::size_t window_radius) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
    try {
        return parse_seed_samples(in, window_radius);
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

}  // namespace msim
