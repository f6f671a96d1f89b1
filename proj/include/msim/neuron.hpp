#pragma once

#include "msim/simkernel.hpp"

#include <cstddef>
#include <vector>

namespace msim {

/// Template vector compared to inputs by a multiset kernel, followed by a
/// hard-limit output: fires iff response >= threshold.
class MultisetNeuron {
public:
    /// Throws NullTemplate for an all-zero template, DomainError for a
    /// non-finite threshold or invalid params. Thresholds beyond the kernel's
    /// range are allowed and make the output constant.
    MultisetNeuron(FeatureVector templ, SimilarityParams params, double threshold);

    const FeatureVector& templ() const noexcept { return template_; }
    const SimilarityParams& params() const noexcept { return params_; }
    double threshold() const noexcept { return threshold_; }

    double response(const FeatureVector& input) const;
    double response(std::span<const double> input) const;
    bool fire(const FeatureVector& input) const;
    bool fire(std::span<const double> input) const;

    /// Same neuron with another threshold.
    MultisetNeuron with_threshold(double threshold) const;

private:
    FeatureVector template_;
    SimilarityParams params_;
    double threshold_;
};

/// Multiset neuron whose inputs are multiplied elementwise by synaptic
/// weights before comparison. The template itself is not weighted.
class GeminiNeuron {
public:
    GeminiNeuron(MultisetNeuron base, FeatureVector weights);
    /// Unit weights.
    explicit GeminiNeuron(MultisetNeuron base);

    const MultisetNeuron& base() const noexcept { return base_; }
    const FeatureVector& weights() const noexcept { return weights_; }

    double response(const FeatureVector& input) const;
    bool fire(const FeatureVector& input) const;

private:
    std::vector<double> weighted(std::span<const double> input) const;

    MultisetNeuron base_;
    FeatureVector weights_;
};

/// Axis-aligned sampling grid. Sample (i, j) sits at
/// (x_min + i * step_x, y_min + j * step_y) with step = (max - min) / (n - 1);
/// the bounds are the centers of the outermost cells.
struct Grid2D {
    double x_min = -4.0;
    double x_max = 4.0;
    double y_min = -4.0;
    double y_max = 4.0;
    std::size_t nx = 161;
    std::size_t ny = 161;

    void validate() const;
    double step_x() const noexcept { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double step_y() const noexcept { return (y_max - y_min) / static_cast<double>(ny - 1); }
    // (max - min) * i / (n - 1) keeps samples such as 1.0 exact on the default grid.
    double x_at(std::size_t i) const noexcept {
        return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
    }
    double y_at(std::size_t j) const noexcept {
        return y_min + (y_max - y_min) * static_cast<double>(j) / static_cast<double>(ny - 1);
    }
};

/// Row-major mask over a Grid2D: row j holds samples with y = y_at(j).
struct DecisionRegion {
    Grid2D grid;
    std::vector<unsigned char> mask;

    bool at(std::size_t i, std::size_t j) const noexcept { return mask[j * grid.nx + i] != 0; }
    std::size_t count() const noexcept;
};

/// Fires the neuron at every grid sample. Kernel errors count as not fired.
/// Throws DimensionError unless the template has length 2.
DecisionRegion decision_region(const GeminiNeuron& g, const Grid2D& grid, unsigned threads = 0);

}  // namespace msim
