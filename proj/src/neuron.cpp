#include "msim/neuron.hpp"

#include "msim/error.hpp"
#include "msim/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace msim {

MultisetNeuron::MultisetNeuron(FeatureVector templ, SimilarityParams params, double threshold)
    : template_(std::move(templ)), params_(params), threshold_(threshold) {
    if (template_.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty neuron template");
    if (template_.is_all_zero()) throw Error(ErrorKind::NullTemplate, "neuron template is all zero");
    params_.validate();
    if (!std::isfinite(threshold)) {
        throw Error(ErrorKind::DomainError, "neuron threshold must be finite");
    }
}

double MultisetNeuron::response(std::span<const double> input) const {
    return similarity(template_.values(), input, params_);
}

double MultisetNeuron::response(const FeatureVector& input) const {
    return response(input.values());
}

bool MultisetNeuron::fire(std::span<const double> input) const {
    return response(input) >= threshold_;
}

bool MultisetNeuron::fire(const FeatureVector& input) const { return fire(input.values()); }

MultisetNeuron MultisetNeuron::with_threshold(double threshold) const {
    return MultisetNeuron(template_, params_, threshold);
}

GeminiNeuron::GeminiNeuron(MultisetNeuron base, FeatureVector weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
    if (weights_.size() != base_.templ().size()) {
        throw Error(ErrorKind::LengthMismatch, "gemini weights must match the template length");
    }
}

GeminiNeuron::GeminiNeuron(MultisetNeuron base)
    : GeminiNeuron(base, FeatureVector(std::vector<double>(base.templ().size(), 1.0))) {}

std::vector<double> GeminiNeuron::weighted(std::span<const double> input) const {
    if (input.size() != weights_.size()) {
        throw Error(ErrorKind::LengthMismatch, "input length does not match gemini weights");
    }
    std::vector<double> out(input.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = weights_[i] * input[i];
    return out;
}

double GeminiNeuron::response(const FeatureVector& input) const {
    return base_.response(weighted(input.values()));
}

bool GeminiNeuron::fire(const FeatureVector& input) const {
    return base_.fire(weighted(input.values()));
}

void Grid2D::validate() const {
    if (nx < 2 || ny < 2) throw Error(ErrorKind::DomainError, "grid resolution must be at least 2x2");
    if (!(x_max > x_min) || !(y_max > y_min) || !std::isfinite(x_max - x_min) ||
        !std::isfinite(y_max - y_min)) {
        throw Error(ErrorKind::DomainError, "grid bounds must be finite with max > min");
    }
}

std::size_t DecisionRegion::count() const noexcept {
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
}

DecisionRegion decision_region(const GeminiNeuron& g, const Grid2D& grid, unsigned threads) {
    if (g.base().templ().size() != 2) {
        throw Error(ErrorKind::DimensionError, "decision regions need a 2-element template");
    }
    grid.validate();
    DecisionRegion region{grid, std::vector<unsigned char>(grid.nx * grid.ny, 0)};
    parallel_for(
        grid.ny,
        [&](std::size_t j) {
            for (std::size_t i = 0; i < grid.nx; ++i) {
                const FeatureVector p{grid.x_at(i), grid.y_at(j)};
                bool fired = false;
                try {
                    fired = g.fire(p);
                } catch (const Error&) {
                    fired = false;
                }
                region.mask[j * grid.nx + i] = fired ? 1 : 0;
            }
        },
        threads);
    return region;
}

}  // namespace msim
