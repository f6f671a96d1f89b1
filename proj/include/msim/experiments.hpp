#pragma once

#include "msim/neuron.hpp"
#include "msim/raster.hpp"
#include "msim/simkernel.hpp"
#include "msim/stimuli.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msim {

struct CurveRow {
    double sweep = 0.0;
    std::string method;
    double mean = 0.0;
    double std = 0.0;
};

/// Experiment output, one row per (sweep value, method) in sweep-major order.
struct CurveTable {
    std::vector<CurveRow> rows;

    bool empty() const noexcept { return rows.empty(); }
    /// Sweep values in first-seen order.
    std::vector<double> sweep_values() const;
    std::vector<std::string> methods() const;
    /// Means of one method in sweep order.
    std::vector<double> column(std::string_view method) const;
    std::vector<double> std_column(std::string_view method) const;
    /// Throws InvalidArgument if the row is missing.
    const CurveRow& row(double sweep, std::string_view method) const;
};

enum class Experiment {
    Displacement,
    Intensity,
    Width,
    Noise,
    Interference,
    Sensitivity,
    Angles,
};

std::string_view experiment_name(Experiment e) noexcept;
Experiment parse_experiment(std::string_view name);

struct SweepConfig {
    GridSize size{200, 200};
    /// Reference Gaussian width in pixels.
    double sigma = 100.0;
    std::vector<SimilarityParams> methods;
    /// Ordered sample values of the swept parameter.
    std::vector<double> sweep;
    int trials = 1;
    std::uint64_t seed = 1;

    /// Probe offset for the intensity sweep; {0,0} gives the unshifted variant.
    Point2 intensity_shift{2.0, 2.0};
    /// Width of the interfering Gaussians.
    double interference_sigma = 5.0;
    int noise_levels = 20;
    /// Feature count for the sensitivity study.
    std::size_t sensitivity_dim = 100;
    /// 0 selects hardware concurrency. Results do not depend on it.
    unsigned threads = 0;

    /// Throws DomainError on an invalid configuration.
    void validate() const;
};

/// The four single-neuron comparators at D = 1, alpha = 0.5.
std::vector<SimilarityParams> standard_methods();

/// Paper-default sweep, trial count and method list for each experiment.
SweepConfig default_config(Experiment e);

/// Similarity used inside the experiments. Cross-correlation against a null
/// raster has no defined value and is reported as 0.
double probe_similarity(std::span<const double> reference, std::span<const double> probe,
                        const SimilarityParams& p);

CurveTable run_displacement(const SweepConfig& cfg);
CurveTable run_intensity(const SweepConfig& cfg);
CurveTable run_width(const SweepConfig& cfg);
CurveTable run_noise(const SweepConfig& cfg);
CurveTable run_interference(const SweepConfig& cfg);
/// Relative variations |m(x', y) - m(x, y)| / |m(x, y)| of Jaccard, cosine
/// and normalized Euclidean distance when one random component of x grows by
/// the swept magnitude. Methods in cfg are ignored.
CurveTable run_sensitivity(const SweepConfig& cfg);
/// Versors at the swept angles (radians) compared with [0, 1].
CurveTable run_angle_sweep(const SweepConfig& cfg);
CurveTable run_experiment(Experiment e, const SweepConfig& cfg);

/// Coincidence with each D over a displacement, intensity or width sweep.
/// cfg.methods is replaced by coincidence at every d in d_values.
CurveTable run_strictness(const SweepConfig& cfg, Experiment base, std::span<const double> d_values);

/// Kernel values of every grid sample against the reference; row j of the
/// raster holds y = grid.y_at(j). Undefined cells are 0.
Raster similarity_map_2d(const FeatureVector& reference, const Grid2D& grid,
                         const SimilarityParams& p, unsigned threads = 0);

/// Extents of the Jaccard level-d region around a 2-D reference with
/// nonnegative entries, measured along either axis from the reference:
/// outward by c, inward by e, with s = r1 + r2:
///   c = s (1 - d) / d,   e = s (1 - d),   d = e / c.
struct EquisimExtents {
    double c = 0.0;
    double e = 0.0;
    double level = 1.0;
};

EquisimExtents equisimilarity_extents(const FeatureVector& reference, double level);

/// Header `sweep,method,mean,std`; numbers with 17 significant digits.
void write_csv(const CurveTable& table, std::ostream& out);
void write_csv(const CurveTable& table, const std::filesystem::path& path);

/// printf("%.17g") of v.
std::string format_number(double v);

}  // namespace msim
