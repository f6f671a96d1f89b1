#include "msim/experiments.hpp"

#include "msim/error.hpp"
#include "msim/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>

namespace msim {

namespace {

struct Stats {
    double mean = 0.0;
    double std = 0.0;
};

// Sample standard deviation; a single trial has std 0.
Stats summarize(std::span<const double> v) {
    Stats s;
    for (double x : v) s.mean += x;
    s.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
    }
    return s;
}

bool all_zero(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// Runs `trial(sweep_index, trial_index)` for every pair, returning one value
// per method for each; rows are assembled in fixed sweep-major order.
template <class Trial>
CurveTable sweep_table(const SweepConfig& cfg, std::span<const std::string> labels, int trials,
                       Trial&& trial) {
    const std::size_t n_sweep = cfg.sweep.size();
    const std::size_t n_trials = static_cast<std::size_t>(trials);
    const std::size_t n_methods = labels.size();
    std::vector<double> results(n_sweep * n_trials * n_methods);
    parallel_for(
        n_sweep * n_trials,
        [&](std::size_t job) {
            const std::size_t s = job / n_trials;
            const std::size_t t = job % n_trials;
            const std::vector<double> v = trial(s, t);
            std::copy(v.begin(), v.end(), results.begin() + static_cast<std::ptrdiff_t>(job * n_methods));
        },
        cfg.threads);

    CurveTable table;
    table.rows.reserve(n_sweep * n_methods);
    std::vector<double> samples(n_trials);
    for (std::size_t s = 0; s < n_sweep; ++s) {
        for (std::size_t m = 0; m < n_methods; ++m) {
            for (std::size_t t = 0; t < n_trials; ++t) {
                samples[t] = results[((s * n_trials) + t) * n_methods + m];
            }
            const Stats st = summarize(samples);
            table.rows.push_back({cfg.sweep[s], labels[m], st.mean, st.std});
        }
    }
    return table;
}

std::vector<std::string> labels_of(const std::vector<SimilarityParams>& methods) {
    std::vector<std::string> out;
    out.reserve(methods.size());
    for (const auto& p : methods) out.push_back(params_label(p));
    return out;
}

std::vector<double> compare_all(std::span<const double> reference, std::span<const double> probe,
                                const std::vector<SimilarityParams>& methods) {
    std::vector<double> v;
    v.reserve(methods.size());
    for (const auto& p : methods) v.push_back(probe_similarity(reference, probe, p));
    return v;
}

Raster reference_pattern(const SweepConfig& cfg) {
    return gaussian_pattern(cfg.size, GaussianSpec{cfg.sigma, std::nullopt, 1.0});
}

Point2 offset_center(GridSize size, double dx, double dy) {
    const Point2 c = grid_center(size);
    return {c.x + dx, c.y + dy};
}

RandomSource trial_stream(const SweepConfig& cfg, std::size_t sweep_index, std::size_t trial) {
    return RandomSource(cfg.seed, sweep_index).substream(trial);
}

void require_integers(const SweepConfig& cfg, double lo, double hi, const char* what) {
    for (double v : cfg.sweep) {
        if (v != std::floor(v) || v < lo || v > hi) {
            throw Error(ErrorKind::DomainError, std::string(what) + " sweep values must be integers in [" +
                                                    format_number(lo) + ", " + format_number(hi) + "]");
        }
    }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return v;
}

}  // namespace

std::vector<double> CurveTable::sweep_values() const {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (out.empty() || out.back() != r.sweep) out.push_back(r.sweep);
    }
    return out;
}

std::vector<std::string> CurveTable::methods() const {
    std::vector<std::string> out;
    for (const auto& r : rows) {
        if (std::find(out.begin(), out.end(), r.method) == out.end()) out.push_back(r.method);
    }
    return out;
}

std::vector<double> CurveTable::column(std::string_view method) const {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.method == method) out.push_back(r.mean);
    }
    return out;
}

std::vector<double> CurveTable::std_column(std::string_view method) const {
    std::vector<double> out;
    for (const auto& r : rows) {
        if (r.method == method) out.push_back(r.std);
    }
    return out;
}

const CurveRow& CurveTable::row(double sweep, std::string_view method) const {
    for (const auto& r : rows) {
        if (r.sweep == sweep && r.method == method) return r;
    }
    throw Error(ErrorKind::InvalidArgument,
                "no row for sweep " + format_number(sweep) + ", method " + std::string(method));
}

std::string_view experiment_name(Experiment e) noexcept {
    switch (e) {
        case Experiment::Displacement: return "displacement";
        case Experiment::Intensity: return "intensity";
        case Experiment::Width: return "width";
        case Experiment::Noise: return "noise";
        case Experiment::Interference: return "interference";
        case Experiment::Sensitivity: return "sensitivity";
        case Experiment::Angles: return "angles";
    }
    return "unknown";
}

Experiment parse_experiment(std::string_view name) {
    for (Experiment e : {Experiment::Displacement, Experiment::Intensity, Experiment::Width,
                         Experiment::Noise, Experiment::Interference, Experiment::Sensitivity,
                         Experiment::Angles}) {
        if (name == experiment_name(e)) return e;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown experiment '" + std::string(name) + "'");
}

void SweepConfig::validate() const {
    if (size.width == 0 || size.height == 0) throw Error(ErrorKind::DomainError, "raster size must be positive");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw Error(ErrorKind::DomainError, "sigma must be positive");
    if (trials < 1) throw Error(ErrorKind::DomainError, "trials must be >= 1");
    if (sweep.empty()) throw Error(ErrorKind::DomainError, "sweep must not be empty");
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        if (!std::isfinite(sweep[i])) throw Error(ErrorKind::DomainError, "sweep values must be finite");
        if (i > 0 && !(sweep[i] > sweep[i - 1])) {
            throw Error(ErrorKind::DomainError, "sweep values must be strictly increasing");
        }
    }
    for (const auto& p : methods) p.validate();
    if (!(interference_sigma > 0.0)) throw Error(ErrorKind::DomainError, "interference sigma must be positive");
    if (noise_levels < 1) throw Error(ErrorKind::DomainError, "noise levels must be >= 1");
    if (sensitivity_dim < 1) throw Error(ErrorKind::DomainError, "sensitivity dimension must be >= 1");
}

std::vector<SimilarityParams> standard_methods() {
    std::vector<SimilarityParams> out;
    for (Method m : {Method::CrossCorrelation, Method::Interiority, Method::RealJaccard,
                     Method::Coincidence}) {
        SimilarityParams p;
        p.method = m;
        out.push_back(p);
    }
    return out;
}

SweepConfig default_config(Experiment e) {
    SweepConfig cfg;
    cfg.methods = standard_methods();
    switch (e) {
        case Experiment::Displacement:
            cfg.sweep = linspace(0.0, 30.0, 31);
            break;
        case Experiment::Intensity:
            cfg.sweep = linspace(0.0, 3.0, 31);
            break;
        case Experiment::Width:
            cfg.sweep = linspace(0.0, 100.0, 21);
            cfg.sweep.front() = kZeroWidthSigma;
            break;
        case Experiment::Noise:
            cfg.sweep = linspace(0.0, 20.0, 21);
            cfg.trials = 20;
            break;
        case Experiment::Interference:
            cfg.sweep = linspace(0.0, 5.0, 6);
            cfg.trials = 50;
            break;
        case Experiment::Sensitivity:
            cfg.sweep = {0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};
            cfg.trials = 10000;
            cfg.methods.clear();
            break;
        case Experiment::Angles: {
            cfg.sweep = linspace(0.0, std::numbers::pi, 37);
            SimilarityParams cc;
            cc.method = Method::CrossCorrelation;
            SimilarityParams co;
            co.method = Method::Coincidence;
            cfg.methods = {cc, co};
            break;
        }
    }
    return cfg;
}

double probe_similarity(std::span<const double> reference, std::span<const double> probe,
                        const SimilarityParams& p) {
    if (p.method == Method::CrossCorrelation && (all_zero(reference) || all_zero(probe))) {
        return 0.0;
    }
    return similarity(reference, probe, p);
}

CurveTable run_displacement(const SweepConfig& cfg) {
    cfg.validate();
    require_integers(cfg, 0.0, 1e9, "displacement");
    const Raster reference = reference_pattern(cfg);
    const auto labels = labels_of(cfg.methods);
    return sweep_table(cfg, labels, 1, [&](std::size_t s, std::size_t) {
        const double step = cfg.sweep[s];
        const Raster probe =
            gaussian_pattern(cfg.size, {cfg.sigma, offset_center(cfg.size, step, step), 1.0});
        return compare_all(reference.values(), probe.values(), cfg.methods);
    });
}

CurveTable run_intensity(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.front() < 0.0) throw Error(ErrorKind::DomainError, "intensity factors must be >= 0");
    const Raster reference = reference_pattern(cfg);
    const Raster shifted = gaussian_pattern(
        cfg.size,
        {cfg.sigma, offset_center(cfg.size, cfg.intensity_shift.x, cfg.intensity_shift.y), 1.0});
    const auto labels = labels_of(cfg.methods);
    return sweep_table(cfg, labels, 1, [&](std::size_t s, std::size_t) {
        const Raster probe = scale_intensity(shifted, cfg.sweep[s]);
        return compare_all(reference.values(), probe.values(), cfg.methods);
    });
}

CurveTable run_width(const SweepConfig& cfg) {
    cfg.validate();
    if (!(cfg.sweep.front() >= 0.0)) throw Error(ErrorKind::DomainError, "widths must be >= 0");
    const Raster reference = reference_pattern(cfg);
    const auto labels = labels_of(cfg.methods);
    return sweep_table(cfg, labels, 1, [&](std::size_t s, std::size_t) {
        const double sigma = std::max(cfg.sweep[s], kZeroWidthSigma);
        const Raster probe = gaussian_pattern(cfg.size, {sigma, std::nullopt, 1.0});
        return compare_all(reference.values(), probe.values(), cfg.methods);
    });
}

CurveTable run_noise(const SweepConfig& cfg) {
    cfg.validate();
    require_integers(cfg, 0.0, cfg.noise_levels, "noise level");
    const Raster reference = reference_pattern(cfg);
    const auto labels = labels_of(cfg.methods);
    return sweep_table(cfg, labels, cfg.trials, [&](std::size_t s, std::size_t t) {
        const Raster probe = add_uniform_noise(reference, static_cast<int>(cfg.sweep[s]),
                                               cfg.noise_levels, trial_stream(cfg, s, t));
        return compare_all(reference.values(), probe.values(), cfg.methods);
    });
}

CurveTable run_interference(const SweepConfig& cfg) {
    cfg.validate();
    require_integers(cfg, 0.0, 1e6, "interference count");
    const Raster reference = reference_pattern(cfg);
    const auto labels = labels_of(cfg.methods);
    const GaussianSpec interferer{cfg.interference_sigma, std::nullopt, 1.0};
    return sweep_table(cfg, labels, cfg.trials, [&](std::size_t s, std::size_t t) {
        const Raster probe = add_interference(reference, static_cast<int>(cfg.sweep[s]), interferer,
                                              trial_stream(cfg, s, t));
        return compare_all(reference.values(), probe.values(), cfg.methods);
    });
}

CurveTable run_sensitivity(const SweepConfig& cfg) {
    cfg.validate();
    if (cfg.sweep.front() < 0.0) throw Error(ErrorKind::DomainError, "perturbation magnitudes must be >= 0");
    const std::size_t n = cfg.sensitivity_dim;
    const std::vector<std::string> labels = {"jaccard", "cosine", "normalized_euclidean"};
    const SimilarityParams jaccard;

    // Trial t draws x and y from stream t alone so every magnitude sees the same pair.
    struct Pair {
        std::vector<double> x, y;
        std::size_t index = 0;
        double base[3] = {0.0, 0.0, 0.0};
    };
    const std::size_t trials = static_cast<std::size_t>(cfg.trials);
    std::vector<Pair> pairs(trials);
    parallel_for(
        trials,
        [&](std::size_t t) {
            const RandomSource rng = RandomSource(cfg.seed, 0).substream(t);
            Pair& p = pairs[t];
            p.x.resize(n);
            p.y.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                p.x[i] = 10.0 + 3.0 * rng.normal(i);
                p.y[i] = p.x[i] + 0.1 * (1.0 + 5.0 * rng.normal(n + i));
            }
            p.index = rng.below(4 * n, n);
            p.base[0] = similarity(p.x, p.y, jaccard);
            p.base[1] = cosine(std::span<const double>(p.x), p.y);
            p.base[2] = normalized_euclidean(std::span<const double>(p.x), p.y);
        },
        cfg.threads);

    return sweep_table(cfg, labels, cfg.trials, [&](std::size_t s, std::size_t t) {
        const Pair& p = pairs[t];
        std::vector<double> xp = p.x;
        xp[p.index] += cfg.sweep[s];
        const double now[3] = {similarity(xp, p.y, jaccard),
                               cosine(std::span<const double>(xp), p.y),
                               normalized_euclidean(std::span<const double>(xp), p.y)};
        std::vector<double> rel(3);
        for (int m = 0; m < 3; ++m) rel[m] = std::abs(now[m] - p.base[m]) / std::abs(p.base[m]);
        return rel;
    });
}

CurveTable run_angle_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<double> reference = {0.0, 1.0};
    const auto labels = labels_of(cfg.methods);
    return sweep_table(cfg, labels, 1, [&](std::size_t s, std::size_t) {
        const double a = cfg.sweep[s];
        const std::vector<double> versor = {std::cos(a), std::sin(a)};
        return compare_all(reference, versor, cfg.methods);
    });
}

CurveTable run_experiment(Experiment e, const SweepConfig& cfg) {
    switch (e) {
        case Experiment::Displacement: return run_displacement(cfg);
        case Experiment::Intensity: return run_intensity(cfg);
        case Experiment::Width: return run_width(cfg);
        case Experiment::Noise: return run_noise(cfg);
        case Experiment::Interference: return run_interference(cfg);
        case Experiment::Sensitivity: return run_sensitivity(cfg);
        case Experiment::Angles: return run_angle_sweep(cfg);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown experiment");
}

CurveTable run_strictness(const SweepConfig& cfg, Experiment base, std::span<const double> d_values) {
    if (d_values.empty()) throw Error(ErrorKind::DomainError, "strictness needs at least one D");
    if (base != Experiment::Displacement && base != Experiment::Intensity && base != Experiment::Width) {
        throw Error(ErrorKind::DomainError, "strictness applies to displacement, intensity or width");
    }
    SweepConfig c = cfg;
    c.methods.clear();
    for (double d : d_values) {
        SimilarityParams p;
        p.method = Method::Coincidence;
        p.d_power = d;
        c.methods.push_back(p);
    }
    return run_experiment(base, c);
}

Raster similarity_map_2d(const FeatureVector& reference, const Grid2D& grid,
                         const SimilarityParams& p, unsigned threads) {
    if (reference.size() != 2) throw Error(ErrorKind::DimensionError, "2-D maps need a 2-element reference");
    grid.validate();
    p.validate();
    Raster out(grid.nx, grid.ny);
    parallel_for(
        grid.ny,
        [&](std::size_t j) {
            for (std::size_t i = 0; i < grid.nx; ++i) {
                const double cell[2] = {grid.x_at(i), grid.y_at(j)};
                double v = 0.0;
                try {
                    v = similarity(cell, reference.values(), p);
                } catch (const Error&) {
                    v = 0.0;
                }
                out.at(i, j) = v;
            }
        },
        threads);
    return out;
}

EquisimExtents equisimilarity_extents(const FeatureVector& reference, double level) {
    if (reference.size() != 2) throw Error(ErrorKind::DimensionError, "equisimilarity needs a 2-element reference");
    if (!(level > 0.0 && level <= 1.0)) throw Error(ErrorKind::DomainError, "level d must lie in (0, 1]");
    if (reference[0] < 0.0 || reference[1] < 0.0 || reference.is_all_zero()) {
        throw Error(ErrorKind::DomainError, "equisimilarity reference must be nonnegative and nonzero");
    }
    const double s = reference[0] + reference[1];
    return {s * (1.0 - level) / level, s * (1.0 - level), level};
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const CurveTable& table, std::ostream& out) {
    if (table.empty()) throw Error(ErrorKind::InvalidArgument, "cannot write an empty curve table");
    out << "sweep,method,mean,std\n";
    for (const auto& r : table.rows) {
        out << format_number(r.sweep) << ',' << r.method << ',' << format_number(r.mean) << ','
            << format_number(r.std) << '\n';
    }
}

void write_csv(const CurveTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
    write_csv(table, out);
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path.string() + "'");
}

}  // namespace msim
