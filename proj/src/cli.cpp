#include "msim/cli.hpp"

#include "msim/error.hpp"
#include "msim/experiments.hpp"
#include "msim/netpbm.hpp"
#include "msim/segmentation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace msim::cli {

namespace {

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p <= end) {
        const char* comma = std::find(p, end, ',');
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(p, comma, v);
        if (ec != std::errc() || ptr != comma || !std::isfinite(v)) {
            throw Error(ErrorKind::InvalidArgument,
                        std::string("invalid number list for ") + what + ": '" + text + "'");
        }
        out.push_back(v);
        p = comma + 1;
    }
    return out;
}

GridSize parse_size(const std::string& text) {
    const auto x = text.find('x');
    std::size_t w = 0;
    std::size_t h = 0;
    if (x != std::string::npos) {
        const char* b = text.data();
        const auto r1 = std::from_chars(b, b + x, w);
        const auto r2 = std::from_chars(b + x + 1, b + text.size(), h);
        if (r1.ec == std::errc() && r1.ptr == b + x && r2.ec == std::errc() &&
            r2.ptr == b + text.size() && w > 0 && h > 0) {
            return {w, h};
        }
    }
    throw Error(ErrorKind::InvalidArgument, "invalid --size '" + text + "' (expected WxH)");
}

struct KernelFlags {
    std::string method = "jaccard";
    double d_power = 1.0;
    double alpha = 0.5;
    std::string alpha_scaling = "doubled";
};

void add_kernel_flags(CLI::App* app, KernelFlags& f, bool method_flag = true) {
    if (method_flag) {
        app->add_option("--method", f.method, "crosscorr|interiority|jaccard|coincidence")
            ->capture_default_str();
    }
    app->add_option("--d-power", f.d_power, "Strictness exponent D")->capture_default_str();
    app->add_option("--alpha", f.alpha, "Sign-asymmetry weight in [0,1]")->capture_default_str();
    app->add_option("--alpha-scaling", f.alpha_scaling, "doubled|plain")->capture_default_str();
}

SimilarityParams params_from(const KernelFlags& f, const std::string& method) {
    SimilarityParams p;
    p.method = parse_method(method);
    p.d_power = f.d_power;
    p.alpha = f.alpha;
    p.alpha_scaling = parse_alpha_scaling(f.alpha_scaling);
    p.validate();
    return p;
}

// Writes to the --out path when given, otherwise to standard output.
template <class Writer>
void emit(const std::string& out_path, std::ostream& out, Writer&& write) {
    if (out_path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::IoError, "cannot open '" + out_path + "' for writing");
    write(file);
    file.flush();
    if (!file) throw Error(ErrorKind::IoError, "write failed for '" + out_path + "'");
}

struct BenchFlags {
    std::string experiment;
    KernelFlags kernel;
    std::vector<std::string> methods;
    double sigma = 100.0;
    std::string size = "200x200";
    std::uint64_t seed = 1;
    int trials = 0;
    std::string sweep;
    std::string d_values = "1,3,5,7,9,11";
    std::string base = "displacement";
    double interference_sigma = 5.0;
    unsigned threads = 0;
    std::string out;
};

int run_bench(const BenchFlags& f, std::ostream& out) {
    const bool strictness = f.experiment == "strictness";
    const Experiment e = parse_experiment(strictness ? f.base : f.experiment);
    SweepConfig cfg = default_config(e);
    cfg.size = parse_size(f.size);
    cfg.sigma = f.sigma;
    cfg.seed = f.seed;
    cfg.threads = f.threads;
    cfg.interference_sigma = f.interference_sigma;
    if (f.trials > 0) cfg.trials = f.trials;
    if (!f.sweep.empty()) cfg.sweep = parse_list(f.sweep, "--sweep");
    if (!f.methods.empty()) {
        cfg.methods.clear();
        for (const auto& m : f.methods) cfg.methods.push_back(params_from(f.kernel, m));
    } else {
        for (auto& p : cfg.methods) {
            p = params_from(f.kernel, std::string(method_name(p.method)));
        }
    }
    cfg.validate();

    CurveTable table;
    if (strictness) {
        const auto ds = parse_list(f.d_values, "--d-values");
        table = run_strictness(cfg, e, ds);
    } else {
        table = run_experiment(e, cfg);
    }
    emit(f.out, out, [&](std::ostream& o) { write_csv(table, o); });
    return kOk;
}

struct MapFlags {
    KernelFlags kernel;
    std::string reference = "1,2";
    std::string bounds = "-4,4";
    std::size_t resolution = 161;
    std::string out;
};

int run_map(const MapFlags& f, std::ostream& out) {
    const SimilarityParams p = params_from(f.kernel, f.kernel.method);
    const FeatureVector ref(parse_list(f.reference, "--ref"));
    const auto b = parse_list(f.bounds, "--bounds");
    if (b.size() != 2) throw Error(ErrorKind::InvalidArgument, "--bounds takes LO,HI");
    const Grid2D grid{b[0], b[1], b[0], b[1], f.resolution, f.resolution};
    grid.validate();
    const Raster map = similarity_map_2d(ref, grid, p);
    const bool pgm = std::filesystem::path(f.out).extension() == ".pgm";
    emit(f.out, out, [&](std::ostream& o) {
        if (pgm) {
            write_pgm(map, o);
            return;
        }
        o << "x,y,value\n";
        for (std::size_t j = 0; j < grid.ny; ++j) {
            for (std::size_t i = 0; i < grid.nx; ++i) {
                o << format_number(grid.x_at(i)) << ',' << format_number(grid.y_at(j)) << ','
                  << format_number(map.at(i, j)) << '\n';
            }
        }
    });
    return kOk;
}

struct SegmentFlags {
    std::string image;
    KernelFlags kernel;
    std::optional<double> threshold;
    std::size_t window = 1;
    std::string samples_path;
    std::vector<std::string> samples;
    unsigned threads = 0;
    std::string out;
};

int run_segment(const SegmentFlags& f, std::ostream& out) {
    const SimilarityParams p = params_from(f.kernel, f.kernel.method);
    const double threshold = f.threshold.value_or(default_threshold(p.method));
    std::vector<SeedSample> samples;
    for (const auto& s : f.samples) {
        const auto xy = parse_list(s, "--sample");
        if (xy.size() != 2 || xy[0] < 0 || xy[1] < 0 || xy[0] != std::floor(xy[0]) ||
            xy[1] != std::floor(xy[1])) {
            throw Error(ErrorKind::InvalidArgument, "--sample takes X,Y pixel coordinates");
        }
        samples.push_back({static_cast<std::size_t>(xy[0]), static_cast<std::size_t>(xy[1]), f.window});
    }
    if (samples.empty() && f.samples_path.empty()) {
        throw Error(ErrorKind::InvalidArgument, "segment needs --samples PATH or --sample X,Y");
    }
    if (!f.samples_path.empty()) {
        const auto more = read_seed_samples(f.samples_path, f.window);
        samples.insert(samples.end(), more.begin(), more.end());
    }
    const ColorImage img = read_ppm(std::filesystem::path(f.image));
    const Segmenter seg = build_segmenter(img, samples, p, threshold);
    const Mask mask = segment(img, seg, f.threads);
    emit(f.out, out, [&](std::ostream& o) { write_pgm(mask, o); });
    return kOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiset similarity kernels, neuron experiments and segmentation", "msim"};
    app.require_subcommand(1);

    KernelFlags kernel_flags;
    std::vector<std::string> vectors;
    auto* kernel = app.add_subcommand("kernel", "Compare two vectors given as comma-separated numbers");
    add_kernel_flags(kernel, kernel_flags);
    kernel->add_option("vectors", vectors, "X Y, e.g. 1,2 2,2 (use -- before negative values)")
        ->required()
        ->expected(2);

    BenchFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Run a parameter sweep and write a CSV curve table");
    bench->add_option("experiment", bench_flags.experiment,
                      "displacement|intensity|width|noise|interference|strictness|sensitivity|angles")
        ->required()
        ->check(CLI::IsMember({"displacement", "intensity", "width", "noise", "interference",
                               "strictness", "sensitivity", "angles"}));
    add_kernel_flags(bench, bench_flags.kernel, false);
    bench->add_option("--method", bench_flags.methods,
                      "Method to include (repeatable; default: all four, or crosscorr and "
                      "coincidence for angles)");
    bench->add_option("--sigma", bench_flags.sigma, "Reference Gaussian sigma (pixels)")->capture_default_str();
    bench->add_option("--size", bench_flags.size, "Raster size WxH")->capture_default_str();
    bench->add_option("--seed", bench_flags.seed, "Random seed")->capture_default_str();
    bench->add_option("--trials", bench_flags.trials,
                      "Trials per sweep value (default: 20 noise, 50 interference, 10000 sensitivity, 1 otherwise)");
    bench->add_option("--sweep", bench_flags.sweep, "Override sweep values, comma-separated");
    bench->add_option("--d-values", bench_flags.d_values, "Strictness exponents")->capture_default_str();
    bench->add_option("--base", bench_flags.base, "Strictness base sweep: displacement|intensity|width")
        ->capture_default_str()
        ->check(CLI::IsMember({"displacement", "intensity", "width"}));
    bench->add_option("--interference-sigma", bench_flags.interference_sigma,
                      "Sigma of interfering Gaussians")->capture_default_str();
    bench->add_option("--threads", bench_flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--out", bench_flags.out, "CSV output path (default: standard output)");

    MapFlags map_flags;
    auto* map = app.add_subcommand("map2d", "Similarity of grid points to a 2-D reference");
    add_kernel_flags(map, map_flags.kernel);
    map->add_option("--ref", map_flags.reference, "Reference vector")->capture_default_str();
    map->add_option("--bounds", map_flags.bounds, "Grid LO,HI on both axes")->capture_default_str();
    map->add_option("--resolution", map_flags.resolution, "Samples per axis")->capture_default_str();
    map->add_option("--out", map_flags.out,
                    "Output path; .pgm writes an image, anything else CSV x,y,value (default: CSV on standard output)");

    std::string equisim_ref = "1,2";
    double equisim_level = 0.95;
    auto* equisim = app.add_subcommand("equisim", "Extents of a Jaccard equisimilarity region");
    equisim->add_option("--ref", equisim_ref, "Nonnegative 2-D reference")->capture_default_str();
    equisim->add_option("--level", equisim_level, "Similarity level d in (0,1]")->capture_default_str();

    SegmentFlags seg_flags;
    auto* seg = app.add_subcommand("segment", "Segment a binary PPM image with seed-sample neurons");
    seg->add_option("image", seg_flags.image, "Input P6 image (maxval 255)")->required();
    add_kernel_flags(seg, seg_flags.kernel);
    seg->add_option("--threshold", seg_flags.threshold, "Firing threshold T (default 0.8, 0.75 for coincidence)");
    seg->add_option("--window", seg_flags.window, "Window radius w")->capture_default_str();
    seg->add_option("--samples", seg_flags.samples_path, "Text file of 'x y' lines");
    seg->add_option("--sample", seg_flags.samples, "Seed pixel X,Y (repeatable)");
    seg->add_option("--threads", seg_flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
    seg->add_option("--out", seg_flags.out, "Mask P5 output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (kernel->parsed()) {
            const SimilarityParams p = params_from(kernel_flags, kernel_flags.method);
            const FeatureVector x(parse_list(vectors[0], "X"));
            const FeatureVector y(parse_list(vectors[1], "Y"));
            out << format_number(similarity(x, y, p)) << '\n';
            return kOk;
        }
        if (bench->parsed()) return run_bench(bench_flags, out);
        if (map->parsed()) return run_map(map_flags, out);
        if (equisim->parsed()) {
            const auto ex = equisimilarity_extents(FeatureVector(parse_list(equisim_ref, "--ref")), equisim_level);
            out << "c,e,level\n"
                << format_number(ex.c) << ',' << format_number(ex.e) << ',' << format_number(ex.level) << '\n';
            return kOk;
        }
        if (seg->parsed()) return run_segment(seg_flags, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.is_io()) return kIo;
        if (e.kind() == ErrorKind::InvalidArgument) return kUsage;
        return kDomain;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kUsage;
}

}  // namespace msim::cli
