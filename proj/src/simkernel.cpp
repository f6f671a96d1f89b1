#include "msim/simkernel.hpp"

#include "msim/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace msim {

namespace {

void check_finite(std::span<const double> v) {
    if (v.empty()) {
        throw Error(ErrorKind::InvalidArgument, "feature vector must not be empty");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw Error(ErrorKind::InvalidArgument,
                        "feature vector element " + std::to_string(i) + " is not finite");
        }
    }
}

void check_lengths(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorKind::LengthMismatch, "vector lengths differ: " +
                                                   std::to_string(x.size()) + " vs " +
                                                   std::to_string(y.size()));
    }
}

[[noreturn]] void null_comparison(const char* what) {
    throw Error(ErrorKind::NullComparison, std::string(what) + " is undefined for null vectors");
}

struct PairSums {
    double same = 0.0;      // min(|x_i|,|y_i|) over same-sign pairs
    double opposite = 0.0;  // min(|x_i|,|y_i|) over opposite-sign pairs
    double max_sum = 0.0;   // max(|x_i|,|y_i|)
};

PairSums pair_sums(std::span<const double> x, std::span<const double> y) noexcept {
    PairSums s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ax = std::abs(x[i]);
        const double ay = std::abs(y[i]);
        const double lo = std::min(ax, ay);
        if (sign0(x[i]) == sign0(y[i])) {
            s.same += lo;
        } else {
            s.opposite += lo;
        }
        s.max_sum += std::max(ax, ay);
    }
    return s;
}

double jaccard_from_sums(const PairSums& s, double alpha, AlphaScaling scaling) noexcept {
    if (alpha == 0.5 && scaling == AlphaScaling::Doubled) {
        return (s.same - s.opposite) / s.max_sum;
    }
    const double weighted = alpha * s.same - (1.0 - alpha) * s.opposite;
    const double factor = scaling == AlphaScaling::Doubled ? 2.0 : 1.0;
    return factor * weighted / s.max_sum;
}

double interiority_unchecked(std::span<const double> x, std::span<const double> y) {
    double overlap = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ax = std::abs(x[i]);
        const double ay = std::abs(y[i]);
        overlap += std::min(ax, ay);
        sx += ax;
        sy += ay;
    }
    const double den = std::max(sx, sy);
    if (!(den > 0.0)) null_comparison("interiority");
    return overlap / den;
}

double sum_sq(std::span<const double> v) noexcept {
    double s = 0.0;
    for (double e : v) s += e * e;
    return s;
}

}  // namespace

FeatureVector::FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    check_finite(values_);
}

FeatureVector::FeatureVector(std::initializer_list<double> values)
    : FeatureVector(std::vector<double>(values)) {}

bool FeatureVector::is_all_zero() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

void SimilarityParams::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0) {
        throw Error(ErrorKind::DomainError, "alpha must lie in [0, 1]");
    }
    if (!std::isfinite(d_power) || d_power < 0.0) {
        throw Error(ErrorKind::DomainError, "d_power must be a finite value >= 0");
    }
}

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::CrossCorrelation: return "crosscorr";
        case Method::Interiority: return "interiority";
        case Method::RealJaccard: return "jaccard";
        case Method::Coincidence: return "coincidence";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (Method m : {Method::CrossCorrelation, Method::Interiority, Method::RealJaccard,
                     Method::Coincidence}) {
        if (name == method_name(m)) return m;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::string_view alpha_scaling_name(AlphaScaling s) noexcept {
    return s == AlphaScaling::Doubled ? "doubled" : "plain";
}

AlphaScaling parse_alpha_scaling(std::string_view name) {
    if (name == "doubled") return AlphaScaling::Doubled;
    if (name == "plain") return AlphaScaling::Plain;
    throw Error(ErrorKind::InvalidArgument, "unknown alpha scaling '" + std::string(name) + "'");
}

std::string params_label(const SimilarityParams& p) {
    std::string label(method_name(p.method));
    char buf[64];
    if (p.d_power != 1.0) {
        std::snprintf(buf, sizeof buf, ":D=%g", p.d_power);
        label += buf;
    }
    if (p.alpha != 0.5 || p.alpha_scaling != AlphaScaling::Doubled) {
        std::snprintf(buf, sizeof buf, ":alpha=%g", p.alpha);
        label += buf;
        label += ':';
        label += alpha_scaling_name(p.alpha_scaling);
    }
    return label;
}

double smin(double x, double y) noexcept {
    return sign0(x) * sign0(y) * std::min(std::abs(x), std::abs(y));
}

double power_sharpen(double s, double d_power) noexcept {
    if (d_power == 1.0) return s;
    return sign0(s) * std::pow(std::abs(s), d_power);
}

double scalar_jaccard(double x, double y, double d_power) {
    const double den = std::max(std::abs(x), std::abs(y));
    if (den == 0.0) null_comparison("scalar Jaccard");
    return power_sharpen(smin(x, y) / den, d_power);
}

double signed_kronecker(double x, double y) noexcept {
    if (x == y) return 1.0;
    if (x == -y) return -1.0;
    return 0.0;
}

double vector_jaccard_raw(std::span<const double> x, std::span<const double> y, double alpha,
                          AlphaScaling scaling) {
    check_lengths(x, y);
    const PairSums s = pair_sums(x, y);
    if (!(s.max_sum > 0.0)) null_comparison("Jaccard");
    return jaccard_from_sums(s, alpha, scaling);
}

double vector_jaccard_raw(const FeatureVector& x, const FeatureVector& y, double alpha,
                          AlphaScaling scaling) {
    return vector_jaccard_raw(x.values(), y.values(), alpha, scaling);
}

double vector_jaccard(const FeatureVector& x, const FeatureVector& y, const SimilarityParams& p) {
    return power_sharpen(vector_jaccard_raw(x, y, p.alpha, p.alpha_scaling), p.d_power);
}

double interiority(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    return interiority_unchecked(x, y);
}

double interiority(const FeatureVector& x, const FeatureVector& y) {
    return interiority(x.values(), y.values());
}

double coincidence(const FeatureVector& x, const FeatureVector& y, const SimilarityParams& p) {
    const double j = vector_jaccard_raw(x, y, p.alpha, p.alpha_scaling);
    return power_sharpen(j * interiority(x, y), p.d_power);
}

double cosine(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * y[i];
    const double xx = sum_sq(x);
    const double yy = sum_sq(y);
    if (xx == 0.0 || yy == 0.0) null_comparison("cosine similarity");
    // One square root keeps cos(v, v) exactly 1; split it only if the product overflows.
    const double prod = xx * yy;
    const double norm = std::isfinite(prod) ? std::sqrt(prod) : std::sqrt(xx) * std::sqrt(yy);
    return std::clamp(dot / norm, -1.0, 1.0);
}

double cosine(const FeatureVector& x, const FeatureVector& y) {
    return cosine(x.values(), y.values());
}

double normalized_euclidean(std::span<const double> x, std::span<const double> y) {
    check_lengths(x, y);
    double diff = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        diff += d * d;
    }
    const double den = std::sqrt(sum_sq(x)) + std::sqrt(sum_sq(y));
    if (den == 0.0) null_comparison("normalized Euclidean distance");
    return 2.0 * std::sqrt(diff) / den;
}

double normalized_euclidean(const FeatureVector& x, const FeatureVector& y) {
    return normalized_euclidean(x.values(), y.values());
}

double similarity(std::span<const double> x, std::span<const double> y,
                  const SimilarityParams& p) {
    switch (p.method) {
        case Method::CrossCorrelation:
            return power_sharpen(cosine(x, y), p.d_power);
        case Method::Interiority:
            return power_sharpen(interiority(x, y), p.d_power);
        case Method::RealJaccard:
            return power_sharpen(vector_jaccard_raw(x, y, p.alpha, p.alpha_scaling), p.d_power);
        case Method::Coincidence: {
            check_lengths(x, y);
            const PairSums s = pair_sums(x, y);
            if (!(s.max_sum > 0.0)) null_comparison("coincidence");
            const double j = jaccard_from_sums(s, p.alpha, p.alpha_scaling);
            return power_sharpen(j * interiority_unchecked(x, y), p.d_power);
        }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown similarity method");
}

double similarity(const FeatureVector& x, const FeatureVector& y, const SimilarityParams& p) {
    return similarity(x.values(), y.values(), p);
}

}  // namespace msim
