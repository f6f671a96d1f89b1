#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace msim {

/// Real-valued multiset representative: a finite, non-empty list of finite reals.
class FeatureVector {
public:
    FeatureVector() = default;
    explicit FeatureVector(std::vector<double> values);
    FeatureVector(std::initializer_list<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    bool is_all_zero() const noexcept;

private:
    std::vector<double> values_;
};

enum class Method { CrossCorrelation, Interiority, RealJaccard, Coincidence };

/// How the sign-asymmetry weight alpha enters the Jaccard numerator.
///   Doubled: 2(alpha*P - (1-alpha)*N) / den, identical to the plain kernel at alpha = 0.5.
///   Plain:   (alpha*P - (1-alpha)*N) / den, half the plain kernel at alpha = 0.5.
enum class AlphaScaling { Doubled, Plain };

struct SimilarityParams {
    Method method = Method::RealJaccard;
    double d_power = 1.0;
    double alpha = 0.5;
    AlphaScaling alpha_scaling = AlphaScaling::Doubled;

    /// Throws DomainError unless 0 <= alpha <= 1 and d_power >= 0 (both finite).
    void validate() const;
};

std::string_view method_name(Method m) noexcept;
/// Accepts crosscorr|interiority|jaccard|coincidence.
Method parse_method(std::string_view name);
std::string_view alpha_scaling_name(AlphaScaling s) noexcept;
AlphaScaling parse_alpha_scaling(std::string_view name);

/// Short label for tables: method name plus any non-default parameter.
std::string params_label(const SimilarityParams& p);

// Scalar operations.

/// +1 for x >= 0, -1 otherwise.
constexpr double sign0(double x) noexcept { return x >= 0.0 ? 1.0 : -1.0; }

/// Signed minimum x ⊓ y = s_x s_y min(|x|, |y|).
double smin(double x, double y) noexcept;

/// sign0(s) |s|^d; odd integer d gives s^d.
double power_sharpen(double s, double d_power) noexcept;

/// Real-valued Jaccard of two scalars, sharpened by d_power.
double scalar_jaccard(double x, double y, double d_power = 1.0);

/// 1 for x = y, -1 for x = -y (x != 0), 0 otherwise.
double signed_kronecker(double x, double y) noexcept;

// Vector kernels. Accumulation is index-ascending in double precision.

/// Signed Jaccard over pairs; see AlphaScaling for the alpha-weighted form.
double vector_jaccard(const FeatureVector& x, const FeatureVector& y,
                      const SimilarityParams& p = {});
/// Jaccard before power_sharpen is applied.
double vector_jaccard_raw(const FeatureVector& x, const FeatureVector& y,
                          double alpha = 0.5, AlphaScaling scaling = AlphaScaling::Doubled);
double interiority(const FeatureVector& x, const FeatureVector& y);
/// power_sharpen(J_raw * I, d_power); the exponent is applied once to the product.
double coincidence(const FeatureVector& x, const FeatureVector& y,
                   const SimilarityParams& p = {});
/// Normalized inner product; this is the cross-correlation baseline.
double cosine(const FeatureVector& x, const FeatureVector& y);
/// 2 ||x - y|| / (||x|| + ||y||).
double normalized_euclidean(const FeatureVector& x, const FeatureVector& y);

/// Dispatches on p.method. Interiority and cross-correlation are also sharpened by d_power.
double similarity(const FeatureVector& x, const FeatureVector& y, const SimilarityParams& p);

// Span overloads for callers that already hold contiguous data (rasters, windows).
// They skip the finiteness scan that FeatureVector construction performs.
double similarity(std::span<const double> x, std::span<const double> y,
                  const SimilarityParams& p);
double vector_jaccard_raw(std::span<const double> x, std::span<const double> y,
                          double alpha = 0.5, AlphaScaling scaling = AlphaScaling::Doubled);
double interiority(std::span<const double> x, std::span<const double> y);
double cosine(std::span<const double> x, std::span<const double> y);
double normalized_euclidean(std::span<const double> x, std::span<const double> y);

}  // namespace msim
