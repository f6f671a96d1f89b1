#include "msim/error.hpp"
#include "msim/experiments.hpp"
#include "msim/neuron.hpp"

#include <doctest.h>

#include <cmath>

using namespace msim;

namespace {

SimilarityParams method(Method m) {
    SimilarityParams p;
    p.method = m;
    return p;
}

// Extent of fired samples along the row/column through sample (ci, cj).
struct Extent {
    double lo, hi;
};

Extent row_extent(const DecisionRegion& r, std::size_t ci, std::size_t cj) {
    std::size_t lo = ci, hi = ci;
    while (lo > 0 && r.at(lo - 1, cj)) --lo;
    while (hi + 1 < r.grid.nx && r.at(hi + 1, cj)) ++hi;
    return {r.grid.x_at(lo), r.grid.x_at(hi)};
}

Extent column_extent(const DecisionRegion& r, std::size_t ci, std::size_t cj) {
    std::size_t lo = cj, hi = cj;
    while (lo > 0 && r.at(ci, lo - 1)) --lo;
    while (hi + 1 < r.grid.ny && r.at(ci, hi + 1)) ++hi;
    return {r.grid.y_at(lo), r.grid.y_at(hi)};
}

}  // namespace

TEST_CASE("neuron_response and neuron_fire") {
    const MultisetNeuron jac({1, 2}, method(Method::RealJaccard), 0.8);
    CHECK(jac.response(FeatureVector{1, 2}) == 1.0);
    CHECK(jac.response(FeatureVector{-1, -2}) == -1.0);
    CHECK(MultisetNeuron({1, 2}, method(Method::Coincidence), 0.75).response(FeatureVector{2, 2}) == 0.5625);

    CHECK(jac.fire(FeatureVector{1, 2}));
    CHECK_FALSE(jac.fire(FeatureVector{2, 2}));
    CHECK(jac.with_threshold(0.75).fire(FeatureVector{2, 2}));

    CHECK_THROWS_AS(jac.response(FeatureVector{1, 2, 3}), Error);
}

TEST_CASE("neuron construction checks") {
    try {
        MultisetNeuron({0, 0}, method(Method::RealJaccard), 0.5);
        FAIL("all-zero template accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NullTemplate);
    }
    CHECK_THROWS_AS(MultisetNeuron({1, 2}, method(Method::RealJaccard), NAN), Error);
}

TEST_CASE("firing is monotone in the threshold") {
    const MultisetNeuron n({1, 2}, method(Method::Coincidence), 0.0);
    const FeatureVector inputs[] = {{1, 2}, {2, 2}, {0.5, 2.5}, {-1, 2}, {3, 1}};
    for (const auto& in : inputs) {
        bool previous = true;
        for (double t = -1.0; t <= 1.0; t += 0.05) {
            const bool now = n.with_threshold(t).fire(in);
            CHECK((previous || !now));
            previous = now;
        }
    }
}

TEST_CASE("gemini neuron") {
    const MultisetNeuron base({1, 2}, method(Method::RealJaccard), 0.8);
    const GeminiNeuron unit(base);
    for (const FeatureVector& in : {FeatureVector{1, 2}, FeatureVector{2, 2}, FeatureVector{-3, 0.5}}) {
        CHECK(unit.response(in) == base.response(in));
    }
    const GeminiNeuron weighted(base, FeatureVector{2, 1});
    CHECK(weighted.response(FeatureVector{0.5, 2}) == 1.0);

    const GeminiNeuron dead(base, FeatureVector{0, 0});
    // Weighted input is null but the template is not, so Jaccard is 0.
    CHECK(dead.response(FeatureVector{3, 4}) == 0.0);
    const GeminiNeuron dead_cos(MultisetNeuron({1, 2}, method(Method::CrossCorrelation), 0.8),
                                FeatureVector{0, 0});
    try {
        dead_cos.response(FeatureVector{3, 4});
        FAIL("expected NullComparison");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NullComparison);
    }
    CHECK_THROWS_AS(GeminiNeuron(base, FeatureVector{1, 1, 1}), Error);
}

TEST_CASE("decision_region") {
    const Grid2D grid;  // 161x161 over [-4, 4]^2, step 0.05
    CHECK(grid.x_at(100) == 1.0);
    CHECK(grid.y_at(120) == 2.0);

    SUBCASE("T = 1 fires only at the template itself") {
        const GeminiNeuron g(MultisetNeuron({1, 2}, method(Method::RealJaccard), 1.0));
        const auto r = decision_region(g, grid);
        CHECK(r.count() == 1);
        CHECK(r.at(100, 120));
    }
    SUBCASE("T = -1 fires everywhere the kernel is defined") {
        const GeminiNeuron g(MultisetNeuron({1, 2}, method(Method::RealJaccard), -1.0));
        CHECK(decision_region(g, grid).count() == grid.nx * grid.ny);
        const GeminiNeuron c(MultisetNeuron({1, 2}, method(Method::CrossCorrelation), -1.0));
        const auto rc = decision_region(c, grid);
        CHECK(rc.count() == grid.nx * grid.ny - 1);
        CHECK_FALSE(rc.at(80, 80));  // the origin has no cosine
    }
    SUBCASE("T = 0.95 region matches the closed-form extents") {
        const GeminiNeuron g(MultisetNeuron({1, 2}, method(Method::RealJaccard), 0.95));
        const auto r = decision_region(g, grid);
        const auto ex = equisimilarity_extents(FeatureVector{1, 2}, 0.95);
        const Extent row = row_extent(r, 100, 120);
        const Extent col = column_extent(r, 100, 120);
        const double cell = grid.step_x() * (1 + 1e-9);  // boundary can land on a grid node
        CHECK(std::abs(row.hi - (1 + ex.c)) <= cell);
        CHECK(std::abs(row.lo - (1 - ex.e)) <= cell);
        CHECK(std::abs(col.hi - (2 + ex.c)) <= cell);
        CHECK(std::abs(col.lo - (2 - ex.e)) <= cell);
    }
    SUBCASE("regions scale with the template") {
        const Grid2D fine{-1, 7, -1, 7, 161, 161};
        const Grid2D coarse{-2, 14, -2, 14, 161, 161};
        const auto small = decision_region(
            GeminiNeuron(MultisetNeuron({1, 2}, method(Method::RealJaccard), 0.9)), fine);
        const auto big = decision_region(
            GeminiNeuron(MultisetNeuron({2, 4}, method(Method::RealJaccard), 0.9)), coarse);
        CHECK(small.count() > 10);
        CHECK(small.mask == big.mask);
    }
    SUBCASE("thread count does not change the result") {
        const GeminiNeuron g(MultisetNeuron({1, 2}, method(Method::Coincidence), 0.6), FeatureVector{1.5, 0.5});
        CHECK(decision_region(g, grid, 1).mask == decision_region(g, grid, 4).mask);
    }
    SUBCASE("only 2-D templates") {
        const GeminiNeuron g(MultisetNeuron({1, 2, 3}, method(Method::RealJaccard), 0.9));
        try {
            decision_region(g, grid);
            FAIL("expected DimensionError");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DimensionError);
        }
    }
}
