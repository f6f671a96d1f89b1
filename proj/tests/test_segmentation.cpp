#include "msim/error.hpp"
#include "msim/netpbm.hpp"
#include "msim/segmentation.hpp"
#include "synthetic.hpp"

#include <doctest.h>

#include <sstream>

using namespace msim;

namespace {

SimilarityParams method(Method m) {
    SimilarityParams p;
    p.method = m;
    return p;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected msim::Error");
    return ErrorKind::IoError;
}

ColorImage gradient(std::size_t w, std::size_t h) {
    std::vector<Rgb> px(w * h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            px[y * w + x] = {x / double(w), y / double(h), (x + y) % 7 / 7.0};
        }
    }
    return ColorImage(w, h, std::move(px));
}

}  // namespace

TEST_CASE("read_ppm") {
    std::istringstream in(std::string("P6\n# comment\n2 1\n255\n") + std::string("\xff\x00\x00\x00\x00\xff", 6));
    const ColorImage img = read_ppm(in);
    CHECK(img.width() == 2);
    CHECK(img.height() == 1);
    CHECK(img.at(0, 0) == Rgb{1, 0, 0});
    CHECK(img.at(1, 0) == Rgb{0, 0, 1});

    std::istringstream ascii("P3\n1 1\n255\n0 0 0\n");
    CHECK(kind_of([&] { read_ppm(ascii); }) == ErrorKind::UnsupportedFormat);
    std::istringstream deep("P6\n1 1\n65535\n");
    CHECK(kind_of([&] { read_ppm(deep); }) == ErrorKind::UnsupportedFormat);
    std::istringstream truncated(std::string("P6\n2 2\n255\n") + std::string(5, 'a'));
    CHECK(kind_of([&] { read_ppm(truncated); }) == ErrorKind::MalformedInput);
    std::istringstream garbage("P6\nxx 2\n255\n");
    CHECK(kind_of([&] { read_ppm(garbage); }) == ErrorKind::MalformedInput);
    CHECK(kind_of([] { read_ppm(std::filesystem::path("/nonexistent/file.ppm")); }) == ErrorKind::IoError);
}

TEST_CASE("PPM and mask round trips") {
    const ColorImage img = gradient(13, 9);
    std::stringstream buf;
    write_ppm(img, buf);
    const ColorImage back = read_ppm(buf);
    REQUIRE(back.width() == 13);
    for (std::size_t i = 0; i < img.pixels().size(); ++i) {
        for (int c = 0; c < 3; ++c) CHECK(std::abs(back.pixels()[i][c] - img.pixels()[i][c]) <= 0.5 / 255 + 1e-12);
    }

    Mask m(7, 5);
    for (std::size_t i = 0; i < 35; i += 3) m.set(i % 7, i / 7, true);
    std::stringstream mbuf;
    write_pgm(m, mbuf);
    CHECK(read_pgm_mask(mbuf) == m);
}

TEST_CASE("extract_template") {
    const ColorImage img = gradient(10, 8);
    const FeatureVector t0 = extract_template(img, {4, 3, 0});
    REQUIRE(t0.size() == 3);
    CHECK(t0[0] == img.at(4, 3)[0]);
    CHECK(t0[2] == img.at(4, 3)[2]);

    const FeatureVector t1 = extract_template(img, {4, 3, 1});
    REQUIRE(t1.size() == 27);
    // Window row-major, RGB interleaved: element 0 is (3,2).R, element 5*3+1 is (5,3).G
    CHECK(t1[0] == img.at(3, 2)[0]);
    CHECK(t1[5 * 3 + 1] == img.at(5, 3)[1]);

    const FeatureVector corner = extract_template(img, {0, 0, 1});
    REQUIRE(corner.size() == 27);
    for (int c = 0; c < 3; ++c) {
        CHECK(corner[c] == img.at(0, 0)[c]);          // (-1,-1) clamps to (0,0)
        CHECK(corner[4 * 3 + c] == img.at(0, 0)[c]);  // center
        CHECK(corner[8 * 3 + c] == img.at(1, 1)[c]);
    }
    CHECK(kind_of([&] { extract_template(img, {10, 0, 1}); }) == ErrorKind::OutOfBounds);
}

TEST_CASE("build_segmenter") {
    const ColorImage img = gradient(20, 20);
    const std::vector<SeedSample> five = {{3, 3, 1}, {5, 9, 1}, {12, 2, 1}, {15, 15, 1}, {3, 3, 1}};
    const Segmenter seg = build_segmenter(img, five, method(Method::RealJaccard), 0.8);
    CHECK(seg.neurons().size() == 5);
    CHECK(seg.neurons()[0].templ().values()[0] == seg.neurons()[4].templ().values()[0]);
    CHECK(default_threshold(Method::RealJaccard) == 0.8);
    CHECK(default_threshold(Method::Coincidence) == 0.75);

    CHECK(kind_of([&] { build_segmenter(img, {}, method(Method::RealJaccard), 0.8); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { build_segmenter(img, {{1, 1, 1}, {2, 2, 2}}, method(Method::RealJaccard), 0.8); }) ==
          ErrorKind::InvalidArgument);

    const ColorImage black(4, 4, std::vector<Rgb>(16, Rgb{0, 0, 0}));
    CHECK(kind_of([&] { build_segmenter(black, {{1, 1, 1}}, method(Method::RealJaccard), 0.8); }) ==
          ErrorKind::NullTemplate);
}

TEST_CASE("segment") {
    const auto syn = synthetic::two_regions(32, 24, 14, {0.8, 0.3, 0.2}, {0.2, 0.4, 0.8}, 0.1, 5);
    const std::vector<SeedSample> seeds = {{3, 4, 1}, {8, 18, 1}, {20, 10, 1}};
    const Segmenter jac = build_segmenter(syn.image, seeds, method(Method::RealJaccard), 0.8);
    const Mask m = segment(syn.image, jac);
    for (const auto& s : seeds) CHECK(m.at(s.x, s.y));

    SUBCASE("threshold above the kernel maximum yields an empty mask") {
        const Segmenter strict = build_segmenter(syn.image, seeds, method(Method::RealJaccard), 1.0 + 1e-9);
        CHECK(segment(syn.image, strict).count() == 0);
    }
    SUBCASE("monotone in T") {
        Mask previous = segment(syn.image, build_segmenter(syn.image, seeds, method(Method::RealJaccard), 0.5));
        for (double t : {0.6, 0.7, 0.8, 0.9, 0.95}) {
            const Mask now = segment(syn.image, build_segmenter(syn.image, seeds, method(Method::RealJaccard), t));
            CHECK(now.subset_of(previous));
            previous = now;
        }
    }
    SUBCASE("adding seeds never removes pixels") {
        const Mask one = segment(syn.image, build_segmenter(syn.image, {seeds[0]}, method(Method::RealJaccard), 0.8));
        const Mask two =
            segment(syn.image, build_segmenter(syn.image, {seeds[0], seeds[2]}, method(Method::RealJaccard), 0.8));
        CHECK(one.subset_of(two));
        CHECK(two.subset_of(m));
    }
    SUBCASE("coincidence mask is inside the Jaccard mask") {
        const Mask c = segment(syn.image, build_segmenter(syn.image, seeds, method(Method::Coincidence), 0.8));
        CHECK(c.subset_of(m));
    }
    SUBCASE("schedule independent") {
        CHECK(segment(syn.image, jac, 1) == segment(syn.image, jac, 5));
    }
}

TEST_CASE("all-black windows never fire") {
    std::vector<Rgb> px(25, Rgb{0.5, 0.5, 0.5});
    for (std::size_t y = 0; y < 5; ++y) px[y * 5 + 4] = Rgb{0, 0, 0};
    const ColorImage img(5, 5, px);
    const Segmenter seg = build_segmenter(img, {{1, 1, 0}}, method(Method::RealJaccard), -1.0);
    const Mask m = segment(img, seg);
    CHECK(m.count() == 20);
    CHECK_FALSE(m.at(4, 2));
}

TEST_CASE("seed sample files") {
    std::istringstream in("# seeds\n3 4\n\n  10 2  # trailing\n");
    const auto s = parse_seed_samples(in, 2);
    REQUIRE(s.size() == 2);
    CHECK(s[0].x == 3);
    CHECK(s[0].y == 4);
    CHECK(s[1].x == 10);
    CHECK(s[1].window_radius == 2);

    std::istringstream bad("3\n");
    CHECK(kind_of([&] { parse_seed_samples(bad, 1); }) == ErrorKind::MalformedInput);
    std::istringstream neg("-3 4\n");
    CHECK(kind_of([&] { parse_seed_samples(neg, 1); }) == ErrorKind::MalformedInput);
}
