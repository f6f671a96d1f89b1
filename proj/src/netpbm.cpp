#include "msim/netpbm.hpp"

#include "msim/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace msim {

ColorImage::ColorImage(std::size_t width, std::size_t height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width == 0 || height == 0) {
        throw Error(ErrorKind::InvalidArgument, "image dimensions must be positive");
    }
    if (pixels_.size() != width * height) {
        throw Error(ErrorKind::DimensionError, "pixel count does not match image dimensions");
    }
    for (const Rgb& p : pixels_) {
        for (double c : p) {
            if (!(c >= 0.0 && c <= 1.0)) {
                throw Error(ErrorKind::InvalidArgument, "image channel outside [0, 1]");
            }
        }
    }
}

std::size_t Mask::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool Mask::subset_of(const Mask& other) const noexcept {
    if (width_ != other.width_ || height_ != other.height_) return false;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

namespace {

struct Header {
    std::string magic;
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned maxval = 0;
};

void skip_space_and_comments(std::istream& in) {
    for (;;) {
        const int c = in.peek();
        if (c == '#') {
            std::string discard;
            std::getline(in, discard);
        } else if (c != EOF && std::isspace(c)) {
            in.get();
        } else {
            return;
        }
    }
}

std::size_t read_header_number(std::istream& in, const char* field) {
    skip_space_and_comments(in);
    std::size_t value = 0;
    bool any = false;
    while (std::isdigit(in.peek())) {
        value = value * 10 + static_cast<std::size_t>(in.get() - '0');
        any = true;
        if (value > (1u << 30)) break;
    }
    if (!any) {
        throw Error(ErrorKind::MalformedInput, std::string("malformed Netpbm header: bad ") + field);
    }
    return value;
}

Header read_header(std::istream& in, const char* expected) {
    Header h;
    char m[2] = {0, 0};
    if (!in.read(m, 2)) throw Error(ErrorKind::MalformedInput, "missing Netpbm magic number");
    h.magic.assign(m, 2);
    if (h.magic[0] != 'P') throw Error(ErrorKind::MalformedInput, "not a Netpbm file");
    if (h.magic != expected) {
        throw Error(ErrorKind::UnsupportedFormat,
                    "unsupported Netpbm variant " + h.magic + " (expected " + expected + ")");
    }
    h.width = read_header_number(in, "width");
    h.height = read_header_number(in, "height");
    const std::size_t maxval = read_header_number(in, "maxval");
    if (h.width == 0 || h.height == 0) {
        throw Error(ErrorKind::MalformedInput, "Netpbm image has zero dimension");
    }
    if (maxval != 255) {
        throw Error(ErrorKind::UnsupportedFormat,
                    "unsupported maxval " + std::to_string(maxval) + " (only 255)");
    }
    h.maxval = 255;
    // Exactly one whitespace byte separates the header from the raster.
    if (!std::isspace(in.get())) {
        throw Error(ErrorKind::MalformedInput, "missing whitespace after Netpbm header");
    }
    return h;
}

std::vector<unsigned char> read_payload(std::istream& in, std::size_t n) {
    std::vector<unsigned char> buf(n);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
        throw Error(ErrorKind::MalformedInput, "truncated Netpbm payload: expected " +
                                                   std::to_string(n) + " bytes, got " +
                                                   std::to_string(in.gcount()));
    }
    return buf;
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ostream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "write failed for '" + path.string() + "'");
}

template <class F>
auto with_path(const std::filesystem::path& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

unsigned char to_byte(double c) {
    return static_cast<unsigned char>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
}

}  // namespace

ColorImage read_ppm(std::istream& in) {
    const Header h = read_header(in, "P6");
    const auto bytes = read_payload(in, h.width * h.height * 3);
    std::vector<Rgb> pixels(h.width * h.height);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) pixels[i][c] = bytes[3 * i + c] / 255.0;
    }
    return ColorImage(h.width, h.height, std::move(pixels));
}

ColorImage read_ppm(const std::filesystem::path& path) {
    auto in = open_in(path);
    return with_path(path, [&] { return read_ppm(in); });
}

void write_ppm(const ColorImage& img, std::ostream& out) {
    out << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
    std::vector<unsigned char> bytes;
    bytes.reserve(img.pixels().size() * 3);
    for (const Rgb& p : img.pixels()) {
        for (double c : p) bytes.push_back(to_byte(c));
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_ppm(const ColorImage& img, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_ppm(img, out);
    finish(out, path);
}

void write_pgm(const Mask& mask, std::ostream& out) {
    out << "P5\n" << mask.width() << ' ' << mask.height() << "\n255\n";
    std::vector<unsigned char> bytes(mask.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = mask[i] ? 255 : 0;
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_pgm(const Mask& mask, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_pgm(mask, out);
    finish(out, path);
}

Mask read_pgm_mask(std::istream& in) {
    const Header h = read_header(in, "P5");
    const auto bytes = read_payload(in, h.width * h.height);
    Mask m(h.width, h.height);
    for (std::size_t i = 0; i < bytes.size(); ++i) m.set(i % h.width, i / h.width, bytes[i] != 0);
    return m;
}

Mask read_pgm_mask(const std::filesystem::path& path) {
    auto in = open_in(path);
    return with_path(path, [&] { return read_pgm_mask(in); });
}

void write_pgm(const Raster& raster, std::ostream& out) {
    const auto v = raster.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double range = *hi - *lo;
    out << "P5\n" << raster.width() << ' ' << raster.height() << "\n255\n";
    std::vector<unsigned char> bytes(v.size(), 0);
    if (range > 0.0) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            bytes[i] = static_cast<unsigned char>(std::lround(255.0 * (v[i] - *lo) / range));
        }
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_pgm(const Raster& raster, const std::filesystem::path& path) {
    auto out = open_out(path);
    write_pgm(raster, out);
    finish(out, path);
}

}  // namespace msim
