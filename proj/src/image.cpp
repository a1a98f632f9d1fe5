// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/image.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "lttp/error.hpp"

namespace lttp {

GrayImage make_image(int width, int height, std::uint8_t fill) {
    if (width <= 0 || height <= 0)
        throw ValidationError("image dimensions must be positive");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.data.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

void require_valid(const GrayImage& img, int min_side) {
    if (img.width <= 0 || img.height <= 0)
        throw ValidationError("image dimensions must be positive");
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height)
        throw ValidationError("image data length does not match dimensions");
    if (img.width < min_side || img.height < min_side)
        throw ValidationError("image smaller than " + std::to_string(min_side) + "x" +
                              std::to_string(min_side));
}

namespace {

// netpbm token scanner: skips whitespace and '#' comments to end of line.
class PnmScanner {
public:
    explicit PnmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    int next_int(const char* what) {
        skip_separators();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_]))
            throw IoError(std::string("netpbm: missing ") + what);
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_] - '0');
            if (v > std::numeric_limits<int>::max())
                throw IoError(std::string("netpbm: oversized ") + what);
            ++pos_;
        }
        return static_cast<int>(v);
    }

    // after the maxval, exactly one whitespace byte precedes binary data
    std::span<const std::uint8_t> binary_rest() {
        if (pos_ >= bytes_.size()) throw IoError("netpbm: truncated header");
        ++pos_;  // the single separator byte
        return bytes_.subspan(pos_);
    }

private:
    void skip_separators() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

GrayImage decode_p5(PnmScanner& scan) {
    GrayImage img;
    img.width = scan.next_int("width");
    img.height = scan.next_int("height");
    const int maxval = scan.next_int("maxval");
    if (img.width <= 0 || img.height <= 0) throw IoError("netpbm: non-positive dimensions");
    if (maxval != 255) throw IoError("netpbm: maxval != 255");
    auto rest = scan.binary_rest();
    const std::size_t need = static_cast<std::size_t>(img.width) * img.height;
    if (rest.size() < need) throw IoError("netpbm: truncated pixel data");
    img.data.assign(rest.begin(), rest.begin() + need);
    return img;
}

GrayImage decode_p2(PnmScanner& scan) {
    GrayImage img;
    img.width = scan.next_int("width");
    img.height = scan.next_int("height");
    const int maxval = scan.next_int("maxval");
    if (img.width <= 0 || img.height <= 0) throw IoError("netpbm: non-positive dimensions");
    if (maxval != 255) throw IoError("netpbm: maxval != 255");
    const std::size_t need = static_cast<std::size_t>(img.width) * img.height;
    img.data.reserve(need);
    for (std::size_t i = 0; i < need; ++i) {
        const int v = scan.next_int("sample");
        if (v > 255) throw IoError("netpbm: sample exceeds maxval");
        img.data.push_back(static_cast<std::uint8_t>(v));
    }
    return img;
}

} // namespace

GrayImage decode_netpbm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') throw IoError("unsupported image format");
    const char kind = static_cast<char>(bytes[1]);
    PnmScanner scan(bytes.subspan(2));
    switch (kind) {
        case '5': return decode_p5(scan);
        case '2': return decode_p2(scan);
        case '3':
        case '6': throw IoError("channel count != 1");
        default: throw IoError("unsupported image format");
    }
}

std::vector<std::uint8_t> encode_pgm(const GrayImage& img) {
    require_valid(img);
    char header[64];
    const int n = std::snprintf(header, sizeof header, "P5\n%d %d\n255\n", img.width, img.height);
    std::vector<std::uint8_t> out(header, header + n);
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

std::vector<std::uint8_t> encode_pgm_ascii(const GrayImage& img) {
    require_valid(img);
    std::ostringstream out;
    out << "P2\n" << img.width << ' ' << img.height << "\n255\n";
    for (int r = 0; r < img.height; ++r) {
        for (int c = 0; c < img.width; ++c) {
            out << int(img.at(r, c)) << (c + 1 == img.width ? '\n' : ' ');
        }
    }
    const std::string s = out.str();
    return {s.begin(), s.end()};
}

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

GrayImage load_raw_with_sidecar(const std::filesystem::path& path,
                                const std::vector<std::uint8_t>& bytes) {
    const auto sidecar = std::filesystem::path(path.string() + ".dim");
    std::ifstream dims(sidecar);
    if (!dims) throw IoError("unsupported image format (no netpbm magic, no sidecar " +
                             sidecar.string() + ")");
    int width = 0, height = 0;
    dims >> width >> height;
    if (!dims || width <= 0 || height <= 0)
        throw IoError("malformed sidecar (expected \"<width> <height>\"): " + sidecar.string());
    const std::size_t need = static_cast<std::size_t>(width) * height;
    if (bytes.size() != need)
        throw IoError("raw image size mismatch: " + path.string() + " holds " +
                      std::to_string(bytes.size()) + " bytes, sidecar implies " +
                      std::to_string(need));
    GrayImage img;
    img.width = width;
    img.height = height;
    img.data = bytes;
    return img;
}

} // namespace

GrayImage load_gray_image(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    if (bytes.size() >= 2 && bytes[0] == 'P') {
        const char kind = static_cast<char>(bytes[1]);
        if (kind == '2' || kind == '3' || kind == '5' || kind == '6' || kind == '1' ||
            kind == '4' || kind == '7') {
            try {
                return decode_netpbm(bytes);
            } catch (const IoError& e) {
                throw IoError(path.string() + ": " + e.what());
            }
        }
    }
    return load_raw_with_sidecar(path, bytes);
}

void save_pgm(const GrayImage& img, const std::filesystem::path& path) {
    const auto bytes = encode_pgm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

BlockGrid partition_blocks(const GrayImage& img) {
    require_valid(img, 3);
    BlockGrid grid;
    grid.block_rows = img.height / BlockGrid::kBlockSize;
    grid.block_cols = img.width / BlockGrid::kBlockSize;
    grid.blocks.reserve(static_cast<std::size_t>(grid.block_rows) * grid.block_cols);
    for (int br = 0; br < grid.block_rows; ++br)
        for (int bc = 0; bc < grid.block_cols; ++bc)
            grid.blocks.push_back({br * BlockGrid::kBlockSize, bc * BlockGrid::kBlockSize});
    return grid;
}

} // namespace lttp
