// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace lttp {

/// Row-major 8-bit grayscale image. Immutable by convention once built;
/// every pipeline stage takes it by const reference and never mutates it,
/// so instances are safe to share across worker threads.
struct GrayImage {
    int width = 0;   ///< columns
    int height = 0;  ///< rows
    std::vector<std::uint8_t> data;  ///< size == width * height

    std::uint8_t at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    const std::uint8_t* row(int r) const {
        return data.data() + static_cast<std::size_t>(r) * width;
    }
    std::uint8_t* row(int r) {
        return data.data() + static_cast<std::size_t>(r) * width;
    }
    std::size_t pixel_count() const { return data.size(); }

    bool operator==(const GrayImage&) const = default;
};

/// Build an image filled with a single intensity.
GrayImage make_image(int width, int height, std::uint8_t fill = 0);

/// Throws ValidationError unless width/height/data are consistent and the
/// image is at least `min_side` on both sides.
void require_valid(const GrayImage& img, int min_side = 1);

// --- netpbm grayscale (P2 ASCII, P5 binary; maxval must be 255) ---------

/// Decode a P2/P5 grayscale netpbm buffer. Color magics (P3/P6) are
/// rejected with "channel count != 1"; anything else unsupported.
GrayImage decode_netpbm(std::span<const std::uint8_t> bytes);

/// Encode as binary PGM (P5, maxval 255). decode(encode(img)) == img for
/// every 8-bit image.
std::vector<std::uint8_t> encode_pgm(const GrayImage& img);

/// Encode as ASCII PGM (P2, maxval 255).
std::vector<std::uint8_t> encode_pgm_ascii(const GrayImage& img);

// --- file loading --------------------------------------------------------

/// Load a grayscale image from disk. Supported: P2/P5 netpbm, or headerless
/// 8-bit single-channel raw accompanied by a "<path>.dim" sidecar holding
/// "<width> <height>". Multi-channel and non-255-maxval inputs are errors,
/// never converted.
GrayImage load_gray_image(const std::filesystem::path& path);

/// Write a binary PGM to disk.
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

// --- 3x3 block partition --------------------------------------------------

/// One 3x3 window origin (top-left pixel) inside the source image.
struct BlockOrigin {
    int row = 0;
    int col = 0;
    bool operator==(const BlockOrigin&) const = default;
};

/// Non-overlapping 3x3 tiling in row-major order. Trailing rows/columns
/// that do not fill a whole block are discarded.
struct BlockGrid {
    static constexpr int kBlockSize = 3;
    int block_rows = 0;  ///< floor(height / 3)
    int block_cols = 0;  ///< floor(width / 3)
    std::vector<BlockOrigin> blocks;  ///< row-major, size block_rows * block_cols
};

/// Partition into the block grid. Throws ValidationError if the image is
/// smaller than 3x3.
BlockGrid partition_blocks(const GrayImage& img);

} // namespace lttp
