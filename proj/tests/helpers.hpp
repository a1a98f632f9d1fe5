// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lttp/image.hpp"

namespace testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

/// Random image with intensities in [lo, hi].
inline lttp::GrayImage random_image(int width, int height, int lo, int hi,
                                    std::mt19937_64& rng) {
    lttp::GrayImage img;
    img.width = width;
    img.height = height;
    img.data.resize(static_cast<std::size_t>(width) * height);
    std::uniform_int_distribution<int> dist(lo, hi);
    for (auto& px : img.data) px = static_cast<std::uint8_t>(dist(rng));
    return img;
}

inline std::array<std::uint8_t, 9> random_window(int lo, int hi, std::mt19937_64& rng) {
    std::array<std::uint8_t, 9> w{};
    std::uniform_int_distribution<int> dist(lo, hi);
    for (auto& px : w) px = static_cast<std::uint8_t>(dist(rng));
    return w;
}

/// Strictly increasing lookup table over domain [0, domain_max], codomain
/// within [0, 255]: domain_max+1 distinct ascending values sampled from
/// 0..255. Strict monotonicity preserves the sign of every pairwise
/// difference of in-domain intensities.
inline std::vector<std::uint8_t> strictly_increasing_lut(int domain_max,
                                                         std::mt19937_64& rng) {
    std::vector<std::uint8_t> pool(256);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(domain_max) + 1);
    std::sort(pool.begin(), pool.end());
    return pool;  // lut[v] for v in [0, domain_max]
}

/// Shift table g(x) = x + c over [0, domain_max]; saturation-free as long
/// as domain_max + c <= 255. Shifts preserve differences exactly, so they
/// also preserve thresholded comparisons (the LTP dead zone).
inline std::vector<std::uint8_t> shift_lut(int domain_max, int c) {
    std::vector<std::uint8_t> lut(static_cast<std::size_t>(domain_max) + 1);
    for (int v = 0; v <= domain_max; ++v) lut[v] = static_cast<std::uint8_t>(v + c);
    return lut;
}

inline lttp::GrayImage apply_lut(const lttp::GrayImage& img,
                                 const std::vector<std::uint8_t>& lut) {
    lttp::GrayImage out = img;
    for (auto& px : out.data) px = lut[px];
    return out;
}

/// Scoped temporary directory under the system temp root.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0;; ++i) {
            path_ = base / (tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(i));
            if (std::filesystem::create_directory(path_)) break;
        }
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

// --- independent micro-oracles ---------------------------------------------
// Hand-written straight from the traversal definitions, structurally
// unrelated to the library's tables or kernels. Used to pin small cases.

inline int sign_bit(int parent, int child) { return parent - child >= 0 ? 1 : 0; }

/// window row-major: w[0..8] = NW N NE W C E SW S SE.
/// Tree: A=C(enter), B=NW, C=N, D=NE, E=W, F=E, G=SW, H=S, I=SE.
inline std::uint8_t lttp_code_oracle(const std::array<std::uint8_t, 9>& w,
                                     const std::string& variant) {
    const int A = w[4], B = w[0], C = w[1], D = w[2], E = w[3], F = w[5],
              G = w[6], H = w[7], I = w[8];
    const int AB = sign_bit(A, B), BE = sign_bit(B, E), AC = sign_bit(A, C),
              CF = sign_bit(C, F), CG = sign_bit(C, G), CH = sign_bit(C, H),
              AD = sign_bit(A, D), DI = sign_bit(D, I);
    std::array<int, 8> seq{};
    if (variant == "ld") seq = {AB, BE, AC, CF, CG, CH, AD, DI};
    else if (variant == "lb") seq = {AB, AC, AD, BE, CF, CG, CH, DI};
    else if (variant == "rd") seq = {AD, DI, AC, CH, CG, CF, AB, BE};
    else if (variant == "rb") seq = {AD, AC, AB, DI, CH, CG, CF, BE};
    else std::abort();
    int code = 0;
    for (int b : seq) code = code * 2 + b;
    return static_cast<std::uint8_t>(code);
}

inline std::uint8_t lbp_code_oracle(const std::array<std::uint8_t, 9>& w) {
    const int c = w[4];
    const std::array<int, 8> neighbors{w[0], w[1], w[2], w[3], w[5], w[6], w[7], w[8]};
    int code = 0;
    for (int n : neighbors) code = code * 2 + (n >= c ? 1 : 0);
    return static_cast<std::uint8_t>(code);
}

/// Ternary LTP codes (upper, lower) for one window: value +1 when
/// n >= c + t, -1 when n <= c - t (and not +1), else 0.
inline std::pair<std::uint8_t, std::uint8_t> ltp_codes_oracle(
    const std::array<std::uint8_t, 9>& w, int t) {
    const int c = w[4];
    const std::array<int, 8> neighbors{w[0], w[1], w[2], w[3], w[5], w[6], w[7], w[8]};
    int upper = 0, lower = 0;
    for (int n : neighbors) {
        int v = 0;
        if (n >= c + t) v = 1;
        else if (n <= c - t) v = -1;
        upper = upper * 2 + (v == 1 ? 1 : 0);
        lower = lower * 2 + (v == -1 ? 1 : 0);
    }
    return {static_cast<std::uint8_t>(upper), static_cast<std::uint8_t>(lower)};
}

/// LGS directed edges over X=center, NW, SW, E, NE, SE; MSB-first in visit
/// order: X->NW, NW->SW, SW->X, X->E, E->NE, NE->SE, SE->E, E->X.
inline std::uint8_t lgs_code_oracle(const std::array<std::uint8_t, 9>& w) {
    const int X = w[4], NW = w[0], SW = w[6], E = w[5], NE = w[2], SE = w[8];
    const std::array<int, 8> seq{
        sign_bit(X, NW), sign_bit(NW, SW), sign_bit(SW, X), sign_bit(X, E),
        sign_bit(E, NE), sign_bit(NE, SE), sign_bit(SE, E), sign_bit(E, X)};
    int code = 0;
    for (int b : seq) code = code * 2 + b;
    return static_cast<std::uint8_t>(code);
}

inline std::array<std::uint8_t, 9> window_at(const lttp::GrayImage& img, int r, int c) {
    return {img.at(r - 1, c - 1), img.at(r - 1, c), img.at(r - 1, c + 1),
            img.at(r, c - 1),     img.at(r, c),     img.at(r, c + 1),
            img.at(r + 1, c - 1), img.at(r + 1, c), img.at(r + 1, c + 1)};
}

} // namespace testutil
