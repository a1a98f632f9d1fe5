// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/reference.hpp"

#include <array>

#include "lttp/error.hpp"

namespace lttp::ref {

namespace {

std::array<std::uint8_t, 9> copy_window(const GrayImage& img, int r, int c) {
    return {img.at(r - 1, c - 1), img.at(r - 1, c), img.at(r - 1, c + 1),
            img.at(r, c - 1),     img.at(r, c),     img.at(r, c + 1),
            img.at(r + 1, c - 1), img.at(r + 1, c), img.at(r + 1, c + 1)};
}

// Apply a per-window code function at every site of the chosen mode.
template <typename CodeFn>
TransformedImage transform_sites(const GrayImage& img, Descriptor desc, Mode mode,
                                 CodeFn&& code_of) {
    require_valid(img, 3);
    TransformedImage ti;
    ti.descriptor = desc;
    ti.mode = mode;
    if (mode == Mode::Dense) {
        ti.codes = make_image(img.width - 2, img.height - 2);
        for (int r = 1; r + 1 < img.height; ++r)
            for (int c = 1; c + 1 < img.width; ++c)
                ti.codes.at(r - 1, c - 1) = code_of(copy_window(img, r, c));
    } else {
        const BlockGrid grid = partition_blocks(img);
        ti.codes = make_image(grid.block_cols, grid.block_rows);
        std::size_t i = 0;
        for (const BlockOrigin& b : grid.blocks)
            ti.codes.data[i++] = code_of(copy_window(img, b.row + 1, b.col + 1));
    }
    return ti;
}

std::uint8_t lbp_code(const std::array<std::uint8_t, 9>& w) {
    const int center = w[4];
    const std::array<int, 8> neighbors{w[0], w[1], w[2], w[3], w[5], w[6], w[7], w[8]};
    unsigned code = 0;
    for (int i = 0; i < 8; ++i)
        if (neighbors[i] >= center) code |= 128u >> i;
    return static_cast<std::uint8_t>(code);
}

std::uint8_t lgs_code(const std::array<std::uint8_t, 9>& w) {
    const int X = w[4], NW = w[0], SW = w[6], E = w[5], NE = w[2], SE = w[8];
    const std::array<std::pair<int, int>, 8> edges{{
        {X, NW}, {NW, SW}, {SW, X}, {X, E}, {E, NE}, {NE, SE}, {SE, E}, {E, X}}};
    unsigned code = 0;
    for (int i = 0; i < 8; ++i)
        if (edges[i].first - edges[i].second >= 0) code |= 128u >> i;
    return static_cast<std::uint8_t>(code);
}

std::pair<std::uint8_t, std::uint8_t> ltp_codes(const std::array<std::uint8_t, 9>& w,
                                                int t) {
    const int center = w[4];
    const std::array<int, 8> neighbors{w[0], w[1], w[2], w[3], w[5], w[6], w[7], w[8]};
    unsigned upper = 0, lower = 0;
    for (int i = 0; i < 8; ++i) {
        const int n = neighbors[i];
        int ternary = 0;
        if (n >= center + t) ternary = 1;
        else if (n <= center - t) ternary = -1;
        if (ternary == 1) upper |= 128u >> i;
        if (ternary == -1) lower |= 128u >> i;
    }
    return {static_cast<std::uint8_t>(upper), static_cast<std::uint8_t>(lower)};
}

} // namespace

TransformedImage lttp_transform(const GrayImage& img, Variant variant, Mode mode) {
    static const std::array<Descriptor, 4> kVariantDesc{
        Descriptor::LttpLd, Descriptor::LttpLb, Descriptor::LttpRd, Descriptor::LttpRb};
    return transform_sites(img, kVariantDesc[static_cast<int>(variant)], mode,
                           [variant](const std::array<std::uint8_t, 9>& w) {
                               return lttp_code(std::span<const std::uint8_t, 9>{w}, variant);
                           });
}

TransformedImage lbp_transform(const GrayImage& img, Mode mode) {
    return transform_sites(img, Descriptor::Lbp, mode, lbp_code);
}

std::pair<TransformedImage, TransformedImage> ltp_transform(const GrayImage& img,
                                                            int threshold, Mode mode) {
    if (threshold < 0 || threshold > 255)
        throw ValidationError("ltp threshold must be in [0, 255]");
    auto upper = transform_sites(img, Descriptor::Ltp, mode,
                                 [threshold](const std::array<std::uint8_t, 9>& w) {
                                     return ltp_codes(w, threshold).first;
                                 });
    auto lower = transform_sites(img, Descriptor::Ltp, mode,
                                 [threshold](const std::array<std::uint8_t, 9>& w) {
                                     return ltp_codes(w, threshold).second;
                                 });
    return {std::move(upper), std::move(lower)};
}

TransformedImage lgs_transform(const GrayImage& img, Mode mode) {
    return transform_sites(img, Descriptor::Lgs, mode, lgs_code);
}

FeatureVector extract_features(const GrayImage& img, const DescriptorParams& params,
                               Mode mode) {
    switch (params.id) {
        case Descriptor::Lbp: return flatten(ref::lbp_transform(img, mode));
        case Descriptor::Lgs: return flatten(ref::lgs_transform(img, mode));
        case Descriptor::Ltp: {
            auto [upper, lower] = ref::ltp_transform(img, params.ltp_threshold, mode);
            FeatureVector fv = flatten(upper);
            fv.values.insert(fv.values.end(), lower.codes.data.begin(),
                             lower.codes.data.end());
            return fv;
        }
        default: return flatten(ref::lttp_transform(img, lttp_variant(params.id), mode));
    }
}

} // namespace lttp::ref
