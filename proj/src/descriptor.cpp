// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/descriptor.hpp"

#include "lttp/error.hpp"
#include "lttp/kernels.hpp"

namespace lttp {

const char* descriptor_name(Descriptor d) {
    switch (d) {
        case Descriptor::LttpLd: return "lttp-ld";
        case Descriptor::LttpLb: return "lttp-lb";
        case Descriptor::LttpRd: return "lttp-rd";
        case Descriptor::LttpRb: return "lttp-rb";
        case Descriptor::Lbp: return "lbp";
        case Descriptor::Ltp: return "ltp";
        case Descriptor::Lgs: return "lgs";
    }
    throw InternalError("bad descriptor");
}

Descriptor descriptor_from_name(const std::string& name) {
    for (Descriptor d : kAllDescriptors)
        if (name == descriptor_name(d)) return d;
    throw ValidationError("unknown descriptor: \"" + name + "\"");
}

bool is_lttp(Descriptor d) {
    return d == Descriptor::LttpLd || d == Descriptor::LttpLb || d == Descriptor::LttpRd ||
           d == Descriptor::LttpRb;
}

Variant lttp_variant(Descriptor d) {
    switch (d) {
        case Descriptor::LttpLd: return Variant::LD;
        case Descriptor::LttpLb: return Variant::LB;
        case Descriptor::LttpRd: return Variant::RD;
        case Descriptor::LttpRb: return Variant::RB;
        default: throw InternalError("descriptor is not an lttp variant");
    }
}

const char* mode_name(Mode m) { return m == Mode::Dense ? "dense" : "block"; }

Mode mode_from_name(const std::string& name) {
    if (name == "dense") return Mode::Dense;
    if (name == "block") return Mode::Block;
    throw ValidationError("unknown mode: \"" + name + "\" (expected dense|block)");
}

std::string DescriptorParams::display_name() const {
    if (id == Descriptor::Ltp)
        return std::string("ltp(t=") + std::to_string(ltp_threshold) + ")";
    return descriptor_name(id);
}

namespace {

TransformedImage transform_with_spec(const GrayImage& img, const CodeSpec& spec,
                                     Descriptor desc, Mode mode) {
    require_valid(img, 3);
    const KernelSet& k = active_kernels();
    TransformedImage ti;
    ti.descriptor = desc;
    ti.mode = mode;
    if (mode == Mode::Dense) {
        ti.codes = make_image(img.width - 2, img.height - 2);
        const std::size_t n = static_cast<std::size_t>(img.width - 2);
        for (int r = 0; r + 2 < img.height; ++r)
            k.code_row(img.row(r), img.row(r + 1), img.row(r + 2), n, spec, ti.codes.row(r));
    } else {
        const BlockGrid grid = partition_blocks(img);
        ti.codes = make_image(grid.block_cols, grid.block_rows);
        std::uint8_t* out = ti.codes.data.data();
        for (const BlockOrigin& b : grid.blocks) {
            // one site: the block's center pixel, stencil = the block itself
            k.code_row(img.row(b.row) + b.col, img.row(b.row + 1) + b.col,
                       img.row(b.row + 2) + b.col, 1, spec, out++);
        }
    }
    return ti;
}

} // namespace

TransformedImage lttp_transform(const GrayImage& img, Variant variant, Mode mode) {
    static const std::array<Descriptor, 4> kVariantDesc{
        Descriptor::LttpLd, Descriptor::LttpLb, Descriptor::LttpRd, Descriptor::LttpRb};
    const int vi = static_cast<int>(variant);
    return transform_with_spec(img, lttp_spec(vi), kVariantDesc[vi], mode);
}

TransformedImage lbp_transform(const GrayImage& img, Mode mode) {
    return transform_with_spec(img, lbp_spec(), Descriptor::Lbp, mode);
}

std::pair<TransformedImage, TransformedImage> ltp_transform(const GrayImage& img,
                                                            int threshold, Mode mode) {
    return {transform_with_spec(img, ltp_upper_spec(threshold), Descriptor::Ltp, mode),
            transform_with_spec(img, ltp_lower_spec(threshold), Descriptor::Ltp, mode)};
}

TransformedImage lgs_transform(const GrayImage& img, Mode mode) {
    return transform_with_spec(img, lgs_spec(), Descriptor::Lgs, mode);
}

FeatureVector flatten(const TransformedImage& ti) {
    FeatureVector fv;
    fv.values.assign(ti.codes.data.begin(), ti.codes.data.end());
    return fv;
}

FeatureVector extract_features(const GrayImage& img, const DescriptorParams& params,
                               Mode mode) {
    switch (params.id) {
        case Descriptor::Lbp: return flatten(lbp_transform(img, mode));
        case Descriptor::Lgs: return flatten(lgs_transform(img, mode));
        case Descriptor::Ltp: {
            auto [upper, lower] = ltp_transform(img, params.ltp_threshold, mode);
            FeatureVector fv = flatten(upper);
            fv.values.insert(fv.values.end(), lower.codes.data.begin(),
                             lower.codes.data.end());
            return fv;
        }
        default: return flatten(lttp_transform(img, lttp_variant(params.id), mode));
    }
}

FeatureVector lbp_histogram_feature(const GrayImage& img, Mode mode) {
    const TransformedImage ti = lbp_transform(img, mode);
    FeatureVector fv;
    fv.values.assign(256, 0.0f);
    for (std::uint8_t code : ti.codes.data) fv.values[code] += 1.0f;
    return fv;
}

std::size_t code_sites(const GrayImage& img, Mode mode) {
    require_valid(img, 3);
    if (mode == Mode::Dense)
        return static_cast<std::size_t>(img.width - 2) * (img.height - 2);
    return static_cast<std::size_t>(img.width / 3) * (img.height / 3);
}

} // namespace lttp
