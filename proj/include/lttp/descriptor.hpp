// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lttp/image.hpp"
#include "lttp/ternary_tree.hpp"

namespace lttp {

enum class Descriptor { LttpLd, LttpLb, LttpRd, LttpRb, Lbp, Ltp, Lgs };

inline constexpr std::array<Descriptor, 7> kAllDescriptors{
    Descriptor::LttpLd, Descriptor::LttpLb, Descriptor::LttpRd,
    Descriptor::LttpRb, Descriptor::Lbp,    Descriptor::Ltp,
    Descriptor::Lgs};

const char* descriptor_name(Descriptor d);
Descriptor descriptor_from_name(const std::string& name);
bool is_lttp(Descriptor d);
Variant lttp_variant(Descriptor d);  // throws unless is_lttp

/// Dense applies the operator at every interior pixel (output (h-2)x(v-2));
/// Block applies it once per non-overlapping 3x3 block, at the block
/// center (output floor(h/3) x floor(v/3)).
enum class Mode { Dense, Block };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& name);

struct DescriptorParams {
    Descriptor id = Descriptor::LttpLd;
    int ltp_threshold = 5;  ///< dead zone half-width; only read for Ltp

    std::string display_name() const;  // "ltp(t=5)" or plain name
};

/// Grid of 8-bit descriptor codes plus how it was produced. The code grid
/// reuses GrayImage so it can be written straight back out as a PGM.
struct TransformedImage {
    GrayImage codes;
    Descriptor descriptor = Descriptor::LttpLd;
    Mode mode = Mode::Dense;
};

/// Flattened transformed image: row-major code values widened to float.
/// For LTP this is the upper plane followed by the lower plane.
struct FeatureVector {
    std::vector<float> values;

    std::size_t size() const { return values.size(); }
    const float* data() const { return values.data(); }
    bool operator==(const FeatureVector&) const = default;
};

// --- transforms ------------------------------------------------------------
// All throw ValidationError when the image is smaller than 3x3. They are
// pure functions: identical inputs give bit-identical outputs regardless of
// kernel set or worker schedule.

TransformedImage lttp_transform(const GrayImage& img, Variant variant, Mode mode);
TransformedImage lbp_transform(const GrayImage& img, Mode mode);

/// Returns (upper, lower) binary-plane code images.
std::pair<TransformedImage, TransformedImage> ltp_transform(const GrayImage& img,
                                                            int threshold, Mode mode);

TransformedImage lgs_transform(const GrayImage& img, Mode mode);

FeatureVector flatten(const TransformedImage& ti);

/// Transform + flatten under one descriptor configuration. LTP features are
/// upper-then-lower, twice the single-plane length.
FeatureVector extract_features(const GrayImage& img, const DescriptorParams& params,
                               Mode mode);

/// Exploratory alternative LBP feature: 256-bin histogram of the code image
/// instead of flattening. Length is always 256, so galleries of mixed
/// resolutions become comparable (at the cost of all spatial layout).
FeatureVector lbp_histogram_feature(const GrayImage& img, Mode mode);

/// Code-site count for one image under a mode: (h-2)*(v-2) dense,
/// floor(h/3)*floor(v/3) block.
std::size_t code_sites(const GrayImage& img, Mode mode);

} // namespace lttp
