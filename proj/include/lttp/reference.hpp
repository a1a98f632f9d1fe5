// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lttp/descriptor.hpp"

namespace lttp::ref {

// Naive per-window reference transforms. Each site is computed on its own:
// copy out the 3x3 window, build the tree / comparison list explicitly,
// pack bits one at a time. No shared row kernels, no tables from
// kernels.hpp. These are the equivalence baseline for the optimized paths
// and the correctness gate run by `bench` before timing.

TransformedImage lttp_transform(const GrayImage& img, Variant variant, Mode mode);
TransformedImage lbp_transform(const GrayImage& img, Mode mode);
std::pair<TransformedImage, TransformedImage> ltp_transform(const GrayImage& img,
                                                            int threshold, Mode mode);
TransformedImage lgs_transform(const GrayImage& img, Mode mode);

FeatureVector extract_features(const GrayImage& img, const DescriptorParams& params,
                               Mode mode);

} // namespace lttp::ref
