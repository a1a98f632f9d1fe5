// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "lttp/descriptor.hpp"

namespace lttp {

enum class Metric { CS, SAD };

inline constexpr std::array<Metric, 2> kAllMetrics{Metric::CS, Metric::SAD};

const char* metric_name(Metric m);
Metric metric_from_name(const std::string& name);

/// True when larger scores mean closer (CS); false when smaller do (SAD).
bool higher_is_better(Metric m);

/// dot(a,b) / (|a| * |b|). In [0,1] for non-negative vectors. If either
/// norm is zero the result is 0 and a warning is emitted (descriptor
/// features of valid images never hit this; constant images code to 255).
/// Throws ValidationError on length mismatch or empty vectors.
double cosine_similarity(const FeatureVector& a, const FeatureVector& b);

/// Sum of absolute differences. Exact for integer-valued features (every
/// term and the running total stay integers representable in double).
double sad(const FeatureVector& a, const FeatureVector& b);

struct GalleryItem {
    std::string subject;
    FeatureVector features;
};

struct MatchScore {
    std::size_t gallery_index = 0;
    std::string subject;
    double score = 0.0;
};

/// All gallery matches for one probe, best first. CS orders scores
/// non-increasing, SAD non-decreasing; ties keep ascending gallery index.
struct RankedList {
    std::string probe_id;
    Metric metric = Metric::CS;
    std::vector<MatchScore> entries;
};

/// Score the probe against every gallery item and produce the full
/// ordering. Throws ValidationError on an empty gallery or any length
/// mismatch.
RankedList rank_gallery(const FeatureVector& probe,
                        std::span<const GalleryItem> gallery, Metric metric,
                        std::string probe_id = {});

/// Rank-1 identity plus the full list.
std::pair<std::string, RankedList> identify(const FeatureVector& probe,
                                            std::span<const GalleryItem> gallery,
                                            Metric metric,
                                            std::string probe_id = {});

} // namespace lttp
