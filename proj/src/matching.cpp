// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/matching.hpp"

#include <algorithm>
#include <cmath>

#include "lttp/diag.hpp"
#include "lttp/error.hpp"
#include "lttp/kernels.hpp"

namespace lttp {

const char* metric_name(Metric m) { return m == Metric::CS ? "cs" : "sad"; }

Metric metric_from_name(const std::string& name) {
    if (name == "cs") return Metric::CS;
    if (name == "sad") return Metric::SAD;
    throw ValidationError("unknown metric: \"" + name + "\" (expected cs|sad)");
}

bool higher_is_better(Metric m) { return m == Metric::CS; }

namespace {

void require_same_length(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size())
        throw ValidationError("feature length mismatch: " + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()));
    if (a.size() == 0) throw ValidationError("empty feature vectors");
}

} // namespace

double cosine_similarity(const FeatureVector& a, const FeatureVector& b) {
    require_same_length(a, b);
    const KernelSet& k = active_kernels();
    const double dot = k.dot(a.data(), b.data(), a.size());
    const double na = k.sqnorm(a.data(), a.size());
    const double nb = k.sqnorm(b.data(), b.size());
    if (na == 0.0 || nb == 0.0) {
        warn("cosine similarity of a zero vector; returning 0");
        return 0.0;
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double sad(const FeatureVector& a, const FeatureVector& b) {
    require_same_length(a, b);
    return active_kernels().sad(a.data(), b.data(), a.size());
}

RankedList rank_gallery(const FeatureVector& probe, std::span<const GalleryItem> gallery,
                        Metric metric, std::string probe_id) {
    if (gallery.empty()) throw ValidationError("empty gallery");

    const KernelSet& k = active_kernels();
    // probe norm is shared by every CS score
    double probe_norm = 0.0;
    if (metric == Metric::CS && probe.size() > 0)
        probe_norm = std::sqrt(k.sqnorm(probe.data(), probe.size()));

    RankedList list;
    list.probe_id = std::move(probe_id);
    list.metric = metric;
    list.entries.reserve(gallery.size());
    for (std::size_t i = 0; i < gallery.size(); ++i) {
        const FeatureVector& g = gallery[i].features;
        require_same_length(probe, g);
        double score;
        if (metric == Metric::CS) {
            const double gallery_norm = std::sqrt(k.sqnorm(g.data(), g.size()));
            if (probe_norm == 0.0 || gallery_norm == 0.0) {
                warn("cosine similarity of a zero vector; returning 0");
                score = 0.0;
            } else {
                score = k.dot(probe.data(), g.data(), probe.size()) /
                        (probe_norm * gallery_norm);
            }
        } else {
            score = k.sad(probe.data(), g.data(), probe.size());
        }
        list.entries.push_back({i, gallery[i].subject, score});
    }
    // stable sort keeps ascending gallery index among equal scores
    if (higher_is_better(metric)) {
        std::stable_sort(list.entries.begin(), list.entries.end(),
                         [](const MatchScore& a, const MatchScore& b) { return a.score > b.score; });
    } else {
        std::stable_sort(list.entries.begin(), list.entries.end(),
                         [](const MatchScore& a, const MatchScore& b) { return a.score < b.score; });
    }
    return list;
}

std::pair<std::string, RankedList> identify(const FeatureVector& probe,
                                            std::span<const GalleryItem> gallery,
                                            Metric metric, std::string probe_id) {
    RankedList list = rank_gallery(probe, gallery, metric, std::move(probe_id));
    std::string subject = list.entries.front().subject;
    return {std::move(subject), std::move(list)};
}

} // namespace lttp
