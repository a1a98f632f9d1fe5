// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lttp/manifest.hpp"
#include "lttp/matching.hpp"

namespace lttp {

/// How rank-k counts a hit. Cumulative: the probe's best same-subject
/// gallery match sits at rank <= k (CMC reading; the default). ExactRank:
/// a same-subject gallery item sits at rank exactly k (study-only reading;
/// not monotone in k).
enum class RankSemantics { Cumulative, ExactRank };

RankSemantics rank_semantics_from_name(const std::string& name);
const char* rank_semantics_name(RankSemantics s);

struct RunOptions {
    DescriptorParams descriptor;
    Metric metric = Metric::CS;
    Mode mode = Mode::Dense;
    int workers = 1;
};

/// One probe's outcome inside a run.
struct ProbeOutcome {
    std::string path;
    std::string subject;
    RankedList ranked;
    /// 1-based rank of the best same-subject gallery entry; 0 when the
    /// subject has no gallery image at all.
    int best_correct_rank = 0;
};

/// A full one-to-many identification pass: every probe ranked against the
/// whole gallery under one descriptor/metric/mode.
struct IdentificationRun {
    RunOptions options;
    std::vector<std::string> gallery_paths;
    std::vector<std::string> gallery_subjects;
    std::vector<ProbeOutcome> probes;
    std::size_t feature_length = 0;
};

/// Execute the protocol over a manifest. Loads every image, extracts
/// features, ranks each probe. Image loads and probe scoring parallelize
/// over `options.workers`; outputs are byte-identical for any worker count.
/// Missing images are each reported on stderr before the run aborts.
IdentificationRun run_identification(const DatasetManifest& manifest,
                                     const RunOptions& options);

/// Percentage of probes counted correct at rank k under the given
/// semantics. Throws ValidationError when k is out of [1, gallery size] or
/// the run has no probes.
double rank_k_accuracy(const IdentificationRun& run, int k,
                       RankSemantics semantics = RankSemantics::Cumulative);

/// (k, accuracy) for k = 1..k_max. Non-decreasing under Cumulative.
std::vector<std::pair<int, double>> cmc_curve(const IdentificationRun& run, int k_max,
                                              RankSemantics semantics = RankSemantics::Cumulative);

// --- comparison reports ----------------------------------------------------

struct EvalCell {
    Metric metric = Metric::CS;
    int rank = 1;
    double accuracy = 0.0;  ///< percent, exact; rounded to 2 decimals on output
};

struct EvalRow {
    DescriptorParams descriptor;
    std::vector<EvalCell> cells;  ///< metric-major, then rank
};

/// Accuracy table shaped rows = descriptors, columns = metric x rank.
struct EvalReport {
    std::string dataset;
    Mode mode = Mode::Dense;
    RankSemantics semantics = RankSemantics::Cumulative;
    std::vector<Metric> metrics;
    std::vector<int> ranks;
    std::size_t gallery_size = 0;
    std::size_t probe_count = 0;
    std::vector<EvalRow> rows;
};

/// Full cross-product of descriptors x metrics over one manifest. Images
/// load once; each cell is an independent run.
EvalReport compare_descriptors(const DatasetManifest& manifest,
                               const std::vector<DescriptorParams>& descriptors,
                               const std::vector<Metric>& metrics,
                               const std::vector<int>& ranks, Mode mode,
                               int workers = 1,
                               RankSemantics semantics = RankSemantics::Cumulative,
                               std::vector<IdentificationRun>* runs_out = nullptr);

/// Machine form. Accuracies carry 2 decimals; byte-identical across runs.
std::string report_json(const EvalReport& report);

/// `descriptor,metric,rank,accuracy` rows.
std::string report_csv(const EvalReport& report);

/// Aligned human-readable table, descriptors down, metric x rank across.
std::string report_text(const EvalReport& report);

/// Raw per-pair score dump, `probe,gallery,subject,metric,score,rank`, full
/// float precision: enough to re-derive every accuracy independently. Pass
/// header=false to append further runs to one file.
void write_scores_csv(const IdentificationRun& run, std::ostream& out, bool header = true);

} // namespace lttp
