// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "lttp/error.hpp"
#include "lttp/image.hpp"
#include "lttp/parallel.hpp"

namespace lttp {

RankSemantics rank_semantics_from_name(const std::string& name) {
    if (name == "cumulative") return RankSemantics::Cumulative;
    if (name == "exact") return RankSemantics::ExactRank;
    throw ValidationError("unknown rank semantics: \"" + name +
                          "\" (expected cumulative|exact)");
}

const char* rank_semantics_name(RankSemantics s) {
    return s == RankSemantics::Cumulative ? "cumulative" : "exact";
}

namespace {

// Manifest entries resolved to decoded images; identical paths load once.
struct LoadedDataset {
    std::vector<GrayImage> images;             // unique images
    std::vector<std::size_t> image_of_entry;   // entry index -> unique image
    std::vector<std::size_t> gallery_entries;
    std::vector<std::size_t> probe_entries;
};

LoadedDataset load_dataset(const DatasetManifest& manifest, int workers) {
    LoadedDataset ds;
    ds.gallery_entries = manifest.gallery_indices();
    ds.probe_entries = manifest.probe_indices();

    std::map<std::string, std::size_t> unique;
    std::vector<std::filesystem::path> paths;
    ds.image_of_entry.resize(manifest.entries.size());
    for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
        const auto resolved = manifest.resolve(manifest.entries[i]);
        auto [it, inserted] = unique.try_emplace(resolved.string(), paths.size());
        if (inserted) paths.push_back(resolved);
        ds.image_of_entry[i] = it->second;
    }

    ds.images.resize(paths.size());
    std::vector<std::string> failures(paths.size());
    parallel_for(paths.size(), workers, [&](std::size_t i) {
        try {
            ds.images[i] = load_gray_image(paths[i]);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    });

    std::string message;
    std::size_t nfail = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (!failures[i].empty()) {
            ++nfail;
            message += "\n" + failures[i];
        }
    }
    if (nfail > 0)
        throw IoError(std::to_string(nfail) + " image(s) failed to load" + message);
    return ds;
}

// Features per unique image under one descriptor/mode; lengths must agree.
std::vector<FeatureVector> extract_all(const LoadedDataset& ds,
                                       const DatasetManifest& manifest,
                                       const DescriptorParams& desc, Mode mode,
                                       int workers) {
    std::vector<FeatureVector> features(ds.images.size());
    parallel_for(ds.images.size(), workers,
                 [&](std::size_t i) { features[i] = extract_features(ds.images[i], desc, mode); });

    std::size_t expected = features.empty() ? 0 : features.front().size();
    for (std::size_t e = 0; e < manifest.entries.size(); ++e) {
        const auto& fv = features[ds.image_of_entry[e]];
        if (fv.size() != expected)
            throw ValidationError("feature length mismatch across the dataset: \"" +
                                  manifest.entries[e].path + "\" yields " +
                                  std::to_string(fv.size()) + " values, expected " +
                                  std::to_string(expected) +
                                  " (all images in a run must share dimensions)");
    }
    return features;
}

IdentificationRun run_on_features(const DatasetManifest& manifest, const LoadedDataset& ds,
                                  const std::vector<FeatureVector>& features,
                                  const RunOptions& options) {
    if (ds.probe_entries.empty()) throw ValidationError("manifest has no probe entries");
    if (ds.gallery_entries.empty()) throw ValidationError("manifest has no gallery entries");

    IdentificationRun run;
    run.options = options;

    std::vector<GalleryItem> gallery;
    gallery.reserve(ds.gallery_entries.size());
    for (std::size_t e : ds.gallery_entries) {
        const auto& entry = manifest.entries[e];
        run.gallery_paths.push_back(entry.path);
        run.gallery_subjects.push_back(entry.subject);
        gallery.push_back({entry.subject, features[ds.image_of_entry[e]]});
    }
    run.feature_length = gallery.front().features.size();

    run.probes.resize(ds.probe_entries.size());
    parallel_for(ds.probe_entries.size(), options.workers, [&](std::size_t pi) {
        const auto& entry = manifest.entries[ds.probe_entries[pi]];
        ProbeOutcome outcome;
        outcome.path = entry.path;
        outcome.subject = entry.subject;
        outcome.ranked = rank_gallery(features[ds.image_of_entry[ds.probe_entries[pi]]],
                                      gallery, options.metric, entry.path);
        outcome.best_correct_rank = 0;
        for (std::size_t r = 0; r < outcome.ranked.entries.size(); ++r) {
            if (outcome.ranked.entries[r].subject == entry.subject) {
                outcome.best_correct_rank = static_cast<int>(r) + 1;
                break;
            }
        }
        run.probes[pi] = std::move(outcome);
    });
    return run;
}

} // namespace

IdentificationRun run_identification(const DatasetManifest& manifest,
                                     const RunOptions& options) {
    const LoadedDataset ds = load_dataset(manifest, options.workers);
    const auto features =
        extract_all(ds, manifest, options.descriptor, options.mode, options.workers);
    return run_on_features(manifest, ds, features, options);
}

double rank_k_accuracy(const IdentificationRun& run, int k, RankSemantics semantics) {
    if (run.probes.empty()) throw ValidationError("run has no probes");
    const int gallery_size = static_cast<int>(run.gallery_subjects.size());
    if (k < 1 || k > gallery_size)
        throw ValidationError("rank k=" + std::to_string(k) + " out of [1, " +
                              std::to_string(gallery_size) + "]");

    std::size_t hits = 0;
    for (const ProbeOutcome& p : run.probes) {
        if (semantics == RankSemantics::Cumulative) {
            if (p.best_correct_rank >= 1 && p.best_correct_rank <= k) ++hits;
        } else {
            if (p.ranked.entries[static_cast<std::size_t>(k) - 1].subject == p.subject) ++hits;
        }
    }
    return 100.0 * static_cast<double>(hits) / static_cast<double>(run.probes.size());
}

std::vector<std::pair<int, double>> cmc_curve(const IdentificationRun& run, int k_max,
                                              RankSemantics semantics) {
    if (k_max < 1 || k_max > static_cast<int>(run.gallery_subjects.size()))
        throw ValidationError("k_max out of [1, gallery size]");
    std::vector<std::pair<int, double>> curve;
    curve.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) curve.emplace_back(k, rank_k_accuracy(run, k, semantics));
    return curve;
}

EvalReport compare_descriptors(const DatasetManifest& manifest,
                               const std::vector<DescriptorParams>& descriptors,
                               const std::vector<Metric>& metrics,
                               const std::vector<int>& ranks, Mode mode, int workers,
                               RankSemantics semantics,
                               std::vector<IdentificationRun>* runs_out) {
    if (descriptors.empty()) throw ValidationError("no descriptors selected");
    if (metrics.empty()) throw ValidationError("no metrics selected");
    if (ranks.empty()) throw ValidationError("no ranks selected");

    const LoadedDataset ds = load_dataset(manifest, workers);

    EvalReport report;
    report.mode = mode;
    report.semantics = semantics;
    report.metrics = metrics;
    report.ranks = ranks;
    report.gallery_size = ds.gallery_entries.size();
    report.probe_count = ds.probe_entries.size();

    for (const DescriptorParams& desc : descriptors) {
        const auto features = extract_all(ds, manifest, desc, mode, workers);
        EvalRow row;
        row.descriptor = desc;
        for (Metric metric : metrics) {
            RunOptions options;
            options.descriptor = desc;
            options.metric = metric;
            options.mode = mode;
            options.workers = workers;
            IdentificationRun run = run_on_features(manifest, ds, features, options);
            for (int k : ranks)
                row.cells.push_back({metric, k, rank_k_accuracy(run, k, semantics)});
            if (runs_out) runs_out->push_back(std::move(run));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string report_json(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["dataset"] = report.dataset;
    j["mode"] = mode_name(report.mode);
    j["rank_semantics"] = rank_semantics_name(report.semantics);
    j["gallery_size"] = report.gallery_size;
    j["probe_count"] = report.probe_count;
    j["ranks"] = report.ranks;
    {
        auto metrics = nlohmann::ordered_json::array();
        for (Metric m : report.metrics) metrics.push_back(metric_name(m));
        j["metrics"] = std::move(metrics);
    }
    auto rows = nlohmann::ordered_json::array();
    for (const EvalRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["descriptor"] = descriptor_name(row.descriptor.id);
        if (row.descriptor.id == Descriptor::Ltp)
            r["ltp_threshold"] = row.descriptor.ltp_threshold;
        auto cells = nlohmann::ordered_json::array();
        for (const EvalCell& cell : row.cells) {
            nlohmann::ordered_json c;
            c["metric"] = metric_name(cell.metric);
            c["rank"] = cell.rank;
            c["accuracy"] = round2(cell.accuracy);
            cells.push_back(std::move(c));
        }
        r["cells"] = std::move(cells);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string report_csv(const EvalReport& report) {
    std::string out = "descriptor,metric,rank,accuracy\n";
    for (const EvalRow& row : report.rows)
        for (const EvalCell& cell : row.cells)
            out += row.descriptor.display_name() + "," + metric_name(cell.metric) + "," +
                   std::to_string(cell.rank) + "," + fixed2(round2(cell.accuracy)) + "\n";
    return out;
}

std::string report_text(const EvalReport& report) {
    std::vector<std::string> headers{"descriptor"};
    for (const Metric m : report.metrics)
        for (const int k : report.ranks)
            headers.push_back(std::string(metric_name(m)) + "@" + std::to_string(k));

    std::vector<std::vector<std::string>> lines;
    for (const EvalRow& row : report.rows) {
        std::vector<std::string> line{row.descriptor.display_name()};
        for (const EvalCell& cell : row.cells) line.push_back(fixed2(round2(cell.accuracy)));
        lines.push_back(std::move(line));
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& line : lines) width[c] = std::max(width[c], line[c].size());
    }

    std::ostringstream out;
    out << "accuracy (%) at rank, " << report.probe_count << " probes vs "
        << report.gallery_size << " gallery images, mode=" << mode_name(report.mode) << "\n";
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out << "  ";
            // left-align first column, right-align numbers
            if (c == 0)
                out << line[c] << std::string(width[c] - line[c].size(), ' ');
            else
                out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << "\n";
    };
    emit(headers);
    for (const auto& line : lines) emit(line);
    return out.str();
}

void write_scores_csv(const IdentificationRun& run, std::ostream& out, bool header) {
    if (header) out << "probe,gallery,subject,metric,score,rank\n";
    const char* metric = metric_name(run.options.metric);
    for (const ProbeOutcome& probe : run.probes) {
        for (std::size_t r = 0; r < probe.ranked.entries.size(); ++r) {
            const MatchScore& ms = probe.ranked.entries[r];
            out << probe.path << ',' << run.gallery_paths[ms.gallery_index] << ','
                << ms.subject << ',' << metric << ',' << full_precision(ms.score) << ','
                << (r + 1) << '\n';
        }
    }
}

} // namespace lttp
