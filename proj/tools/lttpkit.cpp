// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

// lttpkit: local ternary tree pattern toolkit.
//
// Subcommands: transform, extract, evaluate, compare, bench, split.
// Exit codes: 0 success, 1 validation/usage, 2 I/O, 3 internal.
// All diagnostics go to stderr, one line each, prefixed error:/warning:.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lttp/descriptor.hpp"
#include "lttp/diag.hpp"
#include "lttp/error.hpp"
#include "lttp/evaluation.hpp"
#include "lttp/kernels.hpp"
#include "lttp/parallel.hpp"
#include "lttp/reference.hpp"

namespace {

void print_error_lines(const std::string& what) {
    std::istringstream in(what);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) std::cerr << "error: " << line << '\n';
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<lttp::DescriptorParams> parse_descriptors(const std::string& list,
                                                      int ltp_threshold) {
    using namespace lttp;
    std::vector<DescriptorParams> out;
    if (list == "all") {
        // baseline-first order, LTTP variants last
        for (Descriptor d : {Descriptor::Lbp, Descriptor::Lgs, Descriptor::Ltp,
                             Descriptor::LttpLd, Descriptor::LttpLb, Descriptor::LttpRd,
                             Descriptor::LttpRb})
            out.push_back({d, ltp_threshold});
        return out;
    }
    for (const std::string& name : split_list(list))
        out.push_back({descriptor_from_name(name), ltp_threshold});
    if (out.empty()) throw ValidationError("no descriptors selected");
    return out;
}

std::vector<lttp::Metric> parse_metrics(const std::string& list) {
    std::vector<lttp::Metric> out;
    for (const std::string& name : split_list(list)) out.push_back(lttp::metric_from_name(name));
    if (out.empty()) throw lttp::ValidationError("no metrics selected");
    return out;
}

std::vector<int> parse_ranks(const std::string& list) {
    std::vector<int> out;
    for (const std::string& tok : split_list(list)) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw lttp::ValidationError("bad rank value: \"" + tok + "\"");
        }
        if (out.back() < 1) throw lttp::ValidationError("ranks must be >= 1");
    }
    if (out.empty()) throw lttp::ValidationError("no ranks selected");
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw lttp::IoError("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw lttp::IoError("write failed: " + path.string());
}

// --- transform / extract ----------------------------------------------------

struct TransformArgs {
    std::string image;
    std::string descriptor = "lttp-ld";
    std::string mode = "dense";
    int ltp_threshold = 5;
    bool histogram = false;
    std::string out;
};

std::filesystem::path lower_plane_path(const std::filesystem::path& out) {
    std::filesystem::path p = out;
    const std::string ext = p.extension().string();
    p.replace_extension();
    p += ".lower";
    p += ext;
    return p;
}

void cmd_transform(const TransformArgs& args) {
    using namespace lttp;
    const DescriptorParams params{descriptor_from_name(args.descriptor), args.ltp_threshold};
    const Mode mode = mode_from_name(args.mode);
    const GrayImage img = load_gray_image(args.image);

    if (params.id == Descriptor::Ltp) {
        const auto [upper, lower] = ltp_transform(img, params.ltp_threshold, mode);
        save_pgm(upper.codes, args.out);
        const auto lower_path = lower_plane_path(args.out);
        save_pgm(lower.codes, lower_path);
        std::cout << upper.codes.width << "x" << upper.codes.height << '\n';
        std::cerr << "warning: ltp wrote two planes: " << args.out << " (upper), "
                  << lower_path.string() << " (lower)\n";
        return;
    }

    TransformedImage ti;
    switch (params.id) {
        case Descriptor::Lbp: ti = lbp_transform(img, mode); break;
        case Descriptor::Lgs: ti = lgs_transform(img, mode); break;
        default: ti = lttp_transform(img, lttp_variant(params.id), mode); break;
    }
    save_pgm(ti.codes, args.out);
    std::cout << ti.codes.width << "x" << ti.codes.height << '\n';
}

void cmd_extract(const TransformArgs& args) {
    using namespace lttp;
    const DescriptorParams params{descriptor_from_name(args.descriptor), args.ltp_threshold};
    const Mode mode = mode_from_name(args.mode);
    if (args.histogram && params.id != Descriptor::Lbp)
        throw ValidationError("--histogram is only available for the lbp descriptor");
    const GrayImage img = load_gray_image(args.image);
    const FeatureVector fv = args.histogram ? lbp_histogram_feature(img, mode)
                                            : extract_features(img, params, mode);

    std::string content = "value\n";
    char buf[32];
    for (float v : fv.values) {
        std::snprintf(buf, sizeof buf, "%g\n", double(v));
        content += buf;
    }
    write_text_file(args.out, content);
    std::cout << fv.size() << '\n';
}

// --- evaluate / compare -----------------------------------------------------

struct EvalArgs {
    std::string manifest;
    std::string descriptors = "all";
    std::string metrics = "cs,sad";
    std::string ranks = "1";
    std::string mode = "dense";
    std::string semantics = "cumulative";
    int ltp_threshold = 5;
    int workers = 0;  // 0 = hardware concurrency
    std::string out_json;
    std::string out_csv;
    std::string scores_csv;
};

void run_compare(const EvalArgs& args) {
    using namespace lttp;
    const auto manifest = load_manifest(args.manifest);
    const auto descriptors = parse_descriptors(args.descriptors, args.ltp_threshold);
    const auto metrics = parse_metrics(args.metrics);
    const auto ranks = parse_ranks(args.ranks);
    const Mode mode = mode_from_name(args.mode);
    const RankSemantics semantics = rank_semantics_from_name(args.semantics);
    const int workers = args.workers > 0 ? args.workers : default_workers();

    std::vector<IdentificationRun> runs;
    EvalReport report = compare_descriptors(manifest, descriptors, metrics, ranks, mode,
                                            workers, semantics,
                                            args.scores_csv.empty() ? nullptr : &runs);
    report.dataset = args.manifest;

    if (!args.out_json.empty()) write_text_file(args.out_json, report_json(report));
    if (!args.out_csv.empty()) write_text_file(args.out_csv, report_csv(report));
    if (!args.scores_csv.empty()) {
        std::ofstream out(args.scores_csv, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + args.scores_csv);
        for (std::size_t i = 0; i < runs.size(); ++i) write_scores_csv(runs[i], out, i == 0);
        if (!out) throw IoError("write failed: " + args.scores_csv);
    }
    std::cout << report_text(report);
}

// --- bench -------------------------------------------------------------------

struct BenchArgs {
    std::string image;
    int width = 512;
    int height = 512;
    std::string descriptors = "all";
    std::string mode = "dense";
    int ltp_threshold = 5;
    int reps = 10;
    unsigned long long seed = 1;
    std::string out_csv;
};

void gate_against_reference(const lttp::GrayImage& img, const lttp::DescriptorParams& params,
                            lttp::Mode mode) {
    using namespace lttp;
    const FeatureVector got = extract_features(img, params, mode);
    const FeatureVector want = ref::extract_features(img, params, mode);
    if (!(got == want))
        throw InternalError("kernel outputs differ from reference for " +
                            params.display_name() + " (" + active_kernels().name + ")");
}

void cmd_bench(const BenchArgs& args) {
    using namespace lttp;
    GrayImage img;
    if (!args.image.empty()) {
        img = load_gray_image(args.image);
    } else {
        img = make_image(args.width, args.height);
        std::mt19937_64 rng(args.seed);
        for (auto& px : img.data) px = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    const auto descriptors = parse_descriptors(args.descriptors, args.ltp_threshold);
    const Mode mode = mode_from_name(args.mode);
    if (args.reps < 10) throw ValidationError("bench needs at least 10 repetitions");

    const double megapixels = double(img.pixel_count()) / 1e6;
    std::cout << "image " << img.width << "x" << img.height << ", mode " << mode_name(mode)
              << ", sites dense=" << code_sites(img, Mode::Dense)
              << " block=" << code_sites(img, Mode::Block) << ", reps " << args.reps << "\n";
    std::printf("%-10s %-7s %10s %10s %10s %10s\n", "descriptor", "kernel", "median_ms",
                "min_ms", "max_ms", "mpix/s");

    std::string csv = "descriptor,kernel,median_ms,min_ms,max_ms,mpix_per_s\n";
    const KernelChoice previous_choice = KernelChoice::Auto;
    for (const DescriptorParams& params : descriptors) {
        for (const KernelSet* set : available_kernels()) {
            set_active_kernels(kernel_choice_from_name(set->name));
            // correctness gate before any timing
            gate_against_reference(img, params, mode);

            std::vector<double> ms;
            for (int rep = 0; rep < args.reps + 2; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                const FeatureVector fv = extract_features(img, params, mode);
                const auto t1 = std::chrono::steady_clock::now();
                if (fv.size() == 0) throw InternalError("empty features during bench");
                if (rep >= 2)  // warmup excluded
                    ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            std::sort(ms.begin(), ms.end());
            const double median = ms[ms.size() / 2];
            const double throughput = megapixels / (median / 1e3);
            std::printf("%-10s %-7s %10.3f %10.3f %10.3f %10.1f\n",
                        params.display_name().c_str(), set->name, median, ms.front(),
                        ms.back(), throughput);
            char row[256];
            std::snprintf(row, sizeof row, "%s,%s,%.6f,%.6f,%.6f,%.1f\n",
                          params.display_name().c_str(), set->name, median, ms.front(),
                          ms.back(), throughput);
            csv += row;
        }
    }
    set_active_kernels(previous_choice);
    if (!args.out_csv.empty()) write_text_file(args.out_csv, csv);
}

// --- split -------------------------------------------------------------------

struct SplitArgs {
    std::string images;
    int probes_per_subject = 1;
    unsigned long long seed = 1;
    std::string out;
};

void cmd_split(const SplitArgs& args) {
    using namespace lttp;
    if (args.probes_per_subject < 1)
        throw ValidationError("--probes-per-subject must be >= 1");

    std::ifstream in(args.images);
    if (!in) throw IoError("cannot open image list: " + args.images);

    // accepted headers: path,subject or path,subject,role (role ignored)
    std::vector<std::string> subjects_in_order;
    std::map<std::string, std::vector<std::string>> images_of;
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_list(line);
        if (!saw_header) {
            if (fields.size() < 2 || fields[0] != "path" || fields[1] != "subject")
                throw ValidationError("image list: missing header \"path,subject[,role]\"");
            saw_header = true;
            continue;
        }
        if (fields.size() < 2)
            throw ValidationError("image list line " + std::to_string(lineno) +
                                  ": expected at least path,subject");
        if (images_of.find(fields[1]) == images_of.end()) subjects_in_order.push_back(fields[1]);
        images_of[fields[1]].push_back(fields[0]);
    }
    if (subjects_in_order.empty()) throw ValidationError("image list: no entries");

    std::mt19937_64 rng(args.seed);
    DatasetManifest manifest;
    for (const std::string& subject : subjects_in_order) {
        auto& imgs = images_of[subject];
        std::shuffle(imgs.begin(), imgs.end(), rng);
        // subjects that would lose every gallery image stay gallery-only
        if (int(imgs.size()) <= args.probes_per_subject) {
            warn("subject \"" + subject + "\" has " + std::to_string(imgs.size()) +
                 " image(s); keeping all in the gallery");
            for (const auto& p : imgs) manifest.entries.push_back({p, subject, Role::Gallery});
            continue;
        }
        for (std::size_t i = 0; i < imgs.size(); ++i) {
            const Role role = i < std::size_t(args.probes_per_subject) ? Role::Probe
                                                                       : Role::Gallery;
            manifest.entries.push_back({imgs[i], subject, role});
        }
    }
    save_manifest(manifest, args.out);
    std::size_t probes = 0;
    for (const auto& e : manifest.entries)
        if (e.role == Role::Probe) ++probes;
    std::cout << manifest.entries.size() << " entries, " << probes << " probes, "
              << (manifest.entries.size() - probes) << " gallery\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lttpkit: local ternary tree pattern descriptors and identification"};
    app.require_subcommand(1);
    app.set_config("--config")->description("read options from an INI/TOML file (flags win)");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_version_flag("--version", "lttpkit 1.0.0");

    std::string kernel = "auto";
    app.add_option("--kernel", kernel, "kernel set: auto|scalar|avx2|neon")
        ->default_str("auto");

    TransformArgs transform_args;
    auto* transform = app.add_subcommand("transform", "apply a descriptor, write the code image");
    transform->add_option("image", transform_args.image, "input image")->required();
    transform->add_option("--descriptor", transform_args.descriptor,
                          "lttp-ld|lttp-lb|lttp-rd|lttp-rb|lbp|ltp|lgs");
    transform->add_option("--mode", transform_args.mode, "dense|block");
    transform->add_option("--ltp-threshold", transform_args.ltp_threshold, "LTP dead zone");
    transform->add_option("--out,-o", transform_args.out, "output PGM")->required();

    TransformArgs extract_args;
    auto* extract = app.add_subcommand("extract", "write the flattened feature vector as CSV");
    extract->add_option("image", extract_args.image, "input image")->required();
    extract->add_option("--descriptor", extract_args.descriptor,
                        "lttp-ld|lttp-lb|lttp-rd|lttp-rb|lbp|ltp|lgs");
    extract->add_option("--mode", extract_args.mode, "dense|block");
    extract->add_option("--ltp-threshold", extract_args.ltp_threshold, "LTP dead zone");
    extract->add_flag("--histogram", extract_args.histogram,
                      "256-bin code histogram instead of flattening (lbp only)");
    extract->add_option("--out,-o", extract_args.out, "output CSV")->required();

    EvalArgs evaluate_args;
    evaluate_args.descriptors = "lttp-ld";
    auto* evaluate = app.add_subcommand("evaluate", "run identification for one descriptor");
    evaluate->add_option("--manifest", evaluate_args.manifest, "dataset manifest CSV")->required();
    evaluate->add_option("--descriptor", evaluate_args.descriptors, "descriptor name");
    evaluate->add_option("--metrics", evaluate_args.metrics, "comma list of cs,sad");
    evaluate->add_option("--ranks", evaluate_args.ranks, "comma list of ranks");
    evaluate->add_option("--mode", evaluate_args.mode, "dense|block");
    evaluate->add_option("--rank-semantics", evaluate_args.semantics, "cumulative|exact");
    evaluate->add_option("--ltp-threshold", evaluate_args.ltp_threshold, "LTP dead zone");
    evaluate->add_option("--workers", evaluate_args.workers, "worker threads (0 = auto)");
    evaluate->add_option("--out-json", evaluate_args.out_json, "report JSON path");
    evaluate->add_option("--out-csv", evaluate_args.out_csv, "report CSV path");
    evaluate->add_option("--scores-csv", evaluate_args.scores_csv, "raw score matrix path");

    EvalArgs compare_args;
    auto* compare = app.add_subcommand("compare", "descriptor x metric accuracy table");
    compare->add_option("--manifest", compare_args.manifest, "dataset manifest CSV")->required();
    compare->add_option("--descriptors", compare_args.descriptors,
                        "comma list of descriptors, or \"all\"");
    compare->add_option("--metrics", compare_args.metrics, "comma list of cs,sad");
    compare->add_option("--ranks", compare_args.ranks, "comma list of ranks");
    compare->add_option("--mode", compare_args.mode, "dense|block");
    compare->add_option("--rank-semantics", compare_args.semantics, "cumulative|exact");
    compare->add_option("--ltp-threshold", compare_args.ltp_threshold, "LTP dead zone");
    compare->add_option("--workers", compare_args.workers, "worker threads (0 = auto)");
    compare->add_option("--out-json", compare_args.out_json, "report JSON path");
    compare->add_option("--out-csv", compare_args.out_csv, "report CSV path");
    compare->add_option("--scores-csv", compare_args.scores_csv, "raw score matrix path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "throughput of every kernel set, gated on "
                                              "reference equivalence");
    bench->add_option("--image", bench_args.image, "bench on this image");
    bench->add_option("--width", bench_args.width, "synthetic image width");
    bench->add_option("--height", bench_args.height, "synthetic image height");
    bench->add_option("--descriptors", bench_args.descriptors, "comma list or \"all\"");
    bench->add_option("--mode", bench_args.mode, "dense|block");
    bench->add_option("--ltp-threshold", bench_args.ltp_threshold, "LTP dead zone");
    bench->add_option("--reps", bench_args.reps, "timed repetitions (>= 10)");
    bench->add_option("--seed", bench_args.seed, "synthetic image seed");
    bench->add_option("--out-csv", bench_args.out_csv, "timing CSV path");

    SplitArgs split_args;
    auto* split = app.add_subcommand("split", "seeded probe/gallery split from an image list");
    split->add_option("--images", split_args.images, "CSV with header path,subject[,role]")
        ->required();
    split->add_option("--probes-per-subject", split_args.probes_per_subject,
                      "probe images per subject");
    split->add_option("--seed", split_args.seed, "RNG seed");
    split->add_option("--out,-o", split_args.out, "manifest output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        lttp::set_active_kernels(lttp::kernel_choice_from_name(kernel));
        if (transform->parsed()) cmd_transform(transform_args);
        else if (extract->parsed()) cmd_extract(extract_args);
        else if (evaluate->parsed()) run_compare(evaluate_args);
        else if (compare->parsed()) run_compare(compare_args);
        else if (bench->parsed()) cmd_bench(bench_args);
        else if (split->parsed()) cmd_split(split_args);
        return 0;
    } catch (const lttp::ValidationError& e) {
        print_error_lines(e.what());
        return 1;
    } catch (const lttp::IoError& e) {
        print_error_lines(e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error_lines(e.what());
        return 3;
    }
}
