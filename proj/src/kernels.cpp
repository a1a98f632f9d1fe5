// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/kernels.hpp"

#include "lttp/error.hpp"
#include "lttp/ternary_tree.hpp"

namespace lttp {

namespace detail {
const KernelSet& scalar_kernel_set();
#ifdef LTTP_HAVE_AVX2
const KernelSet& avx2_kernel_set();
#endif
#ifdef LTTP_HAVE_NEON
const KernelSet& neon_kernel_set();
#endif
} // namespace detail

KernelChoice kernel_choice_from_name(const std::string& name) {
    if (name == "auto") return KernelChoice::Auto;
    if (name == "scalar") return KernelChoice::Scalar;
    if (name == "avx2") return KernelChoice::Avx2;
    if (name == "neon") return KernelChoice::Neon;
    throw ValidationError("unknown kernel choice: \"" + name + "\"");
}

const KernelSet& scalar_kernels() { return detail::scalar_kernel_set(); }

const KernelSet* avx2_kernels() {
#ifdef LTTP_HAVE_AVX2
    if (__builtin_cpu_supports("avx2")) return &detail::avx2_kernel_set();
#endif
    return nullptr;
}

const KernelSet* neon_kernels() {
#ifdef LTTP_HAVE_NEON
    // NEON is architecturally guaranteed on AArch64.
    return &detail::neon_kernel_set();
#else
    return nullptr;
#endif
}

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> sets{&scalar_kernels()};
    if (const KernelSet* k = avx2_kernels()) sets.push_back(k);
    if (const KernelSet* k = neon_kernels()) sets.push_back(k);
    return sets;
}

const KernelSet& select_kernels(KernelChoice choice) {
    switch (choice) {
        case KernelChoice::Scalar: return scalar_kernels();
        case KernelChoice::Avx2:
            if (const KernelSet* k = avx2_kernels()) return *k;
            throw ValidationError("avx2 kernels unavailable on this machine");
        case KernelChoice::Neon:
            if (const KernelSet* k = neon_kernels()) return *k;
            throw ValidationError("neon kernels unavailable on this machine");
        case KernelChoice::Auto: {
            if (const KernelSet* k = avx2_kernels()) return *k;
            if (const KernelSet* k = neon_kernels()) return *k;
            return scalar_kernels();
        }
    }
    throw InternalError("bad kernel choice");
}

namespace {
const KernelSet*& active_slot() {
    static const KernelSet* active = &select_kernels(KernelChoice::Auto);
    return active;
}
} // namespace

const KernelSet& active_kernels() { return *active_slot(); }

void set_active_kernels(KernelChoice choice) { active_slot() = &select_kernels(choice); }

// --- descriptor comparison tables ----------------------------------------

namespace {

// tree node -> stencil offset under the fixed window convention
// (A=center, then B..I in row-major neighbor order)
constexpr std::array<std::uint8_t, 9> kNodeOffset{4, 0, 1, 2, 3, 5, 6, 7, 8};

constexpr std::array<std::uint8_t, 8> kNeighborOffsets{0, 1, 2, 3, 5, 6, 7, 8};

} // namespace

CodeSpec lttp_spec(int variant_index) {
    const auto& order = kTraversalOrder[variant_index];
    CodeSpec spec{};
    // weight of canonical edge e is 2^(7 - its traversal position)
    std::array<std::uint8_t, 8> weight{};
    for (int pos = 0; pos < 8; ++pos)
        weight[order[pos]] = static_cast<std::uint8_t>(128u >> pos);
    for (int e = 0; e < 8; ++e) {
        spec.ops[e] = {kNodeOffset[kTreeEdges[e].parent], kNodeOffset[kTreeEdges[e].child],
                       weight[e], 0};
    }
    return spec;
}

CodeSpec lbp_spec() {
    CodeSpec spec{};
    for (int i = 0; i < 8; ++i)
        spec.ops[i] = {kNeighborOffsets[i], 4, static_cast<std::uint8_t>(128u >> i), 0};
    return spec;
}

static void require_ltp_threshold(int threshold) {
    if (threshold < 0 || threshold > 255)
        throw ValidationError("ltp threshold must be in [0, 255]");
}

CodeSpec ltp_upper_spec(int threshold) {
    require_ltp_threshold(threshold);
    CodeSpec spec{};
    for (int i = 0; i < 8; ++i)
        spec.ops[i] = {kNeighborOffsets[i], 4, static_cast<std::uint8_t>(128u >> i),
                       static_cast<std::uint8_t>(threshold)};
    return spec;
}

CodeSpec ltp_lower_spec(int threshold) {
    require_ltp_threshold(threshold);
    // neighbor <= center - t, i.e. center >= neighbor + t. At t = 0 the +1
    // branch claims ties, leaving strict less: bias 1.
    const auto bias = static_cast<std::uint8_t>(threshold > 0 ? threshold : 1);
    CodeSpec spec{};
    for (int i = 0; i < 8; ++i)
        spec.ops[i] = {4, kNeighborOffsets[i], static_cast<std::uint8_t>(128u >> i), bias};
    return spec;
}

CodeSpec lgs_spec() {
    // visit order: X->NW, NW->SW, SW->X, X->E, E->NE, NE->SE, SE->E, E->X
    // offsets: X=4, NW=0, SW=6, E=5, NE=2, SE=8
    CodeSpec spec{};
    spec.ops = {{{4, 0, 128, 0},
                 {0, 6, 64, 0},
                 {6, 4, 32, 0},
                 {4, 5, 16, 0},
                 {5, 2, 8, 0},
                 {2, 8, 4, 0},
                 {8, 5, 2, 0},
                 {5, 4, 1, 0}}};
    return spec;
}

} // namespace lttp
