// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lttp {

/// One comparison inside a 3x3 stencil: contributes `weight` to the code
/// when pix[p] >= pix[q] + bias. Offsets p, q index the stencil row-major
/// (0=NW, 1=N, 2=NE, 3=W, 4=center, 5=E, 6=SW, 7=S, 8=SE).
struct CodeOp {
    std::uint8_t p;
    std::uint8_t q;
    std::uint8_t weight;  ///< power of two; distinct per op
    std::uint8_t bias;    ///< 0 for pure sign comparisons
};

/// Eight comparisons fully describe one 8-bit descriptor plane.
struct CodeSpec {
    std::array<CodeOp, 8> ops;

    bool all_bias_zero() const {
        for (const auto& op : ops)
            if (op.bias != 0) return false;
        return true;
    }
};

/// Computes codes for `n` consecutive stencil sites. Site i spans columns
/// [i, i+2] of the three rows; the code lands in out[i].
using CodeRowFn = void (*)(const std::uint8_t* top, const std::uint8_t* mid,
                           const std::uint8_t* bot, std::size_t n,
                           const CodeSpec& spec, std::uint8_t* out);

/// Reductions over float feature vectors. All accumulate in double, so for
/// integer-valued inputs (every descriptor output is) the results are exact
/// and bit-identical across kernel implementations.
using DotFn = double (*)(const float* a, const float* b, std::size_t n);
using SadFn = double (*)(const float* a, const float* b, std::size_t n);
using SqNormFn = double (*)(const float* a, std::size_t n);

struct KernelSet {
    const char* name;  // "scalar", "avx2", "neon"
    CodeRowFn code_row;
    DotFn dot;
    SadFn sad;
    SqNormFn sqnorm;
};

enum class KernelChoice { Auto, Scalar, Avx2, Neon };

KernelChoice kernel_choice_from_name(const std::string& name);

/// Portable scalar kernels; always present. This is the optimized scalar
/// path, distinct from the naive per-window reference in reference.hpp.
const KernelSet& scalar_kernels();

/// SIMD kernel sets: null when not compiled in or not supported by the
/// running CPU.
const KernelSet* avx2_kernels();
const KernelSet* neon_kernels();

/// All kernel sets usable on this machine, scalar first.
std::vector<const KernelSet*> available_kernels();

/// Resolve a choice against this machine. Auto picks the widest available
/// SIMD set. Throws ValidationError if a forced choice is unavailable.
const KernelSet& select_kernels(KernelChoice choice);

/// Process-wide active set used by the transforms. Defaults to Auto's pick.
const KernelSet& active_kernels();
void set_active_kernels(KernelChoice choice);

// --- descriptor comparison tables ----------------------------------------

/// LTTP edge comparisons with the variant's bit weights.
CodeSpec lttp_spec(int variant_index);

/// LBP: each neighbor vs center, row-major neighbor order MSB-first.
CodeSpec lbp_spec();

/// LTP planes. Upper: neighbor >= center + t. Lower: neighbor <= center - t,
/// realized as center >= neighbor + max(t, 1); the max keeps t = 0
/// consistent with the ternary rule where the +1 branch wins ties.
CodeSpec ltp_upper_spec(int threshold);
CodeSpec ltp_lower_spec(int threshold);

/// LGS directed-graph comparisons (6 stencil pixels, 8 edges).
CodeSpec lgs_spec();

} // namespace lttp
