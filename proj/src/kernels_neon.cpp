// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

// NEON kernel set for AArch64. Mirrors the AVX2 structure; reductions reuse
// the scalar implementations (they are already exact for integer-valued
// features, so there is nothing to gain in the accuracy contract).

#include <arm_neon.h>

#include "lttp/kernels.hpp"

namespace lttp::detail {

const KernelSet& scalar_kernel_set();

namespace {

void code_row_u8(const std::uint8_t* rows[3], std::size_t n, const CodeSpec& spec,
                 std::uint8_t* out) {
    struct Lane {
        const std::uint8_t* p;
        const std::uint8_t* q;
        uint8x16_t weight;
        std::uint8_t w8;
    };
    Lane lanes[8];
    for (int e = 0; e < 8; ++e) {
        const CodeOp& op = spec.ops[e];
        lanes[e] = {rows[op.p / 3] + op.p % 3, rows[op.q / 3] + op.q % 3,
                    vdupq_n_u8(op.weight), op.weight};
    }
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t code = vdupq_n_u8(0);
        for (const Lane& ln : lanes) {
            const uint8x16_t a = vld1q_u8(ln.p + i);
            const uint8x16_t b = vld1q_u8(ln.q + i);
            code = vorrq_u8(code, vandq_u8(vcgeq_u8(a, b), ln.weight));
        }
        vst1q_u8(out + i, code);
    }
    for (; i < n; ++i) {
        unsigned code = 0;
        for (const Lane& ln : lanes)
            if (ln.p[i] >= ln.q[i]) code |= ln.w8;
        out[i] = static_cast<std::uint8_t>(code);
    }
}

void code_row_u16(const std::uint8_t* rows[3], std::size_t n, const CodeSpec& spec,
                  std::uint8_t* out) {
    struct Lane {
        const std::uint8_t* p;
        const std::uint8_t* q;
        uint16x8_t weight;
        uint16x8_t bias;
        int ibias;
        std::uint8_t w8;
    };
    Lane lanes[8];
    for (int e = 0; e < 8; ++e) {
        const CodeOp& op = spec.ops[e];
        lanes[e] = {rows[op.p / 3] + op.p % 3, rows[op.q / 3] + op.q % 3,
                    vdupq_n_u16(op.weight),    vdupq_n_u16(op.bias),
                    op.bias,                   op.weight};
    }
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t code = vdupq_n_u16(0);
        for (const Lane& ln : lanes) {
            const uint16x8_t a = vmovl_u8(vld1_u8(ln.p + i));
            const uint16x8_t b = vaddq_u16(vmovl_u8(vld1_u8(ln.q + i)), ln.bias);
            code = vorrq_u16(code, vandq_u16(vcgeq_u16(a, b), ln.weight));
        }
        vst1_u8(out + i, vmovn_u16(code));
    }
    for (; i < n; ++i) {
        unsigned code = 0;
        for (const Lane& ln : lanes)
            if (int(ln.p[i]) >= int(ln.q[i]) + ln.ibias) code |= ln.w8;
        out[i] = static_cast<std::uint8_t>(code);
    }
}

void code_row_neon(const std::uint8_t* top, const std::uint8_t* mid,
                   const std::uint8_t* bot, std::size_t n, const CodeSpec& spec,
                   std::uint8_t* out) {
    const std::uint8_t* rows[3] = {top, mid, bot};
    if (spec.all_bias_zero())
        code_row_u8(rows, n, spec, out);
    else
        code_row_u16(rows, n, spec, out);
}

} // namespace

const KernelSet& neon_kernel_set() {
    const KernelSet& scalar = scalar_kernel_set();
    static const KernelSet set{"neon", code_row_neon, scalar.dot, scalar.sad,
                               scalar.sqnorm};
    return set;
}

} // namespace lttp::detail
