// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "lttp/kernels.hpp"

namespace lttp::detail {

namespace {

void code_row_scalar(const std::uint8_t* top, const std::uint8_t* mid,
                     const std::uint8_t* bot, std::size_t n, const CodeSpec& spec,
                     std::uint8_t* out) {
    const std::uint8_t* rows[3] = {top, mid, bot};
    // resolve each op to a base pointer + weight once per row
    struct Resolved {
        const std::uint8_t* p;
        const std::uint8_t* q;
        int bias;
        std::uint8_t weight;
    };
    Resolved ops[8];
    for (int e = 0; e < 8; ++e) {
        const CodeOp& op = spec.ops[e];
        ops[e] = {rows[op.p / 3] + op.p % 3, rows[op.q / 3] + op.q % 3, op.bias, op.weight};
    }
    for (std::size_t i = 0; i < n; ++i) {
        unsigned code = 0;
        for (const Resolved& op : ops)
            if (int(op.p[i]) >= int(op.q[i]) + op.bias) code |= op.weight;
        out[i] = static_cast<std::uint8_t>(code);
    }
}

double dot_scalar(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += double(a[i]) * double(b[i]);
    return acc;
}

double sad_scalar(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += std::fabs(double(a[i]) - double(b[i]));
    return acc;
}

double sqnorm_scalar(const float* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += double(a[i]) * double(a[i]);
    return acc;
}

} // namespace

const KernelSet& scalar_kernel_set() {
    static const KernelSet set{"scalar", code_row_scalar, dot_scalar, sad_scalar,
                               sqnorm_scalar};
    return set;
}

} // namespace lttp::detail
