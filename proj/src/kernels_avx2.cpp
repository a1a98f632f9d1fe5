// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 kernel set. Compiled with -mavx2; only dispatched to after a runtime
// __builtin_cpu_supports("avx2") check (see kernels.cpp).

#include <immintrin.h>

#include <cmath>

#include "lttp/kernels.hpp"

namespace lttp::detail {

namespace {

// 32 sites per iteration. Unsigned >= via max+cmpeq: (a >= b) <=> max(a,b)==a.
void code_row_u8(const std::uint8_t* rows[3], std::size_t n, const CodeSpec& spec,
                 std::uint8_t* out) {
    struct Lane {
        const std::uint8_t* p;
        const std::uint8_t* q;
        __m256i weight;
        std::uint8_t w8;
    };
    Lane lanes[8];
    for (int e = 0; e < 8; ++e) {
        const CodeOp& op = spec.ops[e];
        lanes[e] = {rows[op.p / 3] + op.p % 3, rows[op.q / 3] + op.q % 3,
                    _mm256_set1_epi8(static_cast<char>(op.weight)), op.weight};
    }
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i code = _mm256_setzero_si256();
        for (const Lane& ln : lanes) {
            const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ln.p + i));
            const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ln.q + i));
            const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(a, b), a);
            code = _mm256_or_si256(code, _mm256_and_si256(ge, ln.weight));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), code);
    }
    for (; i < n; ++i) {
        unsigned code = 0;
        for (const Lane& ln : lanes)
            if (ln.p[i] >= ln.q[i]) code |= ln.w8;
        out[i] = static_cast<std::uint8_t>(code);
    }
}

// Biased comparisons (LTP planes) widen to 16-bit lanes; values stay below
// 2^15 so signed compares are safe. 16 sites per iteration.
void code_row_u16(const std::uint8_t* rows[3], std::size_t n, const CodeSpec& spec,
                  std::uint8_t* out) {
    struct Lane {
        const std::uint8_t* p;
        const std::uint8_t* q;
        __m256i weight;
        __m256i bias;
        int ibias;
        std::uint8_t iweight;
    };
    Lane lanes[8];
    for (int e = 0; e < 8; ++e) {
        const CodeOp& op = spec.ops[e];
        lanes[e] = {rows[op.p / 3] + op.p % 3,       rows[op.q / 3] + op.q % 3,
                    _mm256_set1_epi16(op.weight),    _mm256_set1_epi16(op.bias),
                    op.bias,                         op.weight};
    }
    const __m256i one = _mm256_set1_epi16(1);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i code = _mm256_setzero_si256();
        for (const Lane& ln : lanes) {
            const __m256i a =
                _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(ln.p + i)));
            const __m256i b =
                _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(ln.q + i)));
            // a >= b + bias  <=>  a + 1 > b + bias
            const __m256i ge = _mm256_cmpgt_epi16(_mm256_add_epi16(a, one),
                                                  _mm256_add_epi16(b, ln.bias));
            code = _mm256_or_si256(code, _mm256_and_si256(ge, ln.weight));
        }
        const __m128i packed = _mm_packus_epi16(_mm256_castsi256_si128(code),
                                                _mm256_extracti128_si256(code, 1));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), packed);
    }
    for (; i < n; ++i) {
        unsigned code = 0;
        for (const Lane& ln : lanes)
            if (int(ln.p[i]) >= int(ln.q[i]) + ln.ibias) code |= ln.iweight;
        out[i] = static_cast<std::uint8_t>(code);
    }
}

void code_row_avx2(const std::uint8_t* top, const std::uint8_t* mid,
                   const std::uint8_t* bot, std::size_t n, const CodeSpec& spec,
                   std::uint8_t* out) {
    const std::uint8_t* rows[3] = {top, mid, bot};
    if (spec.all_bias_zero())
        code_row_u8(rows, n, spec, out);
    else
        code_row_u16(rows, n, spec, out);
}

// Reductions accumulate in 4 double lanes. For integer-valued features the
// partial sums are exact integers, so lane order cannot change the result
// and scalar/AVX2 outputs are bit-identical.

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_avx2(const float* a, const float* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d av = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        const __m256d bv = _mm256_cvtps_pd(_mm_loadu_ps(b + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, bv));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += double(a[i]) * double(b[i]);
    return s;
}

double sad_avx2(const float* a, const float* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d av = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        const __m256d bv = _mm256_cvtps_pd(_mm_loadu_ps(b + i));
        const __m256d d = _mm256_sub_pd(av, bv);
        acc = _mm256_add_pd(acc, _mm256_max_pd(d, _mm256_sub_pd(bv, av)));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(double(a[i]) - double(b[i]));
    return s;
}

double sqnorm_avx2(const float* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d av = _mm256_cvtps_pd(_mm_loadu_ps(a + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(av, av));
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += double(a[i]) * double(a[i]);
    return s;
}

} // namespace

const KernelSet& avx2_kernel_set() {
    static const KernelSet set{"avx2", code_row_avx2, dot_avx2, sad_avx2, sqnorm_avx2};
    return set;
}

} // namespace lttp::detail
