// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/ternary_tree.hpp"

#include "lttp/error.hpp"

namespace lttp {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::LD: return "ld";
        case Variant::LB: return "lb";
        case Variant::RD: return "rd";
        case Variant::RB: return "rb";
    }
    throw InternalError("bad variant");
}

Variant variant_from_name(const std::string& name) {
    if (name == "ld") return Variant::LD;
    if (name == "lb") return Variant::LB;
    if (name == "rd") return Variant::RD;
    if (name == "rb") return Variant::RB;
    throw ValidationError("unknown traversal variant: \"" + name + "\"");
}

TernaryTree build_ternary_tree(std::span<const std::uint8_t, 9> window) {
    // window row-major: NW N NE / W center E / SW S SE
    // nodes BFS:        A=center, B=NW, C=N, D=NE, E=W, F=E, G=SW, H=S, I=SE
    TernaryTree t;
    t.value[nA] = window[4];
    t.value[nB] = window[0];
    t.value[nC] = window[1];
    t.value[nD] = window[2];
    t.value[nE] = window[3];
    t.value[nF] = window[5];
    t.value[nG] = window[6];
    t.value[nH] = window[7];
    t.value[nI] = window[8];
    return t;
}

EdgeLabels label_edges(const TernaryTree& tree) {
    EdgeLabels labels;
    for (std::size_t i = 0; i < kTreeEdges.size(); ++i) {
        const int diff = int(tree.value[kTreeEdges[i].parent]) - int(tree.value[kTreeEdges[i].child]);
        labels.bit[i] = diff >= 0 ? 1 : 0;
    }
    return labels;
}

std::uint8_t encode_lttp(const EdgeLabels& labels, Variant variant) {
    const auto& order = kTraversalOrder[static_cast<int>(variant)];
    unsigned code = 0;
    for (int pos = 0; pos < 8; ++pos)
        code |= unsigned(labels.bit[order[pos]]) << (7 - pos);
    return static_cast<std::uint8_t>(code);
}

std::uint8_t lttp_code(std::span<const std::uint8_t, 9> window, Variant variant) {
    return encode_lttp(label_edges(build_ternary_tree(window)), variant);
}

} // namespace lttp
