// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace lttp {

/// Tree node ids in breadth-first order. The tree over one 3x3 window is
/// fixed: root A with children (B, C, D); B's child E; C's children
/// (F, G, H); D's child I. A always holds the window's center pixel.
enum TreeNode : std::uint8_t { nA = 0, nB, nC, nD, nE, nF, nG, nH, nI };

/// Nine node intensities of one window's tree, indexed by TreeNode.
struct TernaryTree {
    std::array<std::uint8_t, 9> value{};

    std::uint8_t operator[](TreeNode n) const { return value[n]; }
};

/// Directed parent -> child edge between tree nodes.
struct TreeEdge {
    TreeNode parent;
    TreeNode child;
};

/// The eight tree edges in canonical order (A->B, B->E, A->C, C->F, C->G,
/// C->H, A->D, D->I). EdgeLabels bits use this order.
inline constexpr std::array<TreeEdge, 8> kTreeEdges{{
    {nA, nB}, {nB, nE}, {nA, nC}, {nC, nF},
    {nC, nG}, {nC, nH}, {nA, nD}, {nD, nI},
}};

/// Binary edge labels in canonical edge order. Bit is 1 exactly when
/// parent - child >= 0 (ties label 1).
struct EdgeLabels {
    std::array<std::uint8_t, 8> bit{};

    bool operator==(const EdgeLabels&) const = default;
};

/// The four traversal orders. Each is a fixed permutation of the eight
/// edges; codes of the same window under different variants are bit
/// permutations of each other.
enum class Variant : int { LD = 0, LB, RD, RB };

inline constexpr std::array<Variant, 4> kAllVariants{Variant::LD, Variant::LB,
                                                     Variant::RD, Variant::RB};

/// Traversal position -> canonical edge index, per variant.
///   LD walks depth-first from the left subtree,
///   LB breadth-first left-to-right,
///   RD depth-first from the right subtree,
///   RB breadth-first right-to-left.
inline constexpr std::array<std::array<std::uint8_t, 8>, 4> kTraversalOrder{{
    {0, 1, 2, 3, 4, 5, 6, 7},  // LD: A->B, B->E, A->C, C->F, C->G, C->H, A->D, D->I
    {0, 2, 6, 1, 3, 4, 5, 7},  // LB: A->B, A->C, A->D, B->E, C->F, C->G, C->H, D->I
    {6, 7, 2, 5, 4, 3, 0, 1},  // RD: A->D, D->I, A->C, C->H, C->G, C->F, A->B, B->E
    {6, 2, 0, 7, 5, 4, 3, 1},  // RB: A->D, A->C, A->B, D->I, C->H, C->G, C->F, B->E
}};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // "ld" "lb" "rd" "rb"

/// Place a row-major 3x3 window onto the tree: center becomes A, the eight
/// neighbors fill B..I in breadth-first tree order matching row-major
/// window order, i.e. B=(-1,-1), C=(-1,0), D=(-1,+1), E=(0,-1), F=(0,+1),
/// G=(+1,-1), H=(+1,0), I=(+1,+1). This assignment is the project's fixed
/// convention; gallery and probe sides must (and here always do) share it.
TernaryTree build_ternary_tree(std::span<const std::uint8_t, 9> window);

/// Label every edge: 1 when parent - child >= 0, else 0.
EdgeLabels label_edges(const TernaryTree& tree);

/// Pack the labels along the variant's traversal, first edge as the most
/// significant bit (weight 2^7), into one 8-bit code.
std::uint8_t encode_lttp(const EdgeLabels& labels, Variant variant);

/// Convenience: tree -> labels -> code for one window.
std::uint8_t lttp_code(std::span<const std::uint8_t, 9> window, Variant variant);

} // namespace lttp
