#pragma once

// The height-preserving bijection phi from Dyck paths to full binary trees.
//
// phi(empty) is the single leaf. Otherwise the path is split by
// decompose_path, every piece is mapped by phi, and the images are glued with
// compose_tree at the same height h; a spine excursion with sign eps hangs on
// side (3 - eps) / 2. phi_inverse runs the same scheme in the other direction.
// Both use an explicit work stack, so input size is bounded by memory only.

#include <utility>

#include "strahler/dyck.hpp"
#include "strahler/tree.hpp"

namespace strahler {

BinaryTree phi(const DyckPath& d);
DyckPath phi_inverse(const BinaryTree& t);

constexpr Side side_for_sign(int eps) noexcept { return eps == 1 ? Side::left : Side::right; }
constexpr int sign_for_side(Side side) noexcept { return side == Side::left ? 1 : -1; }

// The path 01234543210 together with its image under phi.
std::pair<DyckPath, BinaryTree> golden_witness();

}  // namespace strahler
