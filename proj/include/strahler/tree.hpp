#pragma once

// Full binary trees, the interpolating family tau_r, refined and classical
// Horton-Strahler numbers, and the spinal decomposition of a tree.
//
// A tree is stored as its preorder code: one byte per vertex, 1 for an
// internal vertex and 0 for a leaf. Preorder on a full binary tree coincides
// with the lexicographic order on its vertex words, so position i in the code
// is the i-th vertex in lex order and every subtree is a contiguous slice.
// All traversals are iterative; no operation recurses on tree depth.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strahler/error.hpp"

namespace strahler {

// A letter of a vertex word: 1 = left child, 2 = right child.
enum class Side : std::uint8_t { left = 1, right = 2 };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }
constexpr int letter(Side s) noexcept { return static_cast<int>(s); }

// A word over {1,2} addressing a node of the infinite binary tree. The empty
// word is the root. Ordering is lexicographic with a proper prefix first.
class Vertex {
public:
    Vertex() = default;
    explicit Vertex(std::vector<Side> letters) : letters_(std::move(letters)) {}

    // Parses a word such as "212"; "" denotes the root.
    static Vertex parse(std::string_view word);

    std::size_t depth() const noexcept { return letters_.size(); }
    bool is_root() const noexcept { return letters_.empty(); }
    std::span<const Side> letters() const noexcept { return letters_; }

    Vertex parent() const;
    Vertex child(Side s) const;
    Vertex concat(const Vertex& suffix) const;

    // Ancestral order: true when *this is a (not necessarily proper) prefix of other.
    bool is_ancestor_of(const Vertex& other) const noexcept;

    friend Vertex meet(const Vertex& a, const Vertex& b);

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex& a, const Vertex& b) noexcept {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Side> letters_;
};

// Most recent common ancestor.
Vertex meet(const Vertex& a, const Vertex& b);

std::string to_string(const Vertex& v);

// Tag for constructing a tree from a code the caller has already validated.
struct unchecked_t {
    explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};

class BinaryTree {
public:
    static constexpr std::uint8_t kLeaf = 0;
    static constexpr std::uint8_t kInternal = 1;

    // The single-vertex tree {root}.
    BinaryTree() : code_{kLeaf} {}
    BinaryTree(std::vector<std::uint8_t> code, unchecked_t) : code_(std::move(code)) {}

    static BinaryTree leaf() { return {}; }
    static BinaryTree node(const BinaryTree& left, const BinaryTree& right);

    // Throws Errc::invalid_tree unless code is the preorder code of a full binary tree.
    static BinaryTree from_preorder(std::vector<std::uint8_t> code);
    // Throws Errc::invalid_tree unless the set is rooted, prefix-closed and full.
    static BinaryTree from_vertices(const std::set<Vertex>& vertices);

    std::set<Vertex> vertices() const;
    std::vector<Vertex> vertices_in_order() const;

    std::size_t vertex_count() const noexcept { return code_.size(); }
    std::size_t internal_count() const noexcept { return code_.size() / 2; }
    bool is_leaf() const noexcept { return code_.size() == 1; }

    // Both throw Errc::single_leaf on a leaf.
    BinaryTree left() const;
    BinaryTree right() const;

    std::span<const std::uint8_t> preorder() const noexcept { return code_; }

    // Preorder position of u, if u is a vertex of this tree.
    std::optional<std::size_t> locate(const Vertex& u) const;
    bool contains(const Vertex& u) const { return locate(u).has_value(); }

    // One past the last preorder position of the subtree rooted at pos.
    std::size_t subtree_end(std::size_t pos) const;

    // The subtree rooted at preorder position pos.
    BinaryTree slice(std::size_t pos) const;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend auto operator<=>(const BinaryTree& a, const BinaryTree& b) noexcept {
        return a.code_ <=> b.code_;
    }

private:
    std::vector<std::uint8_t> code_;
};

// Canonical text: leaf = ".", internal node = "(" left right ")".
std::string to_string(const BinaryTree& t);
// Throws Errc::parse_error on malformed or non-full input. Whitespace is ignored.
BinaryTree parse_tree(std::string_view text);

// tau_0 = {root}, tau_1 = cb(1), tau_2m = root + (tau_m, tau_{m-1}),
// tau_2m+1 = root + (tau_m, tau_m).
BinaryTree tau(std::uint64_t r);

// {u : |u| <= s}. Throws Errc::overflow_range for s > 30.
BinaryTree complete_binary(unsigned s);

// Exhaustive search for an injective, strictly lex-increasing, meet-preserving
// map small -> big. Exponential; intended as an oracle for small inputs.
bool can_embed(const BinaryTree& small, const BinaryTree& big);

// Refined HS number from the child values of an internal vertex.
constexpr int combine_refined_hs(int left, int right) noexcept {
    const int lo = left < right ? left : right;
    const int joined = 2 * lo + (left > right ? 1 : 0) + 1;
    int best = left > right ? left : right;
    return joined > best ? joined : best;
}

// S_v(t) for every vertex v, indexed by preorder position. One post-order pass.
std::vector<int> refined_hs_profile(const BinaryTree& t);

int refined_hs(const BinaryTree& t);
// Largest r with tau_r embeddable in t, by embedding search.
int refined_hs_oracle(const BinaryTree& t);

// floor(log2(1 + refined_hs(t))).
int classical_hs(const BinaryTree& t);
// Largest s with cb(s) embeddable in t, by embedding search.
int classical_hs_oracle(const BinaryTree& t);

// theta_u t. Throws Errc::vertex_not_in_tree.
BinaryTree subtree(const BinaryTree& t, const Vertex& u);

// The lex-maximal vertex u with S_u(t) = S(t); the root for a single leaf.
Vertex spine_vertex(const BinaryTree& t);

struct SpineEntry {
    Side side;  // the side of the spine vertex the hanging tree is attached on
    BinaryTree tree;

    friend bool operator==(const SpineEntry&, const SpineEntry&) = default;
};

struct SpinalDecomposition {
    int h = 0;
    BinaryTree fix;
    BinaryTree free;
    std::vector<SpineEntry> spine;

    friend bool operator==(const SpinalDecomposition&, const SpinalDecomposition&) = default;
};

// Throws Errc::single_leaf when refined_hs(t) == 0.
SpinalDecomposition decompose_tree(const BinaryTree& t);

// Reason the decomposition is not a valid image for height h, or nullopt.
// Requirements: h >= 1, dec.h == h, S(fix) == ceil(h/2) - 1,
// floor(h/2) <= S(free) <= h - 1, and each hanging tree within
// ceil(h/2) - 1 (left side) or floor(h/2) - 1 (right side).
std::optional<std::string> spinal_membership_error(int h, const SpinalDecomposition& dec);

// Inverse of decompose_tree. Throws Errc::membership_violation.
BinaryTree compose_tree(int h, const SpinalDecomposition& dec);

}  // namespace strahler
