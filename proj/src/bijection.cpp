#include "strahler/bijection.hpp"

#include <optional>
#include <vector>

namespace strahler {

namespace {

// One level of a decomposition: pieces are ordered fix, free, spine_1..spine_l.
template <class Piece, class Label>
struct Level {
    int h = 0;
    std::vector<Label> labels;
    std::vector<Piece> pieces;
};

// Post-order evaluation of a piece-wise recursive map without recursion.
// split(x) yields the level below x, or nullopt when x is a base object that
// maps to a default-constructed To. join(h, labels, images) rebuilds a level.
template <class From, class To, class Label, class Split, class Join>
To unfold(const From& root, Split split, Join join) {
    struct Frame {
        Level<From, Label> level;
        std::vector<To> images;
    };

    std::optional<Level<From, Label>> top = split(root);
    if (!top) return To{};
    std::vector<Frame> stack;
    stack.push_back({std::move(*top), {}});
    while (true) {
        Frame& frame = stack.back();
        if (frame.images.size() < frame.level.pieces.size()) {
            From piece = std::move(frame.level.pieces[frame.images.size()]);
            if (auto below = split(piece)) {
                stack.push_back({std::move(*below), {}});
            } else {
                frame.images.emplace_back();
            }
            continue;
        }
        To built = join(frame.level.h, frame.level.labels, std::move(frame.images));
        stack.pop_back();
        if (stack.empty()) return built;
        stack.back().images.push_back(std::move(built));
    }
}

std::optional<Level<DyckPath, int>> split_path(const DyckPath& d) {
    if (d.empty()) return std::nullopt;
    PathDecomposition dec = decompose_path(d);
    Level<DyckPath, int> level;
    level.h = dec.h;
    level.pieces.reserve(2 + dec.spine.size());
    level.pieces.push_back(std::move(dec.fix));
    level.pieces.push_back(std::move(dec.free));
    for (auto& entry : dec.spine) {
        level.labels.push_back(entry.eps);
        level.pieces.push_back(std::move(entry.path));
    }
    return level;
}

BinaryTree join_trees(int h, const std::vector<int>& signs, std::vector<BinaryTree> images) {
    SpinalDecomposition dec;
    dec.h = h;
    dec.fix = std::move(images[0]);
    dec.free = std::move(images[1]);
    dec.spine.reserve(signs.size());
    for (std::size_t j = 0; j < signs.size(); ++j) {
        dec.spine.push_back({side_for_sign(signs[j]), std::move(images[2 + j])});
    }
    return compose_tree(h, dec);
}

std::optional<Level<BinaryTree, Side>> split_tree(const BinaryTree& t) {
    if (t.is_leaf()) return std::nullopt;
    SpinalDecomposition dec = decompose_tree(t);
    Level<BinaryTree, Side> level;
    level.h = dec.h;
    level.pieces.reserve(2 + dec.spine.size());
    level.pieces.push_back(std::move(dec.fix));
    level.pieces.push_back(std::move(dec.free));
    for (auto& entry : dec.spine) {
        level.labels.push_back(entry.side);
        level.pieces.push_back(std::move(entry.tree));
    }
    return level;
}

DyckPath join_paths(int h, const std::vector<Side>& sides, std::vector<DyckPath> images) {
    PathDecomposition dec;
    dec.h = h;
    dec.fix = std::move(images[0]);
    dec.free = std::move(images[1]);
    dec.spine.reserve(sides.size());
    for (std::size_t j = 0; j < sides.size(); ++j) {
        dec.spine.push_back({sign_for_side(sides[j]), std::move(images[2 + j])});
    }
    return compose_path(h, dec);
}

}  // namespace

BinaryTree phi(const DyckPath& d) { return unfold<DyckPath, BinaryTree, int>(d, split_path, join_trees); }

DyckPath phi_inverse(const BinaryTree& t) { return unfold<BinaryTree, DyckPath, Side>(t, split_tree, join_paths); }

std::pair<DyckPath, BinaryTree> golden_witness() {
    DyckPath d = DyckPath::from_heights({0, 1, 2, 3, 4, 5, 4, 3, 2, 1, 0});
    BinaryTree t = phi(d);
    return {std::move(d), std::move(t)};
}

}  // namespace strahler
