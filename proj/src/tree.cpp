#include "strahler/tree.hpp"

#include <algorithm>
#include <utility>

namespace strahler {

namespace {

// subtree end for every preorder position, via a reverse scan.
std::vector<std::size_t> all_subtree_ends(std::span<const std::uint8_t> code) {
    std::vector<std::size_t> end(code.size());
    std::vector<std::size_t> stack;
    for (std::size_t i = code.size(); i-- > 0;) {
        if (code[i] == BinaryTree::kLeaf) {
            end[i] = i + 1;
        } else {
            stack.pop_back();  // left child
            end[i] = end[stack.back()];
            stack.pop_back();  // right child
        }
        stack.push_back(i);
    }
    return end;
}

bool is_valid_code(std::span<const std::uint8_t> code) {
    std::size_t need = 1;
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (need == 0) return false;
        if (code[i] == BinaryTree::kInternal) {
            ++need;
        } else if (code[i] == BinaryTree::kLeaf) {
            --need;
        } else {
            return false;
        }
    }
    return need == 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Vertex

Vertex Vertex::parse(std::string_view word) {
    std::vector<Side> letters;
    letters.reserve(word.size());
    for (char c : word) {
        if (c == '1') {
            letters.push_back(Side::left);
        } else if (c == '2') {
            letters.push_back(Side::right);
        } else {
            throw Error(Errc::invalid_vertex, "letters must be 1 or 2, got '" + std::string(word) + "'");
        }
    }
    return Vertex(std::move(letters));
}

Vertex Vertex::parent() const {
    if (letters_.empty()) throw Error(Errc::invalid_vertex, "the root has no parent");
    return Vertex(std::vector<Side>(letters_.begin(), letters_.end() - 1));
}

Vertex Vertex::child(Side s) const {
    auto letters = letters_;
    letters.push_back(s);
    return Vertex(std::move(letters));
}

Vertex Vertex::concat(const Vertex& suffix) const {
    auto letters = letters_;
    letters.insert(letters.end(), suffix.letters_.begin(), suffix.letters_.end());
    return Vertex(std::move(letters));
}

bool Vertex::is_ancestor_of(const Vertex& other) const noexcept {
    return letters_.size() <= other.letters_.size() &&
           std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

Vertex meet(const Vertex& a, const Vertex& b) {
    auto [ia, ib] = std::mismatch(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
    return Vertex(std::vector<Side>(a.letters_.begin(), ia));
}

std::string to_string(const Vertex& v) {
    if (v.is_root()) return "∅";
    std::string out;
    for (Side s : v.letters()) out.push_back(static_cast<char>('0' + letter(s)));
    return out;
}

// ---------------------------------------------------------------------------
// BinaryTree

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
    std::vector<std::uint8_t> code;
    code.reserve(1 + left.code_.size() + right.code_.size());
    code.push_back(kInternal);
    code.insert(code.end(), left.code_.begin(), left.code_.end());
    code.insert(code.end(), right.code_.begin(), right.code_.end());
    return BinaryTree(std::move(code), unchecked);
}

BinaryTree BinaryTree::from_preorder(std::vector<std::uint8_t> code) {
    if (!is_valid_code(code)) throw Error(Errc::invalid_tree, "not the preorder code of a full binary tree");
    return BinaryTree(std::move(code), unchecked);
}

BinaryTree BinaryTree::from_vertices(const std::set<Vertex>& vertices) {
    if (!vertices.contains(Vertex{})) throw Error(Errc::invalid_tree, "vertex set lacks the root");
    std::vector<std::uint8_t> code;
    code.reserve(vertices.size());
    for (const Vertex& u : vertices) {
        if (!u.is_root() && !vertices.contains(u.parent())) {
            throw Error(Errc::invalid_tree, "not prefix-closed at " + to_string(u));
        }
        const bool has_left = vertices.contains(u.child(Side::left));
        const bool has_right = vertices.contains(u.child(Side::right));
        if (has_left != has_right) throw Error(Errc::invalid_tree, "not full at " + to_string(u));
        code.push_back(has_left ? kInternal : kLeaf);
    }
    // std::set iterates in lex order, which is preorder.
    return BinaryTree(std::move(code), unchecked);
}

std::vector<Vertex> BinaryTree::vertices_in_order() const {
    std::vector<Vertex> out;
    out.reserve(code_.size());
    // Stack of words still to visit; the right child is pushed under the left.
    std::vector<Vertex> pending{Vertex{}};
    for (std::uint8_t c : code_) {
        Vertex u = std::move(pending.back());
        pending.pop_back();
        if (c == kInternal) {
            pending.push_back(u.child(Side::right));
            pending.push_back(u.child(Side::left));
        }
        out.push_back(std::move(u));
    }
    return out;
}

std::set<Vertex> BinaryTree::vertices() const {
    auto ordered = vertices_in_order();
    return {std::make_move_iterator(ordered.begin()), std::make_move_iterator(ordered.end())};
}

BinaryTree BinaryTree::left() const {
    if (is_leaf()) throw Error(Errc::single_leaf, "a leaf has no children");
    return slice(1);
}

BinaryTree BinaryTree::right() const {
    if (is_leaf()) throw Error(Errc::single_leaf, "a leaf has no children");
    return slice(subtree_end(1));
}

std::size_t BinaryTree::subtree_end(std::size_t pos) const {
    std::size_t need = 1;
    std::size_t i = pos;
    while (need > 0) {
        need = code_[i] == kInternal ? need + 1 : need - 1;
        ++i;
    }
    return i;
}

BinaryTree BinaryTree::slice(std::size_t pos) const {
    const auto end = subtree_end(pos);
    return BinaryTree(std::vector<std::uint8_t>(code_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                code_.begin() + static_cast<std::ptrdiff_t>(end)),
                      unchecked);
}

std::optional<std::size_t> BinaryTree::locate(const Vertex& u) const {
    std::size_t pos = 0;
    for (Side s : u.letters()) {
        if (code_[pos] == kLeaf) return std::nullopt;
        pos = s == Side::left ? pos + 1 : subtree_end(pos + 1);
    }
    return pos;
}

std::string to_string(const BinaryTree& t) {
    std::string out;
    const auto code = t.preorder();
    out.reserve(code.size() + code.size() / 2);
    // Children still to be printed for each open node.
    std::vector<int> open;
    for (std::uint8_t c : code) {
        if (c == BinaryTree::kInternal) {
            out.push_back('(');
            open.push_back(2);
            continue;
        }
        out.push_back('.');
        while (!open.empty() && --open.back() == 0) {
            open.pop_back();
            out.push_back(')');
        }
    }
    return out;
}

BinaryTree parse_tree(std::string_view text) {
    std::vector<std::uint8_t> code;
    code.reserve(text.size());
    std::vector<int> open;  // children read so far for each open node
    bool done = false;
    auto fail = [&](const std::string& why) -> BinaryTree {
        throw Error(Errc::parse_error, "tree '" + std::string(text.substr(0, 64)) + "': " + why);
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '(' || c == '.') {
            if (done) return fail("trailing input after a complete tree");
            if (!open.empty()) {
                if (open.back() == 2) return fail("node with more than two children");
                ++open.back();
            }
            if (c == '(') {
                code.push_back(BinaryTree::kInternal);
                open.push_back(0);
            } else {
                code.push_back(BinaryTree::kLeaf);
                if (open.empty()) done = true;
            }
        } else if (c == ')') {
            if (open.empty()) return fail("unbalanced ')'");
            if (open.back() != 2) return fail("internal node must have exactly two children");
            open.pop_back();
            if (open.empty()) done = true;
        } else {
            return fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (!done) return fail(code.empty() ? "empty input" : "unterminated node");
    return BinaryTree(std::move(code), unchecked);
}

// ---------------------------------------------------------------------------
// Tree families and statistics

BinaryTree tau(std::uint64_t r) {
    if (r == 0) return BinaryTree::leaf();
    return BinaryTree::node(tau(r / 2), tau((r - 1) / 2));
}

BinaryTree complete_binary(unsigned s) {
    if (s > 30) throw Error(Errc::overflow_range, "complete_binary height above 30");
    std::vector<std::uint8_t> code;
    code.reserve((std::size_t{2} << s) - 1);
    // Depth of each pending vertex; preorder walk without recursion.
    std::vector<unsigned> pending{0};
    while (!pending.empty()) {
        const unsigned depth = pending.back();
        pending.pop_back();
        if (depth < s) {
            code.push_back(BinaryTree::kInternal);
            pending.push_back(depth + 1);
            pending.push_back(depth + 1);
        } else {
            code.push_back(BinaryTree::kLeaf);
        }
    }
    return BinaryTree(std::move(code), unchecked);
}

std::vector<int> refined_hs_profile(const BinaryTree& t) {
    const auto code = t.preorder();
    std::vector<int> hs(code.size());
    // Reverse preorder visits right subtrees before left ones, so the top of
    // the stack holds the left child when its parent is reached.
    std::vector<int> stack;
    for (std::size_t i = code.size(); i-- > 0;) {
        if (code[i] == BinaryTree::kLeaf) {
            hs[i] = 0;
        } else {
            const int left = stack.back();
            stack.pop_back();
            const int right = stack.back();
            stack.pop_back();
            hs[i] = combine_refined_hs(left, right);
        }
        stack.push_back(hs[i]);
    }
    return hs;
}

int refined_hs(const BinaryTree& t) { return refined_hs_profile(t).front(); }

int classical_hs(const BinaryTree& t) {
    const auto r = static_cast<unsigned>(refined_hs(t)) + 1;
    int s = 0;
    while ((r >> (s + 1)) != 0) ++s;
    return s;
}

int refined_hs_oracle(const BinaryTree& t) {
    // tau_r has 2r+1 vertices, so the search is bounded by the size of t.
    int r = 0;
    while (2 * static_cast<std::size_t>(r + 1) + 1 <= t.vertex_count() &&
           can_embed(tau(static_cast<std::uint64_t>(r + 1)), t)) {
        ++r;
    }
    return r;
}

int classical_hs_oracle(const BinaryTree& t) {
    unsigned s = 0;
    while ((std::size_t{2} << (s + 1)) - 1 <= t.vertex_count() && can_embed(complete_binary(s + 1), t)) ++s;
    return static_cast<int>(s);
}

BinaryTree subtree(const BinaryTree& t, const Vertex& u) {
    const auto pos = t.locate(u);
    if (!pos) throw Error(Errc::vertex_not_in_tree, to_string(u) + " is not a vertex of " + to_string(t));
    return t.slice(*pos);
}

// ---------------------------------------------------------------------------
// Spinal decomposition

namespace {

struct SpineWalk {
    std::vector<Side> path;          // u_1 .. u_l
    std::vector<std::size_t> hangs;  // preorder position of each hanging tree
    std::size_t tip = 0;             // preorder position of u
    std::size_t tip_left = 0;
    std::size_t tip_right = 0;
    int h = 0;
};

SpineWalk walk_spine(const BinaryTree& t) {
    const auto code = t.preorder();
    const auto hs = refined_hs_profile(t);
    const auto end = all_subtree_ends(code);
    SpineWalk w;
    w.h = hs[0];
    std::size_t pos = 0;
    while (code[pos] == BinaryTree::kInternal) {
        const std::size_t l = pos + 1;
        const std::size_t r = end[l];
        if (hs[r] == w.h) {
            w.path.push_back(Side::right);
            w.hangs.push_back(l);
            pos = r;
        } else if (hs[l] == w.h) {
            w.path.push_back(Side::left);
            w.hangs.push_back(r);
            pos = l;
        } else {
            w.tip_left = l;
            w.tip_right = r;
            break;
        }
    }
    w.tip = pos;
    return w;
}

}  // namespace

Vertex spine_vertex(const BinaryTree& t) { return Vertex(walk_spine(t).path); }

SpinalDecomposition decompose_tree(const BinaryTree& t) {
    auto w = walk_spine(t);
    if (w.h == 0) throw Error(Errc::single_leaf, "a single leaf has no spinal decomposition");
    SpinalDecomposition dec;
    dec.h = w.h;
    const bool even = w.h % 2 == 0;
    dec.free = t.slice(even ? w.tip_left : w.tip_right);
    dec.fix = t.slice(even ? w.tip_right : w.tip_left);
    dec.spine.reserve(w.path.size());
    for (std::size_t j = 0; j < w.path.size(); ++j) {
        dec.spine.push_back({opposite(w.path[j]), t.slice(w.hangs[j])});
    }
    return dec;
}

std::optional<std::string> spinal_membership_error(int h, const SpinalDecomposition& dec) {
    if (h < 1) return "height must be positive";
    if (dec.h != h) return "decomposition records h=" + std::to_string(dec.h) + ", expected " + std::to_string(h);
    const int ceil_half = (h + 1) / 2;
    const int floor_half = h / 2;
    if (const int s = refined_hs(dec.fix); s != ceil_half - 1) {
        return "fix has refined HS " + std::to_string(s) + ", expected " + std::to_string(ceil_half - 1);
    }
    if (const int s = refined_hs(dec.free); s < floor_half || s > h - 1) {
        return "free has refined HS " + std::to_string(s) + ", outside [" + std::to_string(floor_half) + ", " +
               std::to_string(h - 1) + "]";
    }
    for (std::size_t j = 0; j < dec.spine.size(); ++j) {
        const auto& entry = dec.spine[j];
        const int bound = entry.side == Side::left ? ceil_half - 1 : floor_half - 1;
        if (const int s = refined_hs(entry.tree); s > bound) {
            return "spine tree " + std::to_string(j + 1) + " has refined HS " + std::to_string(s) +
                   ", above " + std::to_string(bound);
        }
    }
    return std::nullopt;
}

BinaryTree compose_tree(int h, const SpinalDecomposition& dec) {
    if (auto why = spinal_membership_error(h, dec)) throw Error(Errc::membership_violation, *why);

    std::size_t total = 1 + dec.fix.vertex_count() + dec.free.vertex_count();
    for (const auto& entry : dec.spine) total += 1 + entry.tree.vertex_count();
    std::vector<std::uint8_t> code;
    code.reserve(total);
    auto append = [&code](const BinaryTree& part) {
        code.insert(code.end(), part.preorder().begin(), part.preorder().end());
    };

    // A tree hanging on the right of the spine follows, in preorder, everything
    // below the spine vertex it hangs from; those are emitted deepest first.
    std::vector<const BinaryTree*> deferred;
    for (const auto& entry : dec.spine) {
        code.push_back(BinaryTree::kInternal);
        if (entry.side == Side::left) {
            append(entry.tree);
        } else {
            deferred.push_back(&entry.tree);
        }
    }
    code.push_back(BinaryTree::kInternal);
    const bool even = h % 2 == 0;
    append(even ? dec.free : dec.fix);
    append(even ? dec.fix : dec.free);
    for (auto it = deferred.rbegin(); it != deferred.rend(); ++it) append(**it);
    return BinaryTree(std::move(code), unchecked);
}

}  // namespace strahler
