#include <cstddef>
#include <map>
#include <vector>

#include "strahler/tree.hpp"

namespace strahler {

namespace {

// meet_index[a][b] is the preorder index of the meet of vertices a and b.
std::vector<std::vector<std::size_t>> meet_table(const std::vector<Vertex>& words) {
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
    std::vector<std::vector<std::size_t>> table(words.size(), std::vector<std::size_t>(words.size()));
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            const auto m = index.at(meet(words[a], words[b]));
            table[a][b] = m;
            table[b][a] = m;
        }
    }
    return table;
}

class EmbeddingSearch {
public:
    EmbeddingSearch(const BinaryTree& small, const BinaryTree& big)
        : small_meet_(meet_table(small.vertices_in_order())),
          big_meet_(meet_table(big.vertices_in_order())),
          image_(small.vertex_count()) {}

    bool run() { return assign(0, 0); }

private:
    // Preorder is lex order, so a strictly lex-increasing map sends the k-th
    // vertex of small to a big vertex with index above the (k-1)-th image.
    bool assign(std::size_t k, std::size_t first_candidate) {
        const std::size_t count = image_.size();
        if (k == count) return true;
        const std::size_t big_count = big_meet_.size();
        for (std::size_t y = first_candidate; y + (count - k) <= big_count; ++y) {
            if (!meets_preserved(k, y)) continue;
            image_[k] = y;
            if (assign(k + 1, y + 1)) return true;
        }
        return false;
    }

    // The meet of k with an earlier vertex is an ancestor of k, hence earlier
    // in lex order and already mapped.
    bool meets_preserved(std::size_t k, std::size_t y) const {
        for (std::size_t b = 0; b < k; ++b) {
            const std::size_t m = small_meet_[k][b];
            const std::size_t expected = m == k ? y : image_[m];
            if (big_meet_[y][image_[b]] != expected) return false;
        }
        return true;
    }

    std::vector<std::vector<std::size_t>> small_meet_;
    std::vector<std::vector<std::size_t>> big_meet_;
    std::vector<std::size_t> image_;
};

}  // namespace

bool can_embed(const BinaryTree& small, const BinaryTree& big) {
    if (small.vertex_count() > big.vertex_count()) return false;
    return EmbeddingSearch(small, big).run();
}

}  // namespace strahler
