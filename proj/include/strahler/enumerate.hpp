#pragma once

// Exhaustive generators for D(n) and B(n), statistic histograms, and the
// verification harness comparing path heights with refined HS numbers.
//
// Paths are produced in lexicographic order of their step strings with U
// before D. Trees are produced in lexicographic order of their preorder codes
// with an internal vertex before a leaf, so the left comb comes first.
// Sharded runs split the work by a fixed structural prefix (a path step prefix
// or the size of the root's left subtree) and merge by addition, so parallel
// and serial runs give identical results.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "strahler/dyck.hpp"
#include "strahler/tree.hpp"

namespace strahler {

// C(n) for 0 <= n <= 33. Throws Errc::overflow_range above.
std::uint64_t catalan(std::size_t n);

// Paths of half-length n, optionally restricted to those starting with the
// given +1/-1 steps. Throws Errc::invalid_path if the prefix cannot be completed.
class DyckPathStream {
public:
    explicit DyckPathStream(std::size_t n, std::vector<int> prefix = {});

    std::optional<DyckPath> next();

private:
    bool advance();

    std::size_t n_;
    std::size_t fixed_;
    std::vector<int> steps_;
    std::vector<int> heights_;  // heights_[i] is the height before step i
    bool started_ = false;
    bool done_ = false;
};

// Trees with n internal vertices.
class FullBinaryTreeStream {
public:
    explicit FullBinaryTreeStream(std::size_t n);

    std::optional<BinaryTree> next();

private:
    bool advance();

    std::size_t n_;
    std::vector<std::uint8_t> code_;
    std::vector<std::size_t> need_;  // need_[i]: subtrees still owed before symbol i
    bool started_ = false;
};

// Trees with n internal vertices whose root has a left subtree with
// left_internal internal vertices (0 <= left_internal < n).
class RootSplitTreeStream {
public:
    RootSplitTreeStream(std::size_t n, std::size_t left_internal);

    std::optional<BinaryTree> next();

private:
    std::size_t right_internal_;
    FullBinaryTreeStream lefts_;
    FullBinaryTreeStream rights_;
    std::optional<BinaryTree> left_;
};

std::vector<DyckPath> all_dyck_paths(std::size_t n);
std::vector<BinaryTree> all_full_binary_trees(std::size_t n);

// A uniformly random path of half-length n (cycle lemma on n up steps and
// n + 1 down steps).
DyckPath uniform_dyck_path(std::size_t n, std::mt19937_64& rng);

// Every valid step prefix of the given length (clamped to 2n) for paths of half-length n.
std::vector<std::vector<int>> path_prefix_shards(std::size_t n, std::size_t prefix_steps);

struct Histogram {
    std::size_t n = 0;
    std::map<int, std::uint64_t> counts;  // no zero entries

    void add(int key, std::uint64_t count = 1);
    void merge(const Histogram& other);
    std::uint64_t total() const;
    std::uint64_t at(int key) const;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Shard worker count: the STRAHLER_MAX_THREADS environment variable caps the
// hardware concurrency; never below 1.
unsigned default_parallelism();

// |D_{n,h}| for every h.
Histogram histogram_by_height(std::size_t n);
// |B_{n,h}| for every h.
Histogram histogram_by_refined_hs(std::size_t n);
// |B-bar_{n,s}|, classical HS computed tree by tree.
Histogram histogram_by_classical_hs(std::size_t n);
// |D-bar_{n,s}|: paths grouped by floor(log2(1 + height)).
Histogram histogram_by_log_height(std::size_t n);

Histogram histogram_by_height_sharded(std::size_t n, std::size_t prefix_steps, unsigned threads);
Histogram histogram_by_refined_hs_sharded(std::size_t n, unsigned threads);

// Sums counts(h) over each dyadic block h in [2^s - 1, 2(2^s - 1)] into key s.
Histogram dyadic_aggregate(const Histogram& by_height);

struct HeightCell {
    int h = 0;
    std::uint64_t paths = 0;      // |D_{n,h}|
    std::uint64_t trees = 0;      // |B_{n,h}|
    std::uint64_t phi_image = 0;  // distinct phi images of D_{n,h}, all in B_{n,h}
    bool phi_in_cell = true;      // every image has n internal vertices and refined HS h
    bool match() const { return paths == trees && phi_in_cell && phi_image == paths; }
};

struct LogHeightCell {
    int s = 0;
    std::uint64_t paths = 0;       // |D-bar_{n,s}|
    std::uint64_t trees = 0;       // |B-bar_{n,s}| via classical HS
    std::uint64_t aggregated = 0;  // dyadic block sum of |B_{n,h}|
    bool match() const { return paths == trees && trees == aggregated; }
};

struct SizeReport {
    std::size_t n = 0;
    std::uint64_t catalan = 0;
    std::uint64_t path_total = 0;
    std::uint64_t tree_total = 0;
    std::vector<HeightCell> refined;
    std::vector<LogHeightCell> classical;
    bool pass() const;
};

struct TheoremReport {
    std::size_t max_n = 0;
    std::vector<SizeReport> sizes;
    std::size_t cells() const;
    std::size_t mismatches() const;
    bool pass() const { return mismatches() == 0; }
};

// Compares both sides cell by cell for every n <= max_n and checks that phi
// maps each D_{n,h} injectively into B_{n,h}. Mismatches are report contents.
// Throws Errc::overflow_range for max_n > 30.
TheoremReport verify_theorem(std::size_t max_n, unsigned threads = 1);
SizeReport verify_size(std::size_t n, unsigned threads = 1);

}  // namespace strahler
