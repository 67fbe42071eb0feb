#include "strahler/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "strahler/bijection.hpp"

namespace strahler {

std::uint64_t catalan(std::size_t n) {
    if (n > 33) throw Error(Errc::overflow_range, "catalan(" + std::to_string(n) + ") exceeds the 64-bit range");
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    }
    return c[n];
}

// ---------------------------------------------------------------------------
// Streams

DyckPathStream::DyckPathStream(std::size_t n, std::vector<int> prefix)
    : n_(n), fixed_(prefix.size()), steps_(2 * n), heights_(2 * n + 1, 0) {
    if (prefix.size() > 2 * n) throw Error(Errc::invalid_path, "prefix longer than the path");
    std::size_t ups = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (prefix[i] != 1 && prefix[i] != -1) throw Error(Errc::invalid_path, "prefix steps must be +1 or -1");
        steps_[i] = prefix[i];
        heights_[i + 1] = heights_[i] + prefix[i];
        if (heights_[i + 1] < 0) throw Error(Errc::invalid_path, "prefix goes below zero");
        if (prefix[i] == 1) ++ups;
    }
    if (ups > n || prefix.size() - ups > n) throw Error(Errc::invalid_path, "prefix cannot be completed");
    // Smallest completion: all remaining up steps first.
    std::size_t remaining_ups = n - ups;
    for (std::size_t i = prefix.size(); i < 2 * n; ++i) {
        steps_[i] = remaining_ups > 0 ? 1 : -1;
        if (remaining_ups > 0) --remaining_ups;
        heights_[i + 1] = heights_[i] + steps_[i];
    }
}

bool DyckPathStream::advance() {
    // Rightmost free U that can become D, then the smallest completion after it.
    std::size_t ups_before = 0;
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        if (steps_[i] == 1) ++ups_before;
    }
    for (std::size_t i = 2 * n_; i-- > fixed_;) {
        if (steps_[i] == 1) --ups_before;
        if (steps_[i] != 1 || heights_[i] < 1) continue;
        steps_[i] = -1;
        heights_[i + 1] = heights_[i] - 1;
        std::size_t remaining_ups = n_ - ups_before;
        for (std::size_t k = i + 1; k < 2 * n_; ++k) {
            steps_[k] = remaining_ups > 0 ? 1 : -1;
            if (remaining_ups > 0) --remaining_ups;
            heights_[k + 1] = heights_[k] + steps_[k];
        }
        return true;
    }
    return false;
}

std::optional<DyckPath> DyckPathStream::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    return DyckPath(heights_, unchecked);
}

FullBinaryTreeStream::FullBinaryTreeStream(std::size_t n) : n_(n), code_(2 * n + 1), need_(2 * n + 2) {
    // Left comb: all internal vertices first.
    need_[0] = 1;
    for (std::size_t i = 0; i <= 2 * n; ++i) {
        code_[i] = i < n ? BinaryTree::kInternal : BinaryTree::kLeaf;
        need_[i + 1] = code_[i] == BinaryTree::kInternal ? need_[i] + 1 : need_[i] - 1;
    }
}

bool FullBinaryTreeStream::advance() {
    std::size_t internal_before = n_;
    // The final symbol is always a leaf.
    for (std::size_t i = 2 * n_; i-- > 0;) {
        if (code_[i] == BinaryTree::kInternal) --internal_before;
        if (code_[i] != BinaryTree::kInternal || need_[i] < 2) continue;
        code_[i] = BinaryTree::kLeaf;
        need_[i + 1] = need_[i] - 1;
        std::size_t remaining = n_ - internal_before;
        for (std::size_t k = i + 1; k <= 2 * n_; ++k) {
            code_[k] = remaining > 0 ? BinaryTree::kInternal : BinaryTree::kLeaf;
            if (remaining > 0) --remaining;
            need_[k + 1] = code_[k] == BinaryTree::kInternal ? need_[k] + 1 : need_[k] - 1;
        }
        return true;
    }
    return false;
}

std::optional<BinaryTree> FullBinaryTreeStream::next() {
    if (code_.empty()) return std::nullopt;
    if (started_ && !advance()) {
        code_.clear();
        return std::nullopt;
    }
    started_ = true;
    return BinaryTree(code_, unchecked);
}

RootSplitTreeStream::RootSplitTreeStream(std::size_t n, std::size_t left_internal)
    : right_internal_(n > left_internal ? n - 1 - left_internal : 0),
      lefts_(left_internal),
      rights_(right_internal_) {
    if (left_internal >= n) throw Error(Errc::invalid_tree, "root split needs left_internal < n");
    left_ = lefts_.next();
}

std::optional<BinaryTree> RootSplitTreeStream::next() {
    while (left_) {
        if (auto right = rights_.next()) return BinaryTree::node(*left_, *right);
        left_ = lefts_.next();
        rights_ = FullBinaryTreeStream(right_internal_);
    }
    return std::nullopt;
}

std::vector<DyckPath> all_dyck_paths(std::size_t n) {
    std::vector<DyckPath> out;
    DyckPathStream stream(n);
    while (auto d = stream.next()) out.push_back(std::move(*d));
    return out;
}

std::vector<BinaryTree> all_full_binary_trees(std::size_t n) {
    std::vector<BinaryTree> out;
    FullBinaryTreeStream stream(n);
    while (auto t = stream.next()) out.push_back(std::move(*t));
    return out;
}

DyckPath uniform_dyck_path(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> steps(2 * n + 1, -1);
    std::fill(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(n), 1);
    std::shuffle(steps.begin(), steps.end(), rng);
    // Exactly one rotation stays nonnegative until its last step: the one
    // starting just after the first minimum of the partial sums.
    int sum = 0;
    int best = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        sum += steps[i];
        if (sum < best) {
            best = sum;
            start = i + 1;
        }
    }
    std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start % steps.size()), steps.end());
    steps.pop_back();
    return DyckPath::from_steps(steps);
}

std::vector<std::vector<int>> path_prefix_shards(std::size_t n, std::size_t prefix_steps) {
    const std::size_t len = std::min(prefix_steps, 2 * n);
    std::vector<std::vector<int>> out;
    // Odometer over +1/-1 strings in U-before-D order, keeping completable ones.
    std::vector<int> prefix(len, 1);
    while (true) {
        int h = 0;
        std::size_t ups = 0;
        bool ok = true;
        for (int s : prefix) {
            h += s;
            ups += s == 1 ? 1 : 0;
            if (h < 0) ok = false;
        }
        if (ok && ups <= n && len - ups <= n) out.push_back(prefix);
        std::size_t i = len;
        while (i > 0 && prefix[i - 1] == -1) {
            prefix[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
        prefix[i - 1] = -1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Histograms

void Histogram::add(int key, std::uint64_t count) {
    if (count == 0) return;
    counts[key] += count;
}

void Histogram::merge(const Histogram& other) {
    for (const auto& [key, count] : other.counts) add(key, count);
}

std::uint64_t Histogram::total() const {
    std::uint64_t sum = 0;
    for (const auto& [key, count] : counts) sum += count;
    return sum;
}

std::uint64_t Histogram::at(int key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

unsigned default_parallelism() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("STRAHLER_MAX_THREADS")) {
        const long value = std::strtol(cap, nullptr, 10);
        if (value >= 1) threads = std::min(threads, static_cast<unsigned>(value));
    }
    return threads;
}

namespace {

int log_height(int h) {
    int s = 0;
    while (((static_cast<unsigned>(h) + 1) >> (s + 1)) != 0) ++s;
    return s;
}

// Runs work(i) for every shard i on up to `threads` workers; results are
// returned in shard order.
template <class Result, class Work>
std::vector<Result> run_shards(std::size_t shard_count, unsigned threads, Work work) {
    std::vector<Result> results(shard_count);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), shard_count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < shard_count; ++i) results[i] = work(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < shard_count; i = next++) results[i] = work(i);
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

template <class Stream, class Key>
Histogram histogram_of(std::size_t n, Stream stream, Key key) {
    Histogram hist;
    hist.n = n;
    while (auto x = stream.next()) hist.add(key(*x));
    return hist;
}

}  // namespace

Histogram histogram_by_height(std::size_t n) {
    return histogram_of(n, DyckPathStream(n), [](const DyckPath& d) { return d.height(); });
}

Histogram histogram_by_refined_hs(std::size_t n) {
    return histogram_of(n, FullBinaryTreeStream(n), [](const BinaryTree& t) { return refined_hs(t); });
}

Histogram histogram_by_classical_hs(std::size_t n) {
    return histogram_of(n, FullBinaryTreeStream(n), [](const BinaryTree& t) { return classical_hs(t); });
}

Histogram histogram_by_log_height(std::size_t n) {
    return histogram_of(n, DyckPathStream(n), [](const DyckPath& d) { return log_height(d.height()); });
}

Histogram histogram_by_height_sharded(std::size_t n, std::size_t prefix_steps, unsigned threads) {
    const auto shards = path_prefix_shards(n, prefix_steps);
    auto parts = run_shards<Histogram>(shards.size(), threads, [&](std::size_t i) {
        return histogram_of(n, DyckPathStream(n, shards[i]), [](const DyckPath& d) { return d.height(); });
    });
    Histogram hist;
    hist.n = n;
    for (const auto& part : parts) hist.merge(part);
    return hist;
}

Histogram histogram_by_refined_hs_sharded(std::size_t n, unsigned threads) {
    if (n == 0) return histogram_by_refined_hs(0);
    auto parts = run_shards<Histogram>(n, threads, [&](std::size_t k) {
        return histogram_of(n, RootSplitTreeStream(n, k), [](const BinaryTree& t) { return refined_hs(t); });
    });
    Histogram hist;
    hist.n = n;
    for (const auto& part : parts) hist.merge(part);
    return hist;
}

Histogram dyadic_aggregate(const Histogram& by_height) {
    Histogram out;
    out.n = by_height.n;
    for (const auto& [h, count] : by_height.counts) out.add(log_height(h), count);
    return out;
}

// ---------------------------------------------------------------------------
// Verification

bool SizeReport::pass() const {
    if (path_total != catalan || tree_total != catalan) return false;
    return std::all_of(refined.begin(), refined.end(), [](const HeightCell& c) { return c.match(); }) &&
           std::all_of(classical.begin(), classical.end(), [](const LogHeightCell& c) { return c.match(); });
}

std::size_t TheoremReport::cells() const {
    std::size_t total = 0;
    for (const auto& s : sizes) total += s.refined.size() + s.classical.size();
    return total;
}

std::size_t TheoremReport::mismatches() const {
    std::size_t bad = 0;
    for (const auto& s : sizes) {
        for (const auto& c : s.refined) bad += c.match() ? 0 : 1;
        for (const auto& c : s.classical) bad += c.match() ? 0 : 1;
        if (s.path_total != s.catalan || s.tree_total != s.catalan) ++bad;
    }
    return bad;
}

namespace {

struct PhiShard {
    std::map<int, std::set<BinaryTree>> images;
    std::map<int, bool> in_cell;
};

}  // namespace

SizeReport verify_size(std::size_t n, unsigned threads) {
    SizeReport report;
    report.n = n;
    report.catalan = catalan(n);

    const std::size_t prefix_steps = threads > 1 ? std::min<std::size_t>(2 * n, 8) : 0;
    const Histogram paths = threads > 1 ? histogram_by_height_sharded(n, prefix_steps, threads) : histogram_by_height(n);
    const Histogram trees = threads > 1 ? histogram_by_refined_hs_sharded(n, threads) : histogram_by_refined_hs(n);
    const Histogram log_paths = histogram_by_log_height(n);
    const Histogram classical_trees = histogram_by_classical_hs(n);
    const Histogram aggregated = dyadic_aggregate(trees);
    report.path_total = paths.total();
    report.tree_total = trees.total();

    const auto shards = path_prefix_shards(n, prefix_steps);
    auto parts = run_shards<PhiShard>(shards.size(), threads, [&](std::size_t i) {
        PhiShard shard;
        DyckPathStream stream(n, shards[i]);
        while (auto d = stream.next()) {
            BinaryTree t = phi(*d);
            const int h = d->height();
            const bool ok = t.internal_count() == n && refined_hs(t) == h;
            auto [it, fresh] = shard.in_cell.try_emplace(h, true);
            it->second = it->second && ok;
            shard.images[h].insert(std::move(t));
        }
        return shard;
    });
    PhiShard merged;
    for (auto& part : parts) {
        for (auto& [h, set] : part.images) merged.images[h].merge(set);
        for (auto& [h, ok] : part.in_cell) {
            auto [it, fresh] = merged.in_cell.try_emplace(h, true);
            it->second = it->second && ok;
        }
    }

    std::set<int> heights;
    for (const auto& [h, c] : paths.counts) heights.insert(h);
    for (const auto& [h, c] : trees.counts) heights.insert(h);
    for (int h : heights) {
        HeightCell cell;
        cell.h = h;
        cell.paths = paths.at(h);
        cell.trees = trees.at(h);
        cell.phi_image = merged.images.contains(h) ? merged.images[h].size() : 0;
        cell.phi_in_cell = !merged.in_cell.contains(h) || merged.in_cell[h];
        report.refined.push_back(cell);
    }

    std::set<int> logs;
    for (const auto& [s, c] : log_paths.counts) logs.insert(s);
    for (const auto& [s, c] : classical_trees.counts) logs.insert(s);
    for (const auto& [s, c] : aggregated.counts) logs.insert(s);
    for (int s : logs) {
        report.classical.push_back({s, log_paths.at(s), classical_trees.at(s), aggregated.at(s)});
    }
    return report;
}

TheoremReport verify_theorem(std::size_t max_n, unsigned threads) {
    if (max_n > 30) throw Error(Errc::overflow_range, "verify_theorem refuses max_n above 30");
    TheoremReport report;
    report.max_n = max_n;
    for (std::size_t n = 0; n <= max_n; ++n) report.sizes.push_back(verify_size(n, threads));
    return report;
}

}  // namespace strahler
