// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.
// Every count comparison is exact; the only tolerance is the AC1 runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "strahler/bijection.hpp"
#include "strahler/enumerate.hpp"

namespace {

using namespace strahler;

constexpr std::size_t kTheoremMaxN = 12;
constexpr double kTheoremBudgetSeconds = 60.0;
constexpr std::size_t kOracleMaxN = 6;
constexpr std::size_t kRoundTripMaxN = 10;
constexpr std::size_t kRandomPaths = 10000;
constexpr std::size_t kRandomHalfLength = 1000;
constexpr std::size_t kTreeRoundTripMaxN = 9;
constexpr std::size_t kStructureMaxN = 10;
constexpr std::uint64_t kSeed = 0x5eedf00d;

struct Outcome {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::string note;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

std::vector<DyckPath> paths_up_to(std::size_t max_n) {
    std::vector<DyckPath> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto level = all_dyck_paths(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<BinaryTree> trees_up_to(std::size_t max_n) {
    std::vector<BinaryTree> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        auto level = all_full_binary_trees(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Outcome theorem_histograms() {
    Outcome o;
    std::chrono::duration<double> secs{0};
    for (std::size_t n = 0; n <= kTheoremMaxN; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const auto paths = histogram_by_height(n);
        const auto trees = histogram_by_refined_hs(n);
        secs += std::chrono::steady_clock::now() - start;
        o.check(paths == trees, [&] { return "histograms differ at n=" + std::to_string(n); });
        o.check(paths.total() == catalan(n) && trees.total() == catalan(n),
                [&] { return "total is not Catalan at n=" + std::to_string(n); });
        o.check(paths == histogram_by_height_sharded(n, 8, default_parallelism()),
                [&] { return "sharded path histogram differs at n=" + std::to_string(n); });
        o.check(trees == histogram_by_refined_hs_sharded(n, default_parallelism()),
                [&] { return "sharded tree histogram differs at n=" + std::to_string(n); });
        for (int h = 0; h <= static_cast<int>(n); ++h) {
            o.check(paths.at(h) == oracle::paths_with_height(n, h),
                    [&] { return "transfer-matrix count differs at n=" + std::to_string(n); });
        }
    }
    o.check(secs.count() <= kTheoremBudgetSeconds, [&] { return "runtime " + std::to_string(secs.count()) + " s"; });
    std::ostringstream note;
    note.precision(2);
    note << std::fixed << secs.count() << " s single-threaded";
    o.note = note.str();
    return o;
}

Outcome dyadic_identity() {
    Outcome o;
    for (std::size_t n = 0; n <= kTheoremMaxN; ++n) {
        const auto classical = histogram_by_classical_hs(n);
        const auto log_height = histogram_by_log_height(n);
        o.check(classical == log_height, [&] { return "classical side differs at n=" + std::to_string(n); });
        o.check(dyadic_aggregate(histogram_by_refined_hs(n)) == classical,
                [&] { return "refined aggregation differs at n=" + std::to_string(n); });
        o.check(dyadic_aggregate(histogram_by_height(n)) == log_height,
                [&] { return "height aggregation differs at n=" + std::to_string(n); });
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::uint64_t at_max = 0;
    for (const auto& t : trees_up_to(kOracleMaxN)) {
        if (t.internal_count() == kOracleMaxN) ++at_max;
        o.check(refined_hs(t) == refined_hs_oracle(t), [&] { return "refined " + to_string(t); });
        o.check(classical_hs(t) == classical_hs_oracle(t), [&] { return "classical " + to_string(t); });
    }
    o.check(at_max == 132, [] { return "expected 132 trees at the largest size"; });
    o.note = std::to_string(at_max) + " trees at n=" + std::to_string(kOracleMaxN);
    return o;
}

Outcome round_trips() {
    Outcome o;
    for (const auto& d : paths_up_to(kRoundTripMaxN)) {
        o.check(phi_inverse(phi(d)) == d, [&] { return "phi " + to_string(d); });
        if (!d.empty()) {
            o.check(compose_path(d.height(), decompose_path(d)) == d, [&] { return "F " + to_string(d); });
        }
    }
    std::mt19937_64 rng(kSeed);
    for (std::size_t i = 0; i < kRandomPaths; ++i) {
        const auto d = uniform_dyck_path(kRandomHalfLength, rng);
        o.check(phi_inverse(phi(d)) == d, [&] { return "random phi " + to_string(d); });
    }
    for (const auto& t : trees_up_to(kTreeRoundTripMaxN)) {
        if (t.is_leaf()) continue;
        o.check(compose_tree(refined_hs(t), decompose_tree(t)) == t, [&] { return "G " + to_string(t); });
    }
    return o;
}

Outcome structural_identities() {
    Outcome o;
    for (unsigned s = 0; s <= 5; ++s) {
        o.check(tau((std::uint64_t{1} << s) - 1) == complete_binary(s), [&] { return "cb " + std::to_string(s); });
    }
    for (std::uint64_t r = 0; r <= 200; ++r) {
        const auto small = tau(r).vertices();
        const auto big = tau(r + 1).vertices();
        o.check(small.size() < big.size() && std::ranges::includes(big, small),
                [&] { return "nesting r=" + std::to_string(r); });
    }
    for (std::uint64_t r = 0; r <= 64; ++r) {
        o.check(refined_hs(tau(r)) == static_cast<int>(r), [&] { return "S(tau) r=" + std::to_string(r); });
    }
    for (const auto& t : trees_up_to(kStructureMaxN)) {
        if (t.is_leaf()) continue;
        const auto dec = decompose_tree(t);
        const int h = dec.h;
        const auto where = [&] { return "tree " + to_string(t); };
        o.check(refined_hs(dec.fix) == (h + 1) / 2 - 1, where);
        o.check(h / 2 <= refined_hs(dec.free) && refined_hs(dec.free) <= h - 1, where);
        for (const auto& e : dec.spine) o.check(2 * refined_hs(e.tree) <= h - letter(e.side), where);
    }
    for (const auto& d : paths_up_to(kStructureMaxN)) {
        if (d.empty()) continue;
        const auto dec = decompose_path(d);
        const int h = dec.h;
        const auto where = [&] { return "path " + to_string(d); };
        o.check(dec.fix.height() == (h + 1) / 2 - 1, where);
        o.check(h / 2 <= dec.free.height() && dec.free.height() <= h - 1, where);
        for (const auto& e : dec.spine) {
            o.check(e.eps == 1 || e.eps == -1, where);
            o.check(e.path.height() <= (e.eps == 1 ? (h + 1) / 2 - 1 : h / 2 - 1), where);
        }
    }
    return o;
}

Outcome size_preservation() {
    Outcome o;
    for (std::size_t n = 0; n <= kRoundTripMaxN; ++n) {
        std::set<BinaryTree> images;
        for (const auto& d : all_dyck_paths(n)) {
            const auto t = phi(d);
            o.check(t.internal_count() == n, [&] { return "size " + to_string(d); });
            o.check(refined_hs(t) == d.height(), [&] { return "height " + to_string(d); });
            images.insert(t);
        }
        o.check(images.size() == catalan(n), [&] { return "phi not injective at n=" + std::to_string(n); });
    }
    return o;
}

Outcome pinned_witness() {
    Outcome o;
    const auto [d, t] = golden_witness();
    const auto image = phi(d);
    o.check(std::ranges::equal(d.heights(), std::vector<int>{0, 1, 2, 3, 4, 5, 4, 3, 2, 1, 0}),
            [] { return "witness path"; });
    o.check(image == t, [] { return "stored image differs from phi"; });
    o.check(to_string(image) == "(((..).)((..).))", [&] { return "image " + to_string(image); });
    o.check(refined_hs(image) == 5, [] { return "refined HS"; });
    o.check(image.internal_count() == 5, [] { return "internal count"; });
    o.note = to_string(image);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 theorem histograms n<=12", theorem_histograms},
        {"AC2 dyadic aggregation n<=12", dyadic_identity},
        {"AC3 oracle equivalence n<=6", oracle_equivalence},
        {"AC4 round trips", round_trips},
        {"AC5 structural identities", structural_identities},
        {"AC6 size preservation n<=10", size_preservation},
        {"AC7 golden witness", pinned_witness},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.failures = 1;
            o.first_failure = std::string("exception: ") + e.what();
        }
        const bool pass = o.failures == 0;
        failed += pass ? 0 : 1;
        std::printf("%s %s checks=%llu failures=%llu", pass ? "PASS" : "FAIL", name,
                    static_cast<unsigned long long>(o.checked), static_cast<unsigned long long>(o.failures));
        if (!o.note.empty()) std::printf(" (%s)", o.note.c_str());
        if (!pass) std::printf(" first: %s", o.first_failure.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
