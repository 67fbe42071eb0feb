#pragma once

// Dyck paths stored as height sequences d(0..2n), the landmark indices at
// level m = floor(h/2), and the decomposition of a path into its fix, free and
// spine pieces together with its inverse.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strahler/error.hpp"
#include "strahler/tree.hpp"

namespace strahler {

class DyckPath {
public:
    // The empty path, d = (0).
    DyckPath() : heights_{0} {}
    DyckPath(std::vector<int> heights, unchecked_t);

    // Throws Errc::invalid_path unless heights is a Dyck path.
    static DyckPath from_heights(std::vector<int> heights);
    // steps are +1/-1. Throws Errc::invalid_path.
    static DyckPath from_steps(std::span<const int> steps);

    std::size_t half_length() const noexcept { return heights_.size() / 2; }
    std::size_t length() const noexcept { return heights_.size() - 1; }
    bool empty() const noexcept { return heights_.size() == 1; }
    int height() const noexcept { return max_; }

    std::span<const int> heights() const noexcept { return heights_; }
    int operator[](std::size_t i) const noexcept { return heights_[i]; }

    friend bool operator==(const DyckPath& a, const DyckPath& b) noexcept { return a.heights_ == b.heights_; }
    friend auto operator<=>(const DyckPath& a, const DyckPath& b) noexcept { return a.heights_ <=> b.heights_; }

private:
    std::vector<int> heights_;
    int max_ = 0;
};

inline int height(const DyckPath& d) noexcept { return d.height(); }

// Canonical text: one 'U' or 'D' per step; the empty path is "".
std::string to_string(const DyckPath& d);
// Accepts U/D steps or a comma-separated height list such as "0,1,0".
// Throws Errc::parse_error.
DyckPath parse_path(std::string_view text);

struct Landmarks {
    int h = 0;
    int m = 0;
    std::size_t sigma_max = 0;   // first visit to h
    std::size_t sigma_g = 0;     // last visit to m before sigma_max
    std::size_t sigma_d = 0;     // first visit to m after sigma_max
    std::size_t sigma_last = 0;  // last visit to m
    std::vector<std::size_t> rho;  // visits to m in [sigma_d, sigma_last]
    std::vector<int> eps;          // first step after each rho_j, j <= l

    std::size_t spine_length() const noexcept { return eps.size(); }

    friend bool operator==(const Landmarks&, const Landmarks&) = default;
};

// Throws Errc::zero_height_path for the empty path.
Landmarks landmarks(const DyckPath& d);

struct PathSpineEntry {
    int eps;  // +1: excursion above m, -1: excursion below m
    DyckPath path;

    friend bool operator==(const PathSpineEntry&, const PathSpineEntry&) = default;
};

struct PathDecomposition {
    int h = 0;
    DyckPath fix;
    DyckPath free;
    std::vector<PathSpineEntry> spine;

    friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// Throws Errc::zero_height_path for the empty path.
PathDecomposition decompose_path(const DyckPath& d);

// Reason the decomposition is not a valid image for height h, or nullopt.
// Requirements: h >= 1, dec.h == h, ||fix|| == ceil(h/2) - 1,
// floor(h/2) <= ||free|| <= h - 1, each eps in {-1,+1}, and each spine path
// within ceil(h/2) - 1 (eps = +1) or floor(h/2) - 1 (eps = -1).
std::optional<std::string> path_membership_error(int h, const PathDecomposition& dec);

// Inverse of decompose_path. Throws Errc::membership_violation.
DyckPath compose_path(int h, const PathDecomposition& dec);

}  // namespace strahler
