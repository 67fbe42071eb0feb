#include "strahler/dyck.hpp"

#include <algorithm>
#include <charconv>

namespace strahler {

namespace {

std::optional<std::string> path_defect(std::span<const int> heights) {
    if (heights.empty()) return "no heights";
    if (heights.size() % 2 == 0) return "odd length";
    if (heights.front() != 0 || heights.back() != 0) return "must start and end at 0";
    for (std::size_t i = 1; i < heights.size(); ++i) {
        if (heights[i] < 0) return "negative height at index " + std::to_string(i);
        if (heights[i] - heights[i - 1] != 1 && heights[i - 1] - heights[i] != 1) {
            return "non-unit step at index " + std::to_string(i);
        }
    }
    return std::nullopt;
}

// Copies d(first + i) transformed as sign * (d - base) - 1 for i in [0, count].
DyckPath window(const DyckPath& d, std::size_t first, std::size_t count, int sign, int base) {
    std::vector<int> out(count + 1);
    for (std::size_t i = 0; i <= count; ++i) out[i] = sign * (d[first + i] - base) - 1;
    return DyckPath(std::move(out), unchecked);
}

}  // namespace

DyckPath::DyckPath(std::vector<int> heights, unchecked_t) : heights_(std::move(heights)) {
    max_ = *std::max_element(heights_.begin(), heights_.end());
}

DyckPath DyckPath::from_heights(std::vector<int> heights) {
    if (auto why = path_defect(heights)) throw Error(Errc::invalid_path, *why);
    return DyckPath(std::move(heights), unchecked);
}

DyckPath DyckPath::from_steps(std::span<const int> steps) {
    std::vector<int> heights;
    heights.reserve(steps.size() + 1);
    heights.push_back(0);
    for (int s : steps) {
        if (s != 1 && s != -1) throw Error(Errc::invalid_path, "steps must be +1 or -1");
        heights.push_back(heights.back() + s);
    }
    return from_heights(std::move(heights));
}

std::string to_string(const DyckPath& d) {
    std::string out;
    out.reserve(d.length());
    const auto h = d.heights();
    for (std::size_t i = 1; i < h.size(); ++i) out.push_back(h[i] > h[i - 1] ? 'U' : 'D');
    return out;
}

DyckPath parse_path(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

    auto fail = [&](const std::string& why) -> DyckPath {
        throw Error(Errc::parse_error, "path '" + std::string(text.substr(0, 64)) + "': " + why);
    };

    const bool numeric = !text.empty() && text.find_first_of("0123456789,") != std::string_view::npos;
    std::vector<int> heights;
    if (numeric) {
        std::size_t pos = 0;
        while (true) {
            while (pos < text.size() && is_space(text[pos])) ++pos;
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{}) return fail("expected an integer at offset " + std::to_string(pos));
            heights.push_back(value);
            pos = static_cast<std::size_t>(ptr - text.data());
            while (pos < text.size() && is_space(text[pos])) ++pos;
            if (pos == text.size()) break;
            if (text[pos] != ',') return fail("expected ',' at offset " + std::to_string(pos));
            ++pos;
        }
    } else {
        heights.reserve(text.size() + 1);
        heights.push_back(0);
        for (char c : text) {
            if (c == 'U') {
                heights.push_back(heights.back() + 1);
            } else if (c == 'D') {
                heights.push_back(heights.back() - 1);
            } else {
                return fail(std::string("unexpected character '") + c + "'");
            }
        }
    }
    if (auto why = path_defect(heights)) return fail(*why);
    return DyckPath(std::move(heights), unchecked);
}

Landmarks landmarks(const DyckPath& d) {
    if (d.height() == 0) throw Error(Errc::zero_height_path, "landmarks need a path of positive height");
    const auto heights = d.heights();
    const std::size_t last = heights.size() - 1;
    Landmarks lm;
    lm.h = d.height();
    lm.m = lm.h / 2;

    lm.sigma_max = static_cast<std::size_t>(std::find(heights.begin(), heights.end(), lm.h) - heights.begin());
    lm.sigma_g = lm.sigma_max;
    while (heights[lm.sigma_g] != lm.m) --lm.sigma_g;
    lm.sigma_d = lm.sigma_max;
    while (heights[lm.sigma_d] != lm.m) ++lm.sigma_d;
    lm.sigma_last = last;
    while (heights[lm.sigma_last] != lm.m) --lm.sigma_last;

    for (std::size_t i = lm.sigma_d; i <= lm.sigma_last; ++i) {
        if (heights[i] == lm.m) lm.rho.push_back(i);
    }
    lm.eps.reserve(lm.rho.size() - 1);
    for (std::size_t j = 0; j + 1 < lm.rho.size(); ++j) {
        lm.eps.push_back(heights[lm.rho[j] + 1] - heights[lm.rho[j]]);
    }
    return lm;
}

PathDecomposition decompose_path(const DyckPath& d) {
    const Landmarks lm = landmarks(d);
    const int m = lm.m;
    const std::size_t two_n = d.length();

    PathDecomposition dec;
    dec.h = lm.h;
    dec.fix = window(d, lm.sigma_g + 1, lm.sigma_d - lm.sigma_g - 2, 1, m);

    std::vector<int> free;
    free.reserve(two_n - (lm.sigma_last - lm.sigma_g) + 1);
    const auto heights = d.heights();
    free.insert(free.end(), heights.begin(), heights.begin() + static_cast<std::ptrdiff_t>(lm.sigma_g) + 1);
    free.insert(free.end(), heights.begin() + static_cast<std::ptrdiff_t>(lm.sigma_last) + 1, heights.end());
    dec.free = DyckPath(std::move(free), unchecked);

    dec.spine.reserve(lm.spine_length());
    for (std::size_t j = 0; j < lm.spine_length(); ++j) {
        const int eps = lm.eps[j];
        dec.spine.push_back({eps, window(d, lm.rho[j] + 1, lm.rho[j + 1] - lm.rho[j] - 2, eps, m)});
    }
    return dec;
}

std::optional<std::string> path_membership_error(int h, const PathDecomposition& dec) {
    if (h < 1) return "height must be positive";
    if (dec.h != h) return "decomposition records h=" + std::to_string(dec.h) + ", expected " + std::to_string(h);
    const int ceil_half = (h + 1) / 2;
    const int floor_half = h / 2;
    if (dec.fix.height() != ceil_half - 1) {
        return "fix has height " + std::to_string(dec.fix.height()) + ", expected " + std::to_string(ceil_half - 1);
    }
    if (dec.free.height() < floor_half || dec.free.height() > h - 1) {
        return "free has height " + std::to_string(dec.free.height()) + ", outside [" + std::to_string(floor_half) +
               ", " + std::to_string(h - 1) + "]";
    }
    for (std::size_t j = 0; j < dec.spine.size(); ++j) {
        const auto& entry = dec.spine[j];
        if (entry.eps != 1 && entry.eps != -1) return "spine sign " + std::to_string(j + 1) + " is not +1 or -1";
        const int bound = entry.eps == 1 ? ceil_half - 1 : floor_half - 1;
        if (entry.path.height() > bound) {
            return "spine path " + std::to_string(j + 1) + " has height " + std::to_string(entry.path.height()) +
                   ", above " + std::to_string(bound);
        }
    }
    return std::nullopt;
}

DyckPath compose_path(int h, const PathDecomposition& dec) {
    if (auto why = path_membership_error(h, dec)) throw Error(Errc::membership_violation, *why);
    const int m = h / 2;
    const auto free = dec.free.heights();

    // Last visit of free to level m; exists because ||free|| >= m.
    std::size_t split = free.size() - 1;
    while (free[split] != m) --split;

    std::size_t total = free.size() + dec.fix.length() + 2;
    for (const auto& entry : dec.spine) total += entry.path.length() + 2;
    std::vector<int> out;
    out.reserve(total);

    out.insert(out.end(), free.begin(), free.begin() + static_cast<std::ptrdiff_t>(split) + 1);
    for (int v : dec.fix.heights()) out.push_back(v + m + 1);
    out.push_back(m);
    for (const auto& entry : dec.spine) {
        for (int v : entry.path.heights()) out.push_back(m + entry.eps + entry.eps * v);
        out.push_back(m);
    }
    out.insert(out.end(), free.begin() + static_cast<std::ptrdiff_t>(split) + 1, free.end());
    return DyckPath(std::move(out), unchecked);
}

}  // namespace strahler
