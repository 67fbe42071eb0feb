#include "strahler/error.hpp"

namespace strahler {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::parse_error: return "parse-error";
        case Errc::invalid_vertex: return "invalid-vertex";
        case Errc::invalid_tree: return "invalid-tree";
        case Errc::invalid_path: return "invalid-path";
        case Errc::vertex_not_in_tree: return "vertex-not-in-tree";
        case Errc::single_leaf: return "tree-is-single-leaf";
        case Errc::membership_violation: return "membership-violation";
        case Errc::zero_height_path: return "zero-height-path";
        case Errc::overflow_range: return "overflow-range";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace strahler
