#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strahler {

enum class Errc {
    parse_error,
    invalid_vertex,
    invalid_tree,
    invalid_path,
    vertex_not_in_tree,
    single_leaf,
    membership_violation,
    zero_height_path,
    overflow_range,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace strahler
