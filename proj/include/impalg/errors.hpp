#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace impalg {

enum class errc {
    // hypergraph construction / queries
    isolated_vertex,
    duplicate_edge,
    empty_edge,
    unknown_label,
    duplicate_label,
    ground_too_large,
    empty_index_set,
    bad_index_set,
    bounds_too_large,
    // algebra
    empty_algebra,
    not_an_element,
    too_many_minimal_elements,
    // profile / polymatroid
    negative_value,
    negative_result,
    too_many_edges,
    empty_value_nonzero,
    // iso
    too_large,
    // synthesis
    conditions_fail,
    inside_overflow,
    verification_fail,
    // io
    parse_error,
};

const char* errc_name(errc code);

// Carries the failure kind plus, where it helps, the offending subset mask or index.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string message, std::uint32_t detail = 0)
        : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }
    std::uint32_t detail() const noexcept { return detail_; }

private:
    errc code_;
    std::uint32_t detail_;
};

}  // namespace impalg
