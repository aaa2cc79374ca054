#pragma once

#include <stdexcept>
#include <string>

namespace lapglue {

// Error codes shared by the whole library. The CLI maps these to exit codes.
enum class errc {
    index_out_of_range,
    self_loop,
    parallel_edge,
    too_small,
    too_large,
    same_edge,
    same_index,
    invalid_interface,
    invalid_bridge,
    dimension_mismatch,
    not_square,
    not_symmetric,
    vertices_adjacent,
    inexact_division,
    no_convergence,
    no_edges,
    disconnected,
    eigendecomposition_failure,
    parse_error,
    verify_mismatch,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace lapglue
