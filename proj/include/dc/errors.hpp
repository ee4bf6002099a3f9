#pragma once

#include <stdexcept>
#include <string>

namespace dc {

enum class errc {
    bad_argument,
    loop_edge,
    vertex_range,
    parse,
    too_large,
    disconnected,
    io,
    verification_failed,
    no_compatible_tree,
    precondition,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace dc
