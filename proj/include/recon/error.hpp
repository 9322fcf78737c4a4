#pragma once

#include <stdexcept>
#include <string>

namespace recon {

enum class Errc {
    invalid_char,
    truncated,
    order_too_large,
    bad_argument,
    kind_unsupported_on_graph,
    vertex_not_in_set,
    wrong_direction,
    method_precondition_violated,
    source_required,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
    if (!ok) fail(code, msg);
}

}  // namespace recon
