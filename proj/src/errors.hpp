#pragma once

#include <stdexcept>
#include <string>

namespace prg {

enum class Errc {
    ok = 0,
    invalid_parameter,
    invalid_vertex,
    invalid_edge,
    invalid_tuple,
    invalid_arity,
    size_unsupported,
    budget_exceeded,
    degenerate_density,
    precondition_failed,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "ok";
        case Errc::invalid_parameter: return "InvalidParameter";
        case Errc::invalid_vertex: return "InvalidVertex";
        case Errc::invalid_edge: return "InvalidEdge";
        case Errc::invalid_tuple: return "InvalidTuple";
        case Errc::invalid_arity: return "InvalidArity";
        case Errc::size_unsupported: return "SizeUnsupported";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::degenerate_density: return "DegenerateDensity";
        case Errc::precondition_failed: return "PreconditionFailed";
        case Errc::io_error: return "IoError";
    }
    return "unknown";
}

} // namespace prg
