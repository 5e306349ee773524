#pragma once

#include <stdexcept>
#include <string>

namespace gemkit {

// Machine-readable failure codes. Every GemError carries one, and the CLI
// emits them verbatim in its error records.
enum class Err {
    LoopEdge,
    ColorClash,
    MissingColor,
    BadColor,
    BadParam,
    NotClosed,
    NotBipartite,
    Disconnected,
    NoBoundary,
    InvalidDipole,
    BadColors,
    InvalidGlueSpec,
    OddVertexCount,
    UnknownVertex,
    InvalidMap,
    InconsistentDegree,
    Mismatch,
    UnsupportedTarget,
    SyntaxError,
};

const char* err_name(Err e);

class GemError : public std::runtime_error {
public:
    GemError(Err code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
    throw GemError(code, message);
}

} // namespace gemkit
