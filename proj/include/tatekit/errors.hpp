#pragma once

#include <stdexcept>
#include <string>

namespace tatekit {

// Exit codes used by the CLI. Library exceptions carry the matching code so
// callers can translate failures uniformly.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitParse = 2,
    kExitPrecondition = 3,
    kExitPrecision = 4,
    kExitProperty = 5,
};

struct Error : std::runtime_error {
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
    int exit_code;
};

// Malformed input literal (series grammar, matrix literal, nerve file, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg, kExitParse) {}
};

// A documented precondition of an operation was violated.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg)
        : Error("precondition violated: " + msg, kExitPrecondition) {}
};

// Not enough stored precision to determine the requested value.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg)
        : Error("precision exhausted: " + msg, kExitPrecision) {}
};

// A property the library guarantees failed to hold (window instability,
// non one-dimensional annihilator, ...). Signals a bug or an inadequate window.
struct PropertyError : Error {
    explicit PropertyError(const std::string& msg) : Error("property violated: " + msg, kExitProperty) {}
};

}  // namespace tatekit
