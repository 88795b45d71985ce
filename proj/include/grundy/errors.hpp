#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when the format has no lines.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Raised by the exponential oracles when asked to run above their documented limit.
class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(const std::string& what, int n, int limit)
        : Error(what + ": n = " + std::to_string(n) + " exceeds the limit of " +
                std::to_string(limit)) {}
};

/// A consistency check inside the solver failed. Never expected on valid input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace grundy
