#pragma once

#include <stdexcept>
#include <string>

namespace spaceform {

// Failure taxonomy shared by the library and the CLI.  The numeric values are
// the CLI exit codes: bad input data, an enclosure that could not be refined
// far enough, and an exhausted search are different situations and callers
// need to tell them apart.
enum class ErrorKind : int {
    validation = 1,
    precision = 2,
    search_exhausted = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what)
        : Error(ErrorKind::validation, what) {}
};

// Raised when a certified comparison cannot be decided within the configured
// maximum precision.  Never guessed around.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what)
        : Error(ErrorKind::precision, what) {}
};

struct SearchExhaustedError : Error {
    explicit SearchExhaustedError(const std::string& what)
        : Error(ErrorKind::search_exhausted, what) {}
};

} // namespace spaceform
