#pragma once

#include <stdexcept>
#include <string>

namespace bicolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

struct HostNotCompleteError : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct LimitExceededError : Error {
    using Error::Error;
};

struct PreconditionViolatedError : Error {
    using Error::Error;
};

struct BaseTooSmallError : Error {
    using Error::Error;
};

struct ForbiddenPatternPresentError : Error {
    using Error::Error;
};

struct NonTerminationError : Error {
    using Error::Error;
};

struct NotMultipartiteError : Error {
    using Error::Error;
};

struct UnbalanceableSizesError : Error {
    using Error::Error;
};

struct HypothesisViolatedError : Error {
    using Error::Error;
};

struct NoNonMonoTriangleError : Error {
    using Error::Error;
};

struct FixtureMismatchError : Error {
    using Error::Error;
};

} // namespace bicolor
