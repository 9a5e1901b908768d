#pragma once

#include <stdexcept>
#include <string>

namespace slitlab {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptySystemError : public Error {
public:
    using Error::Error;
};

class MixedKindsError : public Error {
public:
    using Error::Error;
};

class OverlappingSlitsError : public Error {
public:
    using Error::Error;
};

class NonPositiveError : public Error {
public:
    using Error::Error;
};

class NonFiniteError : public Error {
public:
    using Error::Error;
};

class WrongKindError : public Error {
public:
    using Error::Error;
};

class NarrowKindUnsupportedError : public Error {
public:
    using Error::Error;
};

class PaperLiteralUnsupportedError : public Error {
public:
    using Error::Error;
};

class BadSampleCountError : public Error {
public:
    using Error::Error;
};

class TooCoarseError : public Error {
public:
    using Error::Error;
};

class TooFewNodesError : public Error {
public:
    using Error::Error;
};

// Config-file grammar violation; carries the 1-based line number.
class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Config parsed fine but describes an invalid system or run.
class SemanticError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (open/write/rename).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace slitlab
