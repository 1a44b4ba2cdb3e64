#pragma once

#include <stdexcept>
#include <string>

namespace bandprime {

/// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    enum class Kind {
        parse,         // malformed PD text
        validation,    // well-formed text that is not a valid diagram
        precondition,  // input outside an operation's domain (links, non-special, ...)
        resource,      // rank cap or search budget exceeded
        inconsistency  // two independent computations disagree
    };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(Kind::parse, what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(Kind::validation, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(Kind::precondition, what) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(Kind::resource, what) {}
};

struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& what) : Error(Kind::inconsistency, what) {}
};

}  // namespace bandprime
